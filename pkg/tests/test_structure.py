import random

import pytest

from skeinalg.ncalg import commutator
from skeinalg.presentations import f04_rbar, f10, f11, get_presentation
from skeinalg.structure import (
    COEFFICIENT_POOL,
    center_up_to_degree,
    cross_normalization_check,
    in_span,
    lemma3_predicate,
    lemma3_sweep,
    random_element,
    roots_of_unity_suite,
    span_rank,
    specialized_system,
    zero_divisor_probe,
)
from skeinalg.laurent import QuotientSpec, mono


def _central(pres, elements):
    for e in elements:
        for g in pres.table.names:
            assert not pres.nf(commutator(pres.gen(g), e)), (g, e)


def test_center_f10_scalars_only():
    c = center_up_to_degree(f10(), 4)
    assert len(c) == 1 and c[0].is_scalar()
    _central(f10(), c)


def test_center_f11_contains_boundary():
    p = f11()
    c = center_up_to_degree(p, 3)
    assert len(c) == 2
    _central(p, c)
    assert in_span(p.nf(p.notes["boundary"]), c)


def test_center_f04_scalars_only():
    c = center_up_to_degree(f04_rbar(), 2)
    assert len(c) == 1 and c[0].is_scalar()


def test_center_dimension_monotone():
    dims = [len(center_up_to_degree(f11(), d)) for d in range(4)]
    assert dims == sorted(dims) and dims[-1] == 2


def test_center_rejects_negative_degree():
    with pytest.raises(ValueError):
        center_up_to_degree(f10(), -1)


def test_span_rank():
    p = f11()
    a, b = p.parse("x1 + x2"), p.parse("x1 - x2")
    assert span_rank([a, b]) == 2
    assert span_rank([a, a.scale(mono(3))]) == 1
    assert in_span(p.parse("x1"), [a, b])
    assert not in_span(p.parse("x3"), [a, b])


def test_random_element_is_seeded():
    words = f11().system.normal_words(3, 3)
    e1 = random_element(f11(), 3, random.Random(5), words=words)
    e2 = random_element(f11(), 3, random.Random(5), words=words)
    assert e1 == e2 and e1
    assert all(c in COEFFICIENT_POOL for _, c in e1.items())


@pytest.mark.parametrize("name", ["f11", "f04"])
def test_zero_divisor_probe(name):
    rep = zero_divisor_probe(get_presentation(name), 100, 3, seed=1)
    assert rep.ok and rep.trials == 100


def test_basis_monomial_product_nonzero():
    p = f11()
    assert p.mul(p.gen("x1"), p.gen("x2"))


def test_zero_divisor_probe_needs_trials():
    with pytest.raises(ValueError):
        zero_divisor_probe(f11(), 0, 2, 0)


def test_lemma3_example():
    assert lemma3_predicate((1, 0), (0, 1), (0, 1), (1, 0))


@pytest.mark.parametrize("args", [
    ((1, 0), (1, 0), (0, 1), (0, 1)),      # v1 == v2
    ((1, 0), (0, 1), (0, 1), (0, 1)),      # sums differ
    ((1, 0, 0), (0, 1), (0, 1), (1, 0)),   # dimensions differ
])
def test_lemma3_preconditions(args):
    with pytest.raises(ValueError):
        lemma3_predicate(*args)


def test_lemma3_sweep():
    checked, failures = lemma3_sweep(3)
    assert checked > 0 and failures == []


def test_lemma3_three_dimensional():
    assert lemma3_predicate((1, 2, 0), (0, 1, 1), (3, 0, 1), (4, 1, 0))


def test_cross_normalization():
    assert cross_normalization_check(trials=40, length=4, seed=3).ok


def test_specialized_commutator_examples():
    p = f11()
    x1, x2 = p.gen("x1"), p.gen("x2")
    at_minus_one = specialized_system(p, "A=-1")
    assert not at_minus_one.normal_form(commutator(x1, x2))
    quarter = specialized_system(p, QuotientSpec(mono(2) + 1))
    assert quarter.normal_form(commutator(x1, x2))
    assert not quarter.normal_form(commutator(quarter.multiply(x1, x1), x2))


def test_roots_of_unity_suite():
    rep = roots_of_unity_suite(D=3)
    assert rep.ok, [c.name for c in rep.failures]
    names = [c.name for c in rep.checks]
    assert any("f04 mod A^2+1" in n for n in names)
