import itertools

import pytest

from skeinalg.laurent import A, DELTA, mono
from skeinalg.ncalg import Element, commutator
from skeinalg.presentations import (
    PRESENTATION_NAMES,
    SKEIN_NAMES,
    TORUS_RELATION,
    f04_r,
    f04_rbar,
    f10,
    f11,
    f12,
    f12_printed,
    get_presentation,
    uaso3,
)
from skeinalg.rewrite import check_confluence


@pytest.mark.parametrize("name", PRESENTATION_NAMES)
def test_relations_normalize_to_zero(name):
    p = get_presentation(name)
    for r in p.relations:
        assert not p.nf(r)


def test_catalog():
    assert PRESENTATION_NAMES == ("f11", "f10", "f04", "f04r", "f12", "uso3")
    assert set(SKEIN_NAMES) < set(PRESENTATION_NAMES)
    with pytest.raises(KeyError):
        get_presentation("f21")


def test_punctured_torus_eq2():
    p = f11()
    lhs = p.nf(p.parse("z x3 - (A^2 x1^2 + A^-2 x2^2 - A^2 - A^-2)", p.notes))
    assert lhs == p.nf(p.notes["boundary"])


def test_punctured_torus_basis_count():
    assert len(f11().system.normal_words(3)) == 20


def test_torus_boundary_becomes_scalar():
    p = f10()
    assert p.nf(p.notes["boundary"]) == Element.scalar(p.table, -(mono(2) + mono(-2)))


def test_torus_basis_count():
    assert len(f10().system.normal_words(2)) == 10
    assert len(f10().system.normal_words(3)) == 19


@pytest.mark.parametrize("g", ["x1", "x2", "x3"])
def test_torus_relation_central_in_punctured_torus(g):
    p = f11()
    r = p.parse(TORUS_RELATION)
    assert not p.nf(commutator(r, p.gen(g)))


def test_sphere_swap_sign():
    # the consistent sign: x2 x1 = A^4 x1 x2 - A^2 (A^4 - A^-4) x3 - A^2 del p3
    p = f04_rbar()
    want = p.parse("A^4 x1 x2 - A^2 (A^4 - A^-4) x3 - A^2 del p3", p.notes)
    assert p.nf(p.parse("x2 x1")) == p.nf(want)


def test_sphere_over_r_reduces_boundary_product():
    p = f04_r()
    w = p.table.word("a1", "a2", "a3", "a4")
    nf = p.nf(Element.monomial(p.table, w))
    assert w not in nf.words()
    assert p.basis_predicate(p.table.exponents(p.table.word("x1", "x2", "x3")))
    assert p.table.word("x1", "x2", "x3") in p.nf(p.parse("x1 x2 x3")).words()


def test_sphere_eq3_with_z_note():
    p = f04_rbar()
    assert not p.nf(p.parse("x1 x2 - (A^2 x3 + A^-2 z + p3)", p.notes))


def test_twice_punctured_z_swap():
    p = f12()
    want = p.parse("z1 z2 - del y1 y2 + del x1 x2")
    assert p.nf(p.parse("z2 z1")) == want


def test_twice_punctured_one_relation_per_pair():
    p = f12()
    noncentral = [p.table.index(n) for n in p.noncentral()]
    assert len(noncentral) == 6
    pairs = {tuple(sorted(k)) for k in p.system.swaps if all(i in noncentral for i in k)}
    assert len(pairs) == 15


def test_twice_punctured_trigger_and_basis():
    p = f12()
    (rule,) = p.system.monomials
    assert [p.table.names[i] for i, e in enumerate(rule.trigger) if e] == ["x1", "x2", "y1", "y2"]
    for exps in itertools.product(range(2), repeat=7):
        assert p.basis_predicate(exps) == p.system.accepts_exponents(exps)


@pytest.mark.parametrize("g", ["a", "x1", "x2", "y1", "y2", "z1", "z2"])
def test_twice_punctured_a_central(g):
    p = f12()
    assert not p.nf(commutator(p.gen("a"), p.gen(g)))


def test_twice_punctured_eq6_constant():
    p = f12()
    eq6 = p.relations[-1]
    assert eq6.coeff(()) == A ** 2 * (mono(2) + mono(-2)) ** 2


def test_printed_twice_punctured_relations_are_not_confluent():
    assert not check_confluence(f12_printed().system, 3).ok


def test_uso3_swap():
    p = uaso3()
    assert p.nf(p.parse("y2 y1")) == p.parse("A^2 y1 y2 - A y3")
    assert len(p.system.normal_words(2)) == 10


def test_delta_is_not_a_generator():
    for name in PRESENTATION_NAMES:
        assert "del" not in get_presentation(name).table.names
    assert f11().parse("del") == Element.scalar(f11().table, DELTA)
