import random

import pytest

from skeinalg.laurent import DELTA, ONE, QuotientSpec, is_unit, mono, scalar_map
from skeinalg.maps import (
    MissingImageError,
    boundary_solution,
    check_homomorphism,
    eq5_identity_check,
    f04_to_torus_check,
    maps_suite,
    parse_rule,
    specialize_presentation,
    uso3_map_check,
)
from skeinalg.ncalg import commutator
from skeinalg.presentations import f04_rbar, f10, f11, uaso3
from skeinalg.structure import random_word_element


def test_uso3_images():
    src, dst = f11(), uaso3()
    good = check_homomorphism(src, dst, {f"x{i}": dst.gen(f"y{i}").scale(DELTA) for i in (1, 2, 3)})
    assert good and not any(good)
    bad = check_homomorphism(src, dst, {f"x{i}": f"y{i}" for i in (1, 2, 3)})
    assert any(bad)


def test_identity_into_quotient():
    res = check_homomorphism(f11(), f10(), {n: n for n in ("x1", "x2", "x3")})
    assert not any(res)


def test_missing_image():
    with pytest.raises(MissingImageError):
        check_homomorphism(f11(), f10(), {"x1": "x1"})


def test_images_respect_source_normal_forms():
    # a well-defined map sends e and NF(e) to the same normal form
    from skeinalg.ncalg import substitute_generators

    src, dst = f11(), uaso3()
    imgs = {f"x{i}": dst.gen(f"y{i}").scale(DELTA) for i in (1, 2, 3)}
    rng = random.Random(4)
    for _ in range(20):
        e = random_word_element(src, 4, rng)
        a = dst.nf(substitute_generators(e, imgs, dst.table))
        b = dst.nf(substitute_generators(src.nf(e), imgs, dst.table))
        assert a == b


def test_eq5_boundary_identities():
    rep = eq5_identity_check()
    assert rep.ok and len(rep.checks) == 4


def test_eq5_control():
    rep = eq5_identity_check((ONE,) * 4)
    assert not rep.checks[0].ok


def test_boundary_solution_values():
    sol = boundary_solution(f10().table)
    s = mono(1) + mono(-1)
    assert [sol[f"a{i}"].coeff(()) for i in range(1, 5)] == [s, s, s, -s]


def test_f04_to_torus():
    rep = f04_to_torus_check()
    assert rep.ok, [(c.name, c.detail) for c in rep.failures]
    assert any("-2A^2 - 2A^-6" in c.name for c in rep.checks)


def test_f04_to_torus_control():
    assert not f04_to_torus_check((ONE,) * 4).ok


def test_uso3_report_and_suite():
    assert uso3_map_check().ok
    rep = maps_suite()
    assert rep.ok and len(rep.checks) >= 10


def test_parse_rule():
    assert parse_rule("A=-1") == "A=-1"
    assert parse_rule(" A = -1 ") == "A=-1"
    assert parse_rule("A->A^2") == "A->A^2"
    q = parse_rule("A^2+1")
    assert isinstance(q, QuotientSpec) and q.modulus == mono(2) + 1
    with pytest.raises(ValueError):
        parse_rule(3)


def test_specialize_f11_at_minus_one_commutes():
    sp = specialize_presentation(f11(), "A=-1")
    assert sp.name == "f11[A=-1]"
    assert sp.nf(sp.parse("x2 x1")) == sp.parse("x1 x2")
    for a, b in [("x1", "x2"), ("x2", "x3"), ("x3", "x1")]:
        assert not sp.nf(commutator(sp.gen(a), sp.gen(b)))


def test_specialize_f10_monomial_rule():
    p = f10()
    sp = specialize_presentation(p, "A=-1")
    f = scalar_map("A=-1")
    rhs = p.nf(p.parse("x1 x2 x3")).map_coefficients(f)
    assert sp.nf(sp.parse("x1 x2 x3")) == sp.nf(rhs)
    assert sp.nf(sp.parse("x1 x2 x3")) == sp.nf(sp.parse("-x1^2 - x2^2 - x3^2 + 4"))


def test_specialize_f04_quarter_is_commutative():
    sp = specialize_presentation(f04_rbar(), "A^2+1")
    for a, b in [("x1", "x2"), ("x2", "x3"), ("x3", "x1")]:
        assert not sp.nf(commutator(sp.gen(a), sp.gen(b)))


@pytest.mark.parametrize("rule", ["A=-1", "A^2-1", "A^2+1", "A^4-1"])
@pytest.mark.parametrize("maker", [f11, f10, f04_rbar])
def test_specialization_commutes_with_nf(rule, maker):
    p = maker()
    sp = specialize_presentation(p, rule)
    f = scalar_map(parse_rule(rule))
    rng = random.Random(11)
    for _ in range(15):
        e = random_word_element(p, 4, rng)
        assert sp.nf(p.nf(e).map_coefficients(f)) == sp.nf(e.map_coefficients(f))


def test_delta_not_a_unit():
    assert DELTA and not is_unit(DELTA)
