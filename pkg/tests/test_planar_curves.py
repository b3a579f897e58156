import pytest
from hypothesis import given
from hypothesis import strategies as st

from skeinalg.laurent import ONE, mono
from skeinalg.presentations import f04_rbar
from skeinalg.planar_curves import (
    BASE_CURVES,
    TripleLink,
    calibrate_coordinates,
    coordinates,
    lemma4_exponent,
    lemma4_suite,
    lemma4_verify,
    planar_curve,
    slope_of,
    to_planar_links,
    z_note_identity,
)
from skeinalg.torus_curves import LatticeLink, farey_parents


def test_triple_link_invariants():
    t = TripleLink(2, 0, 4)
    assert t.complexity_sum == 6 and t.complexity_sq == 20
    assert t + TripleLink(1, 1, 1) == TripleLink(3, 1, 5)
    with pytest.raises(ValueError):
        TripleLink(1, 0, 0)
    with pytest.raises(ValueError):
        TripleLink(-2, 0, 0)


def test_exponent_examples():
    assert lemma4_exponent((2, 0, 0), (0, 2, 0)) == 2
    assert lemma4_exponent((0, 2, 0), (2, 0, 0)) == -2
    assert lemma4_exponent((3, 1, 1), (3, 1, 1)) == 0


_triples = st.builds(lambda p, a, b, c: TripleLink(2 * a + p, 2 * b + p, 2 * c + p),
                     st.integers(0, 1), st.integers(0, 5), st.integers(0, 5), st.integers(0, 5))
_even = st.builds(lambda a, b, c: TripleLink(2 * a, 2 * b, 2 * c),
                  st.integers(0, 5), st.integers(0, 5), st.integers(0, 5))


@given(_triples, _triples)
def test_exponent_antisymmetric(t, u):
    assert lemma4_exponent(t, u) == -lemma4_exponent(u, t)
    assert lemma4_exponent(t, t) == 0


@given(_even, _even, _triples)
def test_exponent_additive(t, t2, u):
    assert lemma4_exponent(t + t2, u) == lemma4_exponent(t, u) + lemma4_exponent(t2, u)
    assert lemma4_exponent(u, t + t2) == lemma4_exponent(u, t) + lemma4_exponent(u, t2)


def test_exponent_parity_error():
    with pytest.raises(ValueError):
        lemma4_exponent((1, 0, 0), (0, 1, 0))


def test_calibration_is_consistent():
    cal = calibrate_coordinates()
    c = cal.coords
    assert set(c) == {"x1", "x2", "x3", "z"}
    assert c["x3"] == c["x1"] + c["x2"]
    assert lemma4_exponent(c["x1"], c["x2"]) == 2
    assert all(row[-1] for row in cal.evidence)
    assert cal.alternatives >= 1
    for name, v in BASE_CURVES.items():
        assert coordinates(v) == c[name]


def test_x1_x2_leading_term():
    r = lemma4_verify((1, 0), (0, 1))
    assert r.ok and r.expected_exponent == 2
    total = r.left + r.right
    lead = [k for k in r.expansion if coordinates(k) == total]
    assert r.expansion[lead[0]] == mono(2)


def test_x1_squared_leading_term():
    r = lemma4_verify((1, 0), (1, 0))
    assert r.ok and r.expected_exponent == 0
    assert r.expansion == {(LatticeLink(2, 0), (0, 0, 0, 0)): ONE}


def test_x1_z_and_z_x3():
    c = calibrate_coordinates().coords
    r = lemma4_verify((1, 0), (1, -1))
    assert r.ok and r.expected_exponent == lemma4_exponent(c["x1"], c["z"])
    assert lemma4_verify((1, -1), (1, 1)).ok


def test_suite_all_pass():
    reports = lemma4_suite(3)
    assert len(reports) == 48
    bad = [(r.label, r.failures) for r in reports if not r.ok]
    assert not bad


def test_z_note_identities():
    res = z_note_identity()
    assert not res["eq3"] and not res["zx3"]


def test_z_matches_definition():
    p = f04_rbar()
    z = p.parse("A^2 x1 x2 - A^4 x3 - A^2 p3", p.notes)
    assert p.nf(z) == planar_curve((1, -1))


def test_slope_of_round_trip():
    for v in [(1, 0), (0, 1), (1, 1), (1, -1), (2, 1), (1, 2), (3, -2)]:
        assert slope_of(coordinates(v)) == LatticeLink.of(v)
    with pytest.raises(ValueError):
        slope_of((2, 2, 2))


def test_planar_curve_parent_independence():
    for v in [(2, 1), (1, 2), (3, 1), (2, -1), (3, 2)]:
        base = planar_curve(v)
        for pair in farey_parents(v):
            assert planar_curve(v, pair) == base


def test_boundary_monomials_in_expansion():
    p = f04_rbar()
    e = p.parse("a4 x1 + a1")
    exp = to_planar_links(e)
    assert exp == {(LatticeLink(1, 0), (0, 0, 0, 1)): ONE, (LatticeLink(0, 0), (1, 0, 0, 0)): ONE}
    assert coordinates((LatticeLink(1, 0), (0, 0, 0, 1))) == coordinates((1, 0)) + TripleLink(1, 1, 1)
