"""The presented skein algebras (and the cyclic U(so3)) as validated rule systems.

Catalog names: ``f11`` (punctured torus), ``f10`` (closed torus), ``f04`` and
``f04r`` (four-punctured sphere over the boundary-extended scalars and over
Z[A, A^-1]), ``f12`` (twice-punctured torus) and ``uso3`` (the cyclic
deformation of U(so3)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .expr import parse_element
from .laurent import DELTA, Laurent
from .ncalg import Element, GeneratorTable, deformed_commutator
from .rewrite import RuleSystem, orient_relation, orient_swap

__all__ = [
    "Presentation",
    "f11",
    "f10",
    "f04_rbar",
    "f04_r",
    "f12",
    "f12_printed",
    "uaso3",
    "get_presentation",
    "PRESENTATION_NAMES",
    "SKEIN_NAMES",
]


@dataclass
class Presentation:
    name: str
    table: GeneratorTable
    system: RuleSystem
    relations: list
    basis_predicate: Callable[[tuple], bool]
    notes: dict = field(default_factory=dict)
    description: str = ""

    def gen(self, name: str) -> Element:
        return Element.gen(self.table, name)

    def parse(self, text: str, env=None) -> Element:
        return parse_element(text, self.table, env)

    def nf(self, e: Element) -> Element:
        return self.system.normal_form(e)

    def mul(self, a: Element, b: Element) -> Element:
        return self.system.multiply(self.nf(a), self.nf(b))

    @property
    def weights(self):
        return self.system.weights

    def noncentral(self) -> list:
        return [n for n, c in zip(self.table.names, self.table.central) if not c]


def _build(name, table, weights, pair_relations, monomial_relations=(), **kw) -> RuleSystem:
    swaps = [orient_swap(r, weights) for r in pair_relations]
    sys = RuleSystem(table, weights, swaps, (), name=name)
    monos = []
    for rel in monomial_relations:
        monos.append(orient_relation(rel, sys))
        sys = RuleSystem(table, weights, swaps, monos, name=name)
    return sys


def _central_relations(table) -> list:
    rels = []
    n = len(table)
    for i in range(n):
        if not table.central[i]:
            continue
        for j in range(n):
            if j == i or (table.central[j] and j < i):
                continue
            gi = Element.gen(table, table.names[i])
            gj = Element.gen(table, table.names[j])
            rels.append(gi * gj - gj * gi)
    return rels


def _cyclic(table, names, u, rhs: Callable[[int], Element]) -> list:
    gens = [Element.gen(table, n) for n in names]
    return [deformed_commutator(gens[i], gens[(i + 1) % 3], u) - rhs(i) for i in range(3)]


# -- punctured torus and torus -------------------------------------------------

def _torus_table():
    return GeneratorTable.build(["x1", "x2", "x3"])


def _torus_notes(table) -> dict:
    z = parse_element("A x1 x2 - A^2 x3", table)
    boundary = parse_element("A x1 x2 x3 - A^2 x1^2 - A^-2 x2^2 - A^2 x3^2 + A^2 + A^-2", table)
    return {"z": z, "boundary": boundary}


@lru_cache(maxsize=None)
def f11() -> Presentation:
    t = _torus_table()
    gens = [Element.gen(t, n) for n in t.names]
    rels = _cyclic(t, t.names, Laurent({1: 1}), lambda i: gens[(i + 2) % 3].scale(DELTA))
    sys = _build("f11", t, (1, 1, 1), rels)
    return Presentation("f11", t, sys, rels, lambda ex: True, _torus_notes(t),
                        "punctured torus: cyclic deformation of Z[A^+-1][x1,x2,x3]")


TORUS_RELATION = "A^2 x1^2 + A^-2 x2^2 + A^2 x3^2 - A x1 x2 x3 - 2 A^2 - 2 A^-2"


@lru_cache(maxsize=None)
def f10() -> Presentation:
    base = f11()
    t = base.table
    r = parse_element(TORUS_RELATION, t)
    sys = _build("f10", t, (1, 1, 1), base.relations, [r])
    return Presentation("f10", t, sys, base.relations + [r], lambda ex: ex[0] * ex[1] * ex[2] == 0,
                        _torus_notes(t), "closed torus: f11 modulo the boundary relation")


# -- four-punctured sphere -----------------------------------------------------

def _sphere_table():
    return GeneratorTable.build(["a1", "a2", "a3", "a4", "x1", "x2", "x3"], central=["a1", "a2", "a3", "a4"])


def sphere_scalars(table) -> dict:
    """p1, p2, p3, q as elements of the boundary subalgebra."""
    p = lambda s: parse_element(s, table)  # noqa: E731
    return {
        "p1": p("a1 a2 + a3 a4"),
        "p2": p("a1 a3 + a2 a4"),
        "p3": p("a1 a4 + a2 a3"),
        "q": p("a1 a2 a3 a4 + a1^2 + a2^2 + a3^2 + a4^2"),
    }


SPHERE_RELATION = (
    "A^2 x1 x2 x3 - (A^4 x1^2 + A^-4 x2^2 + A^4 x3^2 + A^2 p1 x1 + A^-2 p2 x2 + A^2 p3 x3"
    " + q - (A^2 + A^-2)^2)"
)


def _sphere_relations(t):
    env = sphere_scalars(t)
    xs = [Element.gen(t, n) for n in ("x1", "x2", "x3")]
    ps = [env["p1"], env["p2"], env["p3"]]
    shift = Laurent({4: 1, -4: -1})
    # boundary term enters with +delta: the mirror pair of x1 x2 = A^2 x3 + A^-2 z + p3
    # forces it, and the opposite sign leaves the cubic relation non-central
    pairs = _cyclic(t, ("x1", "x2", "x3"), Laurent({2: 1}),
                    lambda i: xs[(i + 2) % 3].scale(shift) + ps[(i + 2) % 3].scale(DELTA))
    pairs += _central_relations(t)
    eq4 = parse_element(SPHERE_RELATION, t, env)
    return pairs, eq4, env


def _sphere_notes(t, env) -> dict:
    z = parse_element("A^2 x1 x2 - A^4 x3 - A^2 p3", t, env)
    return {"z": z, **env}


@lru_cache(maxsize=None)
def f04_rbar() -> Presentation:
    t = _sphere_table()
    pairs, eq4, env = _sphere_relations(t)
    sys = _build("f04", t, (0, 0, 0, 0, 1, 1, 1), pairs, [eq4])
    return Presentation("f04", t, sys, pairs + [eq4], lambda ex: ex[4] * ex[5] * ex[6] == 0,
                        _sphere_notes(t, env),
                        "four-punctured sphere over Rbar = R[a1..a4]; x1 x2 x3 reducible")


@lru_cache(maxsize=None)
def f04_r() -> Presentation:
    t = _sphere_table()
    pairs, eq4, env = _sphere_relations(t)
    sys = _build("f04r", t, (1,) * 7, pairs, [eq4])
    return Presentation("f04r", t, sys, pairs + [eq4], lambda ex: ex[0] * ex[1] * ex[2] * ex[3] == 0,
                        _sphere_notes(t, env),
                        "four-punctured sphere over R; a1 a2 a3 a4 reducible")


# -- twice-punctured torus -----------------------------------------------------

# As printed.  Not consistent: see f12_printed().
TWICE_PUNCTURED_RELATION_PRINTED = (
    "A^2 a z2 z1 - (A^2 a^2 + A^-2 z2^2 + A^6 z1^2 + (y1 y2 + A^4 x1 x2) a"
    " - (A^-1 x1 y2 + A^-1 x2 y1) z2 - (A x2 y2 + A^5 x1 y1) z1"
    " + x2 y1 x1 y2 + A^6 x1^2 + A^2 x2^2 + A^2 y1^2 + A^-2 y2^2 - A^2 (A^2 + A^-2)^2)"
)

# The a^0 part must be central modulo the commutation relations; that pins the
# x1^2 and y2^2 coefficients (everything else is as printed).
TWICE_PUNCTURED_RELATION = (
    "A^2 a z2 z1 - (A^2 a^2 + A^-2 z2^2 + A^6 z1^2 + (y1 y2 + A^4 x1 x2) a"
    " - (A^-1 x1 y2 + A^-1 x2 y1) z2 - (A x2 y2 + A^5 x1 y1) z1"
    " + x2 y1 x1 y2 + (A^6 - A^2 + A^-2) x1^2 + A^2 x2^2 + A^2 y1^2 + A^2 y2^2 - A^2 (A^2 + A^-2)^2)"
)

F12_TRIPLES = (("x1", "y1", "z1"), ("x2", "y2", "z1"), ("z2", "y1", "x2"), ("z2", "y2", "x1"))


def _f12_table():
    return GeneratorTable.build(["a", "x1", "x2", "y1", "y2", "z1", "z2"], central=["a"])


def _f12_pairs(t, z_tail: str) -> list:
    g = {n: Element.gen(t, n) for n in t.names}
    a_ = Laurent({1: 1})
    pairs = [
        g["x1"] * g["x2"] - g["x2"] * g["x1"],
        g["y1"] * g["y2"] - g["y2"] * g["y1"],
        g["z1"] * g["z2"] - g["z2"] * g["z1"] - parse_element(z_tail, t).scale(DELTA),
    ]
    for triple in F12_TRIPLES:
        pairs += _cyclic(t, triple, a_, lambda i, tr=triple: g[tr[(i + 2) % 3]].scale(DELTA))
    return pairs + _central_relations(t)


def _f12_presentation(name, z_tail, eq6_text, description) -> Presentation:
    t = _f12_table()
    pairs = _f12_pairs(t, z_tail)
    eq6 = parse_element(eq6_text, t)
    sys = _build(name, t, (0, 1, 1, 1, 1, 1, 1), pairs, [eq6])
    notes = {
        "w1": parse_element("A x1 y1 - A^2 z1", t),
        "w2": parse_element("A y1 x2 - A^2 z2", t),
    }
    # exponent order (a, x1, x2, y1, y2, z1, z2); spanning set excludes x1 x2 y1 y2 | monomial
    return Presentation(name, t, sys, pairs + [eq6],
                        lambda ex: ex[1] * ex[2] * ex[3] * ex[4] == 0, notes, description)


@lru_cache(maxsize=None)
def f12() -> Presentation:
    """Twice-punctured torus over R[a], corrected so the rewriting is confluent.

    [z1, z2] = del (y1 y2 - x1 x2) is the only quadratic right-hand side whose
    classical limit satisfies the Jacobi identity with the four cyclic triples;
    with it, A^2 z2 z1 - y1 y2 - A^4 x1 x2 (the coefficient of a in the cubic
    relation, as printed) is central.
    """
    return _f12_presentation("f12", "y1 y2 - x1 x2", TWICE_PUNCTURED_RELATION,
                             "twice-punctured torus over R[a]")


@lru_cache(maxsize=None)
def f12_printed() -> Presentation:
    """The literal reading: [z1, z2] = del (x2 y2 - x1 y1) and the cubic relation
    as printed.  Rewriting with it is not confluent (kept for comparison)."""
    return _f12_presentation("f12-printed", "x2 y2 - x1 y1", TWICE_PUNCTURED_RELATION_PRINTED,
                             "twice-punctured torus, literal relations (not confluent)")


# -- cyclic U_A(so3) -----------------------------------------------------------

@lru_cache(maxsize=None)
def uaso3() -> Presentation:
    t = GeneratorTable.build(["y1", "y2", "y3"])
    gens = [Element.gen(t, n) for n in t.names]
    rels = _cyclic(t, t.names, Laurent({1: 1}), lambda i: gens[(i + 2) % 3])
    sys = _build("uso3", t, (1, 1, 1), rels)
    return Presentation("uso3", t, sys, rels, lambda ex: True, {}, "cyclically deformed U(so3)")


_CATALOG = {
    "f11": f11,
    "f10": f10,
    "f04": f04_rbar,
    "f04r": f04_r,
    "f12": f12,
    "uso3": uaso3,
}

PRESENTATION_NAMES = tuple(_CATALOG)
# the skein algebras proper (uso3 is the comparison target of the f11 map)
SKEIN_NAMES = ("f11", "f10", "f04", "f04r", "f12")


def get_presentation(name: str) -> Presentation:
    try:
        return _CATALOG[name]()
    except KeyError:
        raise KeyError(f"unknown algebra {name!r}; choose from {', '.join(_CATALOG)}") from None
