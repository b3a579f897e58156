"""Links on the torus and punctured torus as lattice points.

A link is ``(p, q)`` up to sign: gcd(p, q) parallel copies of the slope p/q
curve.  Curves are built from the base triangle x1 = (1,0), x2 = (0,1),
x3 = (1,1), z = (1,-1) by resolving products of Farey neighbours.  For v, w
meeting once,

    curve(v) curve(w) = A^s curve(v+w) + A^-s curve(v-w),   s = sign det(v, w),

which gives x1 x2 = A (1,1) + A^-1 (1,-1) for (v, w) = ((1,0), (0,1)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Tuple

from .laurent import ONE, Laurent, is_unit, mono, unit_inverse
from .ncalg import Element
from .presentations import Presentation, get_presentation

__all__ = [
    "LatticeLink",
    "LinkBoundError",
    "intersection_number",
    "det",
    "leading_weight",
    "farey_parents",
    "curve_element",
    "curve_via",
    "LinkTable",
    "link_table",
    "to_link_basis",
    "from_link_basis",
    "Lemma2Report",
    "lemma2_verify",
    "links_up_to",
]

TORUS_TARGETS = ("f11", "f10")


@dataclass(frozen=True, order=True)
class LatticeLink:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or (self.p == 0 and self.q < 0):
            object.__setattr__(self, "p", -self.p)
            object.__setattr__(self, "q", -self.q)

    @classmethod
    def of(cls, v) -> "LatticeLink":
        if isinstance(v, LatticeLink):
            return v
        p, q = v
        return cls(int(p), int(q))

    @property
    def vec(self) -> tuple:
        return (self.p, self.q)

    @property
    def multiplicity(self) -> int:
        return math.gcd(self.p, self.q)

    def is_empty(self) -> bool:
        return self.p == 0 and self.q == 0

    def is_primitive(self) -> bool:
        return self.multiplicity == 1

    def primitive(self) -> "LatticeLink":
        g = self.multiplicity
        return self if g <= 1 else LatticeLink(self.p // g, self.q // g)

    @property
    def complexity(self) -> int:
        return self.p * self.p + self.q * self.q

    def __str__(self):
        return f"({self.p},{self.q})"


class LinkBoundError(ValueError):
    def __init__(self, required: int, bound: int):
        self.required = required
        self.bound = bound
        super().__init__(f"link table bound {bound} too small; weight {required} required")


def det(v, w) -> int:
    return v[0] * w[1] - v[1] * w[0]


def intersection_number(v, w) -> int:
    v, w = LatticeLink.of(v), LatticeLink.of(w)
    return abs(det(v.vec, w.vec))


def leading_weight(v) -> int:
    """Weight of the leading normal word of curve(v)."""
    p, q = LatticeLink.of(v).vec
    if p * q < 0:
        return abs(p) + abs(q)
    return max(abs(p), abs(q))


def _presentation(target) -> Presentation:
    pres = target if isinstance(target, Presentation) else get_presentation(target)
    if pres.name not in TORUS_TARGETS:
        raise ValueError(f"curve calculus needs f11 or f10, not {pres.name}")
    return pres


_BASE = {(1, 0): "x1", (0, 1): "x2", (1, 1): "x3"}


def farey_parents(v) -> list:
    """All ordered (v1, v2) with v1 + v2 = v, |det(v1, v2)| = 1 and v1, v2,
    v1 - v2 of smaller complexity; det = +1 orders first.

    The unordered pair is unique for primitive v, so the two orders are the
    two genuinely different resolutions (they differ by a commutation
    relation)."""
    v = LatticeLink.of(v)
    if not v.is_primitive():
        raise ValueError(f"{v} is not primitive")
    c = v.complexity
    r = math.isqrt(c)
    out = []
    for a in range(-r, r + 1):
        for b in range(-r, r + 1):
            v1 = (a, b)
            v2 = (v.p - a, v.q - b)
            if abs(det(v1, v2)) != 1:
                continue
            d = (a - v2[0], b - v2[1])
            if max(a * a + b * b, v2[0] ** 2 + v2[1] ** 2, d[0] ** 2 + d[1] ** 2) < c:
                out.append((v1, v2))
    out.sort(key=lambda pr: (-det(*pr), pr))
    return out


_curve_cache: Dict[Tuple[str, LatticeLink], Element] = {}


def curve_element(v, target="f11") -> Element:
    """Normal form of the link v in f11 or f10."""
    pres = _presentation(target)
    v = LatticeLink.of(v)
    key = (pres.name, v)
    hit = _curve_cache.get(key)
    if hit is not None:
        return hit
    if v.is_empty():
        out = Element.one(pres.table)
    elif not v.is_primitive():
        prim = curve_element(v.primitive(), pres)
        out = Element.one(pres.table)
        for _ in range(v.multiplicity):
            out = pres.system.multiply(out, prim)
    elif v.vec in _BASE:
        out = pres.nf(pres.gen(_BASE[v.vec]))
    elif v.vec == (1, -1):
        out = pres.nf(pres.notes["z"])
    else:
        parents = farey_parents(v)
        if not parents:
            raise RuntimeError(f"no Farey parents for {v}")
        out = curve_via(v, *parents[0], target=pres)
    _curve_cache[key] = out
    return out


def curve_via(v, v1, v2, target="f11") -> Element:
    """curve(v) resolved through the given parents, which must satisfy
    v1 + v2 = v (up to sign) and |det(v1, v2)| = 1."""
    pres = _presentation(target)
    v = LatticeLink.of(v)
    s = det(v1, v2)
    total = (v1[0] + v2[0], v1[1] + v2[1])
    if abs(s) != 1 or LatticeLink.of(total) != v:
        raise ValueError(f"{v1}, {v2} are not Farey parents of {v}")
    c1, c2 = curve_element(v1, pres), curve_element(v2, pres)
    cd = curve_element((v1[0] - v2[0], v1[1] - v2[1]), pres)
    # c1 c2 = A^s curve(v) + A^-s curve(v1 - v2)
    prod = pres.system.multiply(c1, c2)
    return (prod - cd.scale(mono(-s))).scale(mono(-s))


def links_up_to(max_weight: int) -> list:
    """Canonical non-empty links whose leading weight is at most max_weight."""
    out = []
    for p in range(0, max_weight + 1):
        for q in range(-max_weight, max_weight + 1):
            v = LatticeLink(p, q)
            if v.vec != (p, q) or v.is_empty():
                continue
            if leading_weight(v) <= max_weight:
                out.append(v)
    return sorted(out, key=lambda v: (v.complexity, v))


@dataclass
class LinkTable:
    """Normal forms of basis links (times powers of the boundary for f11),
    indexed by leading word."""

    target: str
    bound: int
    entries: dict = field(default_factory=dict)  # basis key -> Element
    by_lead: dict = field(default_factory=dict)  # leading word -> basis key

    def element(self, key) -> Element:
        return self.entries[key]


_tables: Dict[str, LinkTable] = {}


def _boundary_powers(pres, k_max):
    out = [Element.one(pres.table)]
    d = pres.nf(pres.notes["boundary"])
    for _ in range(k_max):
        out.append(pres.system.multiply(out[-1], d))
    return out


def link_table(target="f10", bound: int = 6) -> LinkTable:
    pres = _presentation(target)
    have = _tables.get(pres.name)
    if have is not None and have.bound >= bound:
        return have
    sys = pres.system
    table = LinkTable(pres.name, bound)
    punctured = pres.name == "f11"
    powers = _boundary_powers(pres, bound // 3 if punctured else 0)
    for v in links_up_to(bound):
        c = curve_element(v, pres)
        ks = range(0, (bound - leading_weight(v)) // 3 + 1) if punctured else (0,)
        for k in ks:
            e = c if k == 0 else sys.multiply(c, powers[k])
            key = (v, k) if punctured else v
            w, lc = e.leading(sys.key)
            if w in table.by_lead:
                raise RuntimeError(f"links {table.by_lead[w]} and {key} share a leading word")
            table.entries[key] = e
            table.by_lead[w] = key
    if punctured:
        for k in range(1, bound // 3 + 1):
            key = (LatticeLink(0, 0), k)
            e = powers[k]
            w, _ = e.leading(sys.key)
            table.entries[key] = e
            table.by_lead[w] = key
    _tables[pres.name] = table
    return table


def _empty_key(pres):
    return (LatticeLink(0, 0), 0) if pres.name == "f11" else LatticeLink(0, 0)


def to_link_basis(e: Element, target="f10", bound: int = None) -> dict:
    """Expand e over the link basis.

    Keys are LatticeLink for f10 and (LatticeLink, boundary exponent) for f11;
    the empty link (0,0) stands for the scalars.
    """
    pres = _presentation(target)
    sys = pres.system
    e = pres.nf(e)
    if e.is_zero():
        return {}
    need = max(sys.weight(w) for w in e.words())
    if bound is not None and need > bound:
        raise LinkBoundError(need, bound)
    table = link_table(pres, max(need, 1) if bound is None else bound)
    out: dict = {}
    while e:
        w, c = e.leading(sys.key)
        if not w:
            key = _empty_key(pres)
            out[key] = out.get(key, Laurent()) + c
            e = e - Element.scalar(pres.table, c)
            continue
        key = table.by_lead.get(w)
        if key is None:
            if sys.weight(w) > table.bound:
                raise LinkBoundError(sys.weight(w), table.bound)
            return _dense_expand(pres, table, pres.nf(e), out)
        entry = table.entries[key]
        lc = entry.coeff(w)
        if not is_unit(lc):
            return _dense_expand(pres, table, e, out)
        f = c * unit_inverse(lc)
        out[key] = out.get(key, Laurent()) + f
        e = e - entry.scale(f)
    return {k: v for k, v in out.items() if v}


def _dense_expand(pres, table, e, partial):
    # fallback when the table is not unitriangular at some word; never hit for
    # the torus tables (see the triangularity test) but kept exact
    from .linalg import solve_exact

    keys = list(table.entries)
    words = sorted({w for k in keys for w in table.entries[k].words()} | set(e.words()), key=pres.system.key)
    rows = [[table.entries[k].coeff(w) for k in keys] for w in words]
    rhs = [e.coeff(w) for w in words]
    sol = solve_exact(rows, rhs)
    if sol is None:
        raise ValueError("element is not in the span of the link table")
    out = dict(partial)
    for k, s in zip(keys, sol):
        if s:
            out[k] = out.get(k, Laurent()) + s
    return {k: v for k, v in out.items() if v}


def from_link_basis(expansion: dict, target="f10") -> Element:
    pres = _presentation(target)
    punctured = pres.name == "f11"
    out = Element.zero(pres.table)
    powers = None
    for key, c in expansion.items():
        if punctured:
            v, k = key
            if powers is None or len(powers) <= k:
                powers = _boundary_powers(pres, max(k, 1))
            e = pres.system.multiply(curve_element(v, pres), powers[k])
        else:
            e = curve_element(key, pres)
        out = out + e.scale(c)
    return out


# -- product-to-sum -------------------------------------------------------------------

@dataclass
class Lemma2Report:
    v: LatticeLink
    w: LatticeLink
    target: str
    intersection: int
    vw: dict
    wv: dict
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _in_parallelogram(u, v, w) -> bool:
    """u in the closed parallelogram with vertices +-(v+w), +-(v-w)."""
    d = det(v, w)
    if d:
        alpha = Fraction(det(u, w), d)
        beta = Fraction(det(v, u), d)
        return abs(alpha) <= 1 and abs(beta) <= 1
    # parallel: the segment between -(v+w) and v+w (which contains +-(v-w))
    if det(u, v) or det(u, w):
        return False
    reach = max(abs((v[0] + w[0]) ** 2 + (v[1] + w[1]) ** 2), (v[0] - w[0]) ** 2 + (v[1] - w[1]) ** 2)
    return u[0] ** 2 + u[1] ** 2 <= reach


def _link_of(key):
    return key[0] if isinstance(key, tuple) else key


def _corner_coeffs(exp: dict, corner: LatticeLink) -> dict:
    return {k: c for k, c in exp.items() if _link_of(k) == corner}


def lemma2_verify(v, w, target="f10") -> Lemma2Report:
    pres = _presentation(target)
    v, w = LatticeLink.of(v), LatticeLink.of(w)
    cv, cw = curve_element(v, pres), curve_element(w, pres)
    vw = to_link_basis(pres.system.multiply(cv, cw), pres)
    wv = to_link_basis(pres.system.multiply(cw, cv), pres)
    n = intersection_number(v, w)
    rep = Lemma2Report(v, w, pres.name, n, vw, wv)
    for label, exp in (("vw", vw), ("wv", wv)):
        for key in exp:
            u = _link_of(key)
            if not _in_parallelogram(u.vec, v.vec, w.vec):
                rep.failures.append(f"{label}: {u} lies outside the parallelogram")
    s = det(v.vec, w.vec)
    zero_key = (lambda u: (u, 0)) if pres.name == "f11" else (lambda u: u)
    if s == 0:
        total = LatticeLink(v.p + w.p, v.q + w.q)
        for label, exp in (("vw", vw), ("wv", wv)):
            if exp != {zero_key(total): ONE}:
                rep.failures.append(f"{label}: parallel product is not the single link {total}")
        return rep
    plus = LatticeLink(v.p + w.p, v.q + w.q)
    minus = LatticeLink(v.p - w.p, v.q - w.q)
    sign = 1 if s > 0 else -1
    for label, exp, e in (("vw", vw, sign), ("wv", wv, -sign)):
        for corner, expo in ((plus, e * n), (minus, -e * n)):
            got = _corner_coeffs(exp, corner)
            want = {zero_key(corner): mono(expo)}
            if got != want:
                rep.failures.append(f"{label}: corner {corner} has {got}, expected A^{expo}")
    return rep

