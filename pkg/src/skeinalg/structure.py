"""Truncated checks of the structural theorems: centers, zero divisors,
the length inequality and the root-of-unity degenerations."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from .expr import format_element
from .laurent import DELTA, ONE, Laurent, QuotientSpec, mono, scalar_map
from .linalg import gauss_jordan, nullspace
from .ncalg import Element, commutator
from .presentations import Presentation, f04_r, f04_rbar, get_presentation, SKEIN_NAMES
from .report import Report

__all__ = [
    "COEFFICIENT_POOL",
    "random_element",
    "random_word_element",
    "center_up_to_degree",
    "span_rank",
    "in_span",
    "ZeroDivisorReport",
    "zero_divisor_probe",
    "lemma3_predicate",
    "lemma3_sweep",
    "cross_normalization_check",
    "specialized_system",
    "roots_of_unity_suite",
]

COEFFICIENT_POOL = (ONE, -ONE, mono(1), mono(1, -1), mono(-1), mono(-1, -1), DELTA)


def _candidate_words(pres: Presentation, D: int, scalar_degree: int = 0, include_scalars: bool = True):
    sys = pres.system
    central = pres.table.central
    out = []
    for w in sys.normal_words(D, D + scalar_degree):
        nc = sum(1 for i in w if not central[i])
        cd = len(w) - nc
        if nc == 0 and any(central):
            # pure boundary monomials are central by construction
            if include_scalars and not w:
                out.append(w)
            continue
        if cd <= scalar_degree:
            out.append(w)
    return out


def random_element(pres: Presentation, D: int, rng: random.Random, max_terms: int = 4,
                   words: Optional[list] = None) -> Element:
    """Nonzero combination of 1..max_terms distinct basis words of weight <= D
    (length <= D as well, which bounds words in weight-zero letters)."""
    if words is None:
        words = pres.system.normal_words(D, D)
    k = rng.randint(1, min(max_terms, len(words)))
    terms = {w: rng.choice(COEFFICIENT_POOL) for w in rng.sample(words, k)}
    return Element(pres.table, terms)


def random_word_element(pres: Presentation, length: int, rng: random.Random, max_terms: int = 4) -> Element:
    """Like random_element, but over arbitrary (unsorted) words of length 1..length."""
    n = len(pres.table)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        w = tuple(rng.randrange(n) for _ in range(rng.randint(1, length)))
        terms[w] = rng.choice(COEFFICIENT_POOL)
    e = Element(pres.table, terms)
    return e if e else Element.one(pres.table)


# -- centers ---------------------------------------------------------------------

def center_up_to_degree(pres: Presentation, D: int, scalar_degree: int = 1) -> List[Element]:
    """A spanning set, over the fraction field, of central elements supported on
    basis words of weight <= D.

    With central generators (boundary curves) present, candidates are basis
    words with at least one noncentral letter times boundary monomials of
    degree <= scalar_degree, and the constant 1 stands for the boundary
    scalars.  Every returned element is rechecked against all generators.
    """
    if D < 0:
        raise ValueError("D must be nonnegative")
    sys = pres.system
    cands = _candidate_words(pres, D, scalar_degree if any(pres.table.central) else 0)
    gens = [Element.gen(pres.table, n) for n in pres.noncentral()]
    rows_by_word: dict = {}
    for j, w in enumerate(cands):
        m = Element.monomial(pres.table, w)
        for gi, g in enumerate(gens):
            c = sys.normal_form(commutator(g, m))
            for u, coef in c.items():
                rows_by_word.setdefault((gi, u), {})[j] = coef
    rows = [[r.get(j, Laurent()) for j in range(len(cands))] for r in rows_by_word.values()]
    kernel = nullspace(rows, len(cands)) if cands else []
    out = []
    for v in kernel:
        e = Element(pres.table, {w: c for w, c in zip(cands, v) if c})
        for g in gens:
            if sys.normal_form(commutator(g, e)):
                raise ArithmeticError(f"kernel vector {e} is not central")
        out.append(e)
    if any(pres.table.central) and () not in cands:
        out.insert(0, Element.one(pres.table))
    out.sort(key=lambda e: max(sys.key(w) for w in e.words()))
    return out


def _matrix(elements: Sequence[Element]):
    words = sorted({w for e in elements for w in e.words()})
    return [[e.coeff(w) for w in words] for e in elements], len(words)


def span_rank(elements: Sequence[Element]) -> int:
    """Rank over the fraction field of Z[A, A^-1]."""
    if not elements:
        return 0
    rows, n = _matrix(elements)
    if n == 0:
        return 0
    return len(gauss_jordan(rows, n)[1])


def in_span(target: Element, elements: Sequence[Element]) -> bool:
    return span_rank(list(elements) + [target]) == span_rank(elements)


# -- zero divisors -----------------------------------------------------------------

@dataclass
class ZeroDivisorReport:
    algebra: str
    trials: int
    degree: int
    seed: int
    counterexamples: list = field(default_factory=list)  # (alpha, beta) as text

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def zero_divisor_probe(pres: Presentation, trials: int, D: int, seed: int) -> ZeroDivisorReport:
    if trials < 1:
        raise ValueError("trials must be positive")
    rng = random.Random(seed)
    words = pres.system.normal_words(D, D)
    rep = ZeroDivisorReport(pres.name, trials, D, seed)
    for _ in range(trials):
        a = random_element(pres, D, rng, words=words)
        b = random_element(pres, D, rng, words=words)
        if not pres.system.multiply(a, b):
            key = pres.system.key
            rep.counterexamples.append((format_element(a, key), format_element(b, key)))
    return rep


# -- length inequality -----------------------------------------------------------------------

def _norm2(v) -> int:
    return sum(x * x for x in v)


def _add(v, w):
    return tuple(a + b for a, b in zip(v, w))


def lemma3_predicate(v1, v2, w1, w2) -> bool:
    """max(|v1+w2|^2, |v2+w1|^2) > |v1+w1|^2, given v1+w1 = v2+w2 and v1 != v2."""
    v1, v2, w1, w2 = (tuple(int(x) for x in t) for t in (v1, v2, w1, w2))
    if not (len(v1) == len(v2) == len(w1) == len(w2)):
        raise ValueError("vectors must have the same dimension")
    if _add(v1, w1) != _add(v2, w2):
        raise ValueError("need v1 + w1 = v2 + w2")
    if v1 == v2:
        raise ValueError("need v1 != v2")
    return max(_norm2(_add(v1, w2)), _norm2(_add(v2, w1))) > _norm2(_add(v1, w1))


def lemma3_sweep(radius: int = 3) -> tuple:
    """Every valid quadruple of plane vectors with entries in [-radius, radius].

    Returns (number checked, list of failures).
    """
    box = list(itertools.product(range(-radius, radius + 1), repeat=2))
    inside = set(box)
    checked, failures = 0, []
    for v1, w1, v2 in itertools.product(box, repeat=3):
        if v1 == v2:
            continue
        w2 = (v1[0] + w1[0] - v2[0], v1[1] + w1[1] - v2[1])
        if w2 not in inside:
            continue
        checked += 1
        if not lemma3_predicate(v1, v2, w1, w2):
            failures.append((v1, v2, w1, w2))
    return checked, failures


# -- the two F04 normal forms --------------------------------------------------------

def cross_normalization_check(trials: int = 100, length: int = 4, seed: int = 0) -> Report:
    """Random elements reduced in one F04 system, re-reduced in the other, must
    land on the other system's normal form of the original (both ways)."""
    bar, r = f04_rbar(), f04_r()
    rng = random.Random(seed)
    rep = Report("f04 / f04r cross-normalization")
    bad = 0
    for _ in range(trials):
        e = random_word_element(bar, length, rng)
        nb, nr = bar.nf(e), r.nf(e)
        if bar.nf(nr) != nb or r.nf(nb) != nr:
            bad += 1
            if bad <= 3:
                rep.add(f"element {format_element(e)}", False, "normal forms disagree")
    rep.add(f"{trials} random elements of length <= {length}, seed {seed}", bad == 0,
            f"{trials - bad} agree")
    return rep


# -- roots of unity ---------------------------------------------------------------------

def specialized_system(pres: Presentation, rule):
    """The rewriting system of pres with coefficients mapped by rule
    ('A=-1', 'A->A^2' or a QuotientSpec)."""
    f = scalar_map(rule)
    reduce = None if rule == "A->A^2" else f
    return pres.system.with_scalars(f, reduce=reduce, name=f"{pres.name}[{_rule_name(rule)}]")


def _rule_name(rule) -> str:
    if isinstance(rule, QuotientSpec):
        return f"mod {rule.modulus}"
    return str(rule)


def _commutes_through(sys, pres, D: int):
    """First (g, w) with NF([g, w]) != 0 for a generator g and a basis word w of
    weight <= D - 1, or None."""
    words = sys.normal_words(max(D - 1, 0), max(D - 1, 0))
    for name in pres.table.names:
        g = Element.gen(pres.table, name)
        for w in words:
            m = Element.monomial(pres.table, w)
            if sys.normal_form(commutator(g, m)):
                return name, pres.table.word_names(w)
    return None


def _spec(e: Element, f) -> Element:
    return e.map_coefficients(f)


def roots_of_unity_suite(D: int = 4, quarter_degree: Optional[int] = None, names=None) -> Report:
    """(a) commutativity at A = -1 and mod A^2 - 1 up to weight D;
    (b) mod A^2 + 1: f04 commutative up to weight quarter_degree (default D),
    the torus algebras not commutative but squares of curves central."""
    from .torus_curves import curve_element, links_up_to

    names = names or SKEIN_NAMES
    qd = D if quarter_degree is None else quarter_degree
    rep = Report(f"roots of unity (D = {D})")
    for rule in ("A=-1", QuotientSpec(mono(2) - 1)):
        for n in names:
            pres = get_presentation(n)
            sys = specialized_system(pres, rule)
            bad = _commutes_through(sys, pres, D)
            rep.add(f"{n} {_rule_name(rule)}: commutative to weight {D}", bad is None,
                    "" if bad is None else f"[{bad[0]}, {' '.join(bad[1])}] != 0")
    i4 = QuotientSpec(mono(2) + 1)
    f = scalar_map(i4)
    if "f04" in names:
        pres = f04_rbar()
        bad = _commutes_through(specialized_system(pres, i4), pres, qd)
        rep.add(f"f04 mod A^2+1: commutative to weight {qd}", bad is None,
                "" if bad is None else f"[{bad[0]}, {' '.join(bad[1])}] != 0")
    for n in ("f11", "f10"):
        if n not in names:
            continue
        pres = get_presentation(n)
        sys = specialized_system(pres, i4)
        gens = [Element.gen(pres.table, g) for g in pres.table.names]
        c12 = sys.normal_form(commutator(gens[0], gens[1]))
        rep.add(f"{n} mod A^2+1: [x1, x2] != 0", bool(c12), format_element(c12, sys.key))
        sq_bad = [(a, b) for a, b in itertools.product(range(3), repeat=2)
                  if sys.normal_form(commutator(sys.multiply(gens[a], gens[a]), gens[b]))]
        rep.add(f"{n} mod A^2+1: [g^2, h] = 0 for all generators", not sq_bad, str(sq_bad or ""))
        curve_bad = []
        links = [v for v in links_up_to(4) if 0 < v.complexity <= 8]
        for v in links:
            c = _spec(curve_element(v, n), f)
            c2 = sys.multiply(c, c)
            for g in gens:
                if sys.normal_form(commutator(c2, g)):
                    curve_bad.append(str(v))
                    break
        rep.add(f"{n} mod A^2+1: [curve(v)^2, x_i] = 0 for {len(links)} links of complexity <= 8",
                not curve_bad, ", ".join(curve_bad))
    return rep
