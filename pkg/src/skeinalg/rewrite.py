"""Normal forms modulo a presentation.

Reduction runs in two phases.  Swap rules ``high*low -> lead*low*high + tail``
sort words by generator rank.  Monomial rules fire on sorted words whose
exponent vector dominates a trigger vector; the sorted word ``w`` is rewritten
through a factorization ``w ~ S*T`` (``T`` the sorted trigger), using

    sort(S*T) = lead*w + lower   =>   w = lead^-1 * (S*replacement - lower).

Words are ordered by (weight, length, lexicographic rank).  The order is a
well-order on words of bounded weight and length and is compatible with
multiplication, so every rule that strictly lowers it terminates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from .laurent import ONE, Laurent, is_unit, unit_inverse
from .ncalg import Element, GeneratorTable, TableMismatch, Word

__all__ = [
    "SwapRule",
    "MonomialRule",
    "RuleSystem",
    "RewriteError",
    "RuleOrderError",
    "OrientationError",
    "normal_form",
    "orient_relation",
    "orient_swap",
    "check_confluence",
    "ConfluenceReport",
]


class RewriteError(RuntimeError):
    pass


class RuleOrderError(ValueError):
    """A rule does not strictly decrease the word order."""


class OrientationError(ValueError):
    pass


@dataclass(frozen=True)
class SwapRule:
    high: int
    low: int
    lead: Laurent
    tail: tuple = ()  # ((word, coeff), ...)

    @property
    def lhs(self) -> Word:
        return (self.high, self.low)


@dataclass(frozen=True)
class MonomialRule:
    trigger: tuple  # exponent vector
    replacement: tuple  # ((word, coeff), ...)


def _addto(acc: dict, poly: dict, scale: Laurent) -> None:
    for w, c in poly.items():
        v = c * scale
        prev = acc.get(w)
        if prev is not None:
            v = prev + v
            if v:
                acc[w] = v
            else:
                del acc[w]
        elif v:
            acc[w] = v


class RuleSystem:
    """Validated swap and monomial rules over a generator table."""

    def __init__(
        self,
        table: GeneratorTable,
        weights: Sequence[int],
        swaps: Iterable[SwapRule],
        monomials: Iterable[MonomialRule] = (),
        scalar_reduce: Optional[Callable[[Laurent], Laurent]] = None,
        name: str = "",
    ):
        self.table = table
        self.weights = tuple(int(x) for x in weights)
        if len(self.weights) != len(table) or min(self.weights, default=0) < 0:
            raise ValueError("need one nonnegative weight per generator")
        self.name = name
        self.scalar_reduce = scalar_reduce
        self.swaps: dict = {}
        for r in swaps:
            if r.high <= r.low:
                raise RuleOrderError(f"swap rule must have high > low, got {r}")
            if (r.high, r.low) in self.swaps:
                raise ValueError(f"two swap rules for the pair {r.lhs}")
            self.swaps[(r.high, r.low)] = r
        n = len(table)
        missing = [(h, l) for h in range(n) for l in range(h) if (h, l) not in self.swaps]
        if missing:
            names = [tuple(table.word_names(p)) for p in missing]
            raise ValueError(f"no swap rule for pairs {names}")
        self.monomials = tuple(monomials)
        self._validate()
        self._swap_data = {
            k: (self._red(r.lead), {w: self._red(c) for w, c in r.tail if self._red(c)})
            for k, r in self.swaps.items()
        }
        self._mono_data = [
            (m.trigger, table.sorted_word(m.trigger), {w: self._red(c) for w, c in m.replacement if self._red(c)})
            for m in self.monomials
        ]
        self._memo = {True: {}, False: {}}
        self._word_memo: dict = {}
        self._divisible_memo: dict = {}
        self._strategy_memo: dict = {}
        self._active: set = set()

    # -- order --------------------------------------------------------------
    def weight(self, w: Word) -> int:
        ws = self.weights
        return sum(ws[i] for i in w)

    def key(self, w: Word):
        return (self.weight(w), len(w), w)

    def _validate(self):
        for r in self.swaps.values():
            if not is_unit(r.lead):
                raise RuleOrderError(f"swap {self.table.word_names(r.lhs)} has non-unit lead {r.lead}")
            top = self.key(r.lhs)
            for w, _ in r.tail:
                if not self.key(tuple(w)) < top:
                    raise RuleOrderError(
                        f"tail word {self.table.word_names(w)} not below {self.table.word_names(r.lhs)}"
                    )
        for m in self.monomials:
            if len(m.trigger) != len(self.table):
                raise ValueError("trigger length must match the table")
            top = self.key(self.table.sorted_word(m.trigger))
            for w, _ in m.replacement:
                if not self.key(tuple(w)) < top:
                    raise RuleOrderError(
                        f"replacement word {self.table.word_names(w)} not below trigger "
                        f"{self.table.word_names(self.table.sorted_word(m.trigger))}"
                    )

    def _red(self, c: Laurent) -> Laurent:
        return self.scalar_reduce(c) if self.scalar_reduce is not None else c

    def _red_poly(self, poly: dict) -> dict:
        if self.scalar_reduce is None:
            return poly
        out = {}
        for w, c in poly.items():
            c = self.scalar_reduce(c)
            if c:
                out[w] = c
        return out

    def with_scalars(self, f: Callable[[Laurent], Laurent], reduce=None, name: str = None) -> "RuleSystem":
        """Same rules with every coefficient pushed through the ring map ``f``.

        ``reduce`` canonicalizes coefficients during reduction (a quotient map);
        leave it None for maps into Z[A, A^-1] itself such as A -> A^2.
        """
        swaps = []
        for r in self.swaps.values():
            lead = f(r.lead)
            if not is_unit(lead):
                raise RuleOrderError(f"specialized lead {lead} is not a unit")
            swaps.append(SwapRule(r.high, r.low, lead, tuple((w, f(c)) for w, c in r.tail if f(c))))
        monos = [
            MonomialRule(m.trigger, tuple((w, f(c)) for w, c in m.replacement if f(c)))
            for m in self.monomials
        ]
        return RuleSystem(self.table, self.weights, swaps, monos, reduce, name or self.name)

    # -- basis --------------------------------------------------------------
    def is_sorted(self, w: Word) -> bool:
        return all(w[i] <= w[i + 1] for i in range(len(w) - 1))

    def _divisible(self, w: Word):
        """Index of the first monomial rule whose trigger divides sorted w, else -1."""
        r = self._divisible_memo.get(w)
        if r is None:
            r = -1
            if self._mono_data:
                ex = self.table.exponents(w)
                for k, (t, _, _) in enumerate(self._mono_data):
                    if all(a >= b for a, b in zip(ex, t)):
                        r = k
                        break
            self._divisible_memo[w] = r
        return r

    def matching_rules(self, w: Word) -> list:
        ex = self.table.exponents(w)
        return [k for k, (t, _, _) in enumerate(self._mono_data) if all(a >= b for a, b in zip(ex, t))]

    def is_normal(self, w: Word) -> bool:
        return self.is_sorted(w) and self._divisible(tuple(w)) < 0

    def accepts_exponents(self, exps) -> bool:
        return not any(all(a >= b for a, b in zip(exps, t)) for t, _, _ in self._mono_data)

    def normal_words(self, max_weight: int, max_length: int = None) -> list:
        """Normal (basis) words with weight <= max_weight and length <= max_length."""
        if max_length is None:
            max_length = max_weight
        out = []
        n = len(self.table)
        for length in range(max_length + 1):
            for combo in itertools.combinations_with_replacement(range(n), length):
                if self.weight(combo) <= max_weight and self._divisible(combo) < 0:
                    out.append(combo)
        out.sort(key=self.key)
        return out

    # -- fast normal form -----------------------------------------------------
    def _mul_gen(self, m: Word, g: int, mono: bool = True) -> dict:
        """Normal form of (sorted word m) * g."""
        memo = self._memo[mono]
        k = (m, g)
        r = memo.get(k)
        if r is not None:
            return r
        if not m or m[-1] <= g:
            w = m + (g,)
            if mono and self._divisible(w) >= 0:
                r = self._monomial_step(w)
            else:
                r = {w: ONE}
        else:
            h = m[-1]
            mp = m[:-1]
            lead, tail = self._swap_data[(h, g)]
            r = {}
            for w, c in self._mul_gen(mp, g, mono).items():
                _addto(r, self._mul_gen(w, h, mono), c * lead)
            for tw, tc in tail.items():
                _addto(r, self._mul_word(mp, tw, mono), tc)
            r = self._red_poly(r)
        memo[k] = r
        return r

    def _mul_word(self, m: Word, w: Word, mono: bool = True) -> dict:
        poly = {m: ONE}
        for g in w:
            nxt: dict = {}
            for u, c in poly.items():
                _addto(nxt, self._mul_gen(u, g, mono), c)
            poly = nxt
        return poly

    def _reduce_word(self, w: Word) -> dict:
        r = self._word_memo.get(w)
        if r is None:
            r = self._mul_word((), w, True)
            self._word_memo[w] = r
        return r

    def _monomial_step(self, w: Word) -> dict:
        if w in self._active:
            raise RewriteError(f"monomial reduction of {self.table.word_names(w)} re-entered itself")
        self._active.add(w)
        try:
            k = self._divisible(w)
            trig, tword, repl = self._mono_data[k]
            rest = self.table.sorted_word(tuple(a - b for a, b in zip(self.table.exponents(w), trig)))
            return self._factor_rewrite(w, rest, tword, repl, left=True, reduce=self._reduce_word,
                                        swap_sort=lambda u: self._mul_word((), u, False))
        finally:
            self._active.discard(w)

    def _factor_rewrite(self, w, rest, tword, repl, left, reduce, swap_sort) -> dict:
        prod = rest + tword if left else tword + rest
        st = swap_sort(prod)
        lead = st.get(w)
        if lead is None or not is_unit(lead):
            raise RewriteError(
                f"sorting {self.table.word_names(prod)} did not produce a unit multiple of "
                f"{self.table.word_names(w)}"
            )
        out: dict = {}
        for rw, rc in repl.items():
            _addto(out, reduce(rest + rw if left else rw + rest), rc)
        for lw, lc in st.items():
            if lw == w:
                continue
            if not self.key(lw) < self.key(prod):
                raise RewriteError("swap sorting produced a word above its input")
            _addto(out, reduce(lw), -lc)
        inv = unit_inverse(lead)
        return self._red_poly({u: c * inv for u, c in out.items()})

    def normal_form(self, e: Element) -> Element:
        if e.table != self.table:
            raise TableMismatch("element is over a different generator table")
        acc: dict = {}
        for w, c in e.items():
            _addto(acc, self._reduce_word(w), c)
        return Element._raw(self.table, self._red_poly(acc))

    def multiply(self, a: Element, b: Element) -> Element:
        """Normal form of a*b for a, b already in normal form."""
        if a.table != self.table or b.table != self.table:
            raise TableMismatch("element is over a different generator table")
        acc: dict = {}
        for w1, c1 in a.items():
            for w2, c2 in b.items():
                _addto(acc, self._pair(w1, w2), c1 * c2)
        return Element._raw(self.table, self._red_poly(acc))

    def _pair(self, w1: Word, w2: Word) -> dict:
        key = ("pair", w1, w2)
        r = self._word_memo.get(key)
        if r is None:
            if w1 and not self.is_normal(w1):
                base = self._reduce_word(w1)
            else:
                base = {w1: ONE}
            r = {}
            for u, c in base.items():
                _addto(r, self._mul_word(u, w2, True), c)
            r = self._red_poly(r)
            self._word_memo[key] = r
        return r

    # -- strategy-driven reduction (for confluence checks) ---------------------
    def reduce_by_strategy(self, e: Element, strategy: str) -> Element:
        """Normal form by one-step rewriting, choosing the leftmost ('left') or
        rightmost ('right') redex; monomial steps factor as S*T or T*S."""
        if strategy not in ("left", "right"):
            raise ValueError(f"unknown strategy {strategy!r}")
        acc: dict = {}
        for w, c in e.items():
            _addto(acc, self._strat_word(w, strategy, True), c)
        return Element._raw(self.table, self._red_poly(acc))

    def _strat_word(self, w: Word, strategy: str, mono: bool) -> dict:
        memo = self._strategy_memo.setdefault((strategy, mono), {})
        r = memo.get(w)
        if r is not None:
            return r
        descents = [i for i in range(len(w) - 1) if w[i] > w[i + 1]]
        if descents:
            i = descents[0] if strategy == "left" else descents[-1]
            lead, tail = self._swap_data[(w[i], w[i + 1])]
            r = {}
            _addto(r, self._strat_word(w[:i] + (w[i + 1], w[i]) + w[i + 2:], strategy, mono), lead)
            for tw, tc in tail.items():
                _addto(r, self._strat_word(w[:i] + tw + w[i + 2:], strategy, mono), tc)
            r = self._red_poly(r)
        elif mono and self.matching_rules(w):
            ks = self.matching_rules(w)
            k = ks[0] if strategy == "left" else ks[-1]
            trig, tword, repl = self._mono_data[k]
            rest = self.table.sorted_word(tuple(a - b for a, b in zip(self.table.exponents(w), trig)))
            tag = ("active", strategy)
            active = self._strategy_memo.setdefault(tag, set())
            if w in active:
                raise RewriteError(f"monomial reduction of {self.table.word_names(w)} re-entered itself")
            active.add(w)
            try:
                r = self._factor_rewrite(
                    w, rest, tword, repl, left=(strategy == "left"),
                    reduce=lambda u: self._strat_word(u, strategy, True),
                    swap_sort=lambda u: self._strat_word(u, strategy, False),
                )
            finally:
                active.discard(w)
        else:
            r = {w: ONE}
        memo[w] = r
        return r

    def clear_caches(self):
        self._memo = {True: {}, False: {}}
        self._word_memo.clear()
        self._strategy_memo.clear()

    def __repr__(self):
        return f"RuleSystem({self.name or '?'}, {len(self.table)} generators, {len(self.monomials)} monomial rules)"


def normal_form(e: Element, sys: RuleSystem) -> Element:
    return sys.normal_form(e)


def orient_relation(rel: Element, sys: RuleSystem) -> MonomialRule:
    """Turn ``rel = 0`` into a monomial rule at its order-maximal normal word."""
    nf = sys.normal_form(rel)
    if nf.is_zero():
        raise OrientationError("relation reduces to zero; it has no leading word")
    w, c = nf.leading(sys.key)
    if not is_unit(c):
        raise OrientationError(f"leading coefficient {c} of {sys.table.word_names(w)} is not a unit")
    inv = unit_inverse(c)
    repl = tuple((u, -(d * inv)) for u, d in nf.items() if u != w)
    return MonomialRule(sys.table.exponents(w), repl)


def orient_swap(rel: Element, weights: Sequence[int]) -> SwapRule:
    """Turn a pair relation into a swap rule at its order-maximal word."""
    ws = tuple(weights)

    def key(w):
        return (sum(ws[i] for i in w), len(w), w)

    if rel.is_zero():
        raise OrientationError("zero relation")
    w, c = rel.leading(key)
    if len(w) != 2 or w[0] <= w[1]:
        raise OrientationError(f"leading word {rel.table.word_names(w)} is not an unsorted pair")
    if not is_unit(c):
        raise OrientationError(f"leading coefficient {c} is not a unit")
    inv = unit_inverse(c)
    low_high = (w[1], w[0])
    lead = -(rel.coeff(low_high) * inv)
    if not is_unit(lead):
        raise OrientationError(f"swap coefficient {lead} is not a unit")
    tail = tuple((u, -(d * inv)) for u, d in rel.items() if u not in (w, low_high))
    return SwapRule(w[0], w[1], lead, tail)


@dataclass
class ConfluenceReport:
    system: str
    max_weight: int
    words_checked: int
    overlaps_checked: int
    mismatches: list = field(default_factory=list)  # (word names, nf1, nf2)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _overlap_words(sys: RuleSystem) -> set:
    lhs = [r.lhs for r in sys.swaps.values() if r.lead != ONE or r.tail]
    lhs += [tw for _, tw, _ in sys._mono_data]
    out = set()
    for u in lhs:
        for v in lhs:
            for k in range(1, min(len(u), len(v))):
                if u[-k:] == v[:k]:
                    out.add(u + v[k:])
    for _, tw, _ in sys._mono_data:
        for g in range(len(sys.table)):
            out.add(tw + (g,))
            out.add((g,) + tw)
    return out


def check_confluence(sys: RuleSystem, max_weight: int, include_fast: bool = True) -> ConfluenceReport:
    """Compare leftmost and rightmost reduction on all words of weight and length
    <= max_weight plus the rule-overlap words."""
    n = len(sys.table)
    words = []
    for length in range(max_weight + 1):
        for w in itertools.product(range(n), repeat=length):
            if sys.weight(w) <= max_weight:
                words.append(w)
    overlaps = sorted(_overlap_words(sys) - set(words), key=sys.key)
    report = ConfluenceReport(sys.name, max_weight, len(words), len(overlaps))
    for w in words + overlaps:
        e = Element.monomial(sys.table, w)
        left = sys.reduce_by_strategy(e, "left")
        right = sys.reduce_by_strategy(e, "right")
        if left != right:
            report.mismatches.append((sys.table.word_names(w), left, right))
            continue
        if include_fast:
            fast = sys.normal_form(e)
            if fast != left:
                report.mismatches.append((sys.table.word_names(w), left, fast))
    return report
