"""Exact arithmetic in Z[A, A^-1] and its quotient rings.

A :class:`Laurent` is stored as a map ``exponent -> nonzero integer``.  The
empty map is zero.  Values are immutable once built; every operation returns
a fresh canonical object, so equality is plain map equality.
"""

from __future__ import annotations

import re
from typing import Callable, Iterable, Union

__all__ = [
    "Laurent",
    "QuotientSpec",
    "ZERO",
    "ONE",
    "A",
    "DELTA",
    "mono",
    "is_unit",
    "unit_inverse",
    "specialize_scalar",
    "parse_laurent",
]

ScalarLike = Union["Laurent", int]


class Laurent:
    """Element of Z[A, A^-1]."""

    __slots__ = ("_t", "_h")

    def __init__(self, terms=None):
        t = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, c in items:
                if c:
                    t[int(e)] = t.get(int(e), 0) + int(c)
            t = {e: c for e, c in t.items() if c}
        self._t = t
        self._h = None

    @classmethod
    def _raw(cls, t: dict) -> "Laurent":
        # caller guarantees: int keys, no zero values
        obj = cls.__new__(cls)
        obj._t = t
        obj._h = None
        return obj

    @classmethod
    def coerce(cls, x: ScalarLike) -> "Laurent":
        if isinstance(x, Laurent):
            return x
        if isinstance(x, int):
            return cls._raw({0: x}) if x else ZERO
        raise TypeError(f"cannot coerce {type(x).__name__} to Laurent")

    # -- inspection -------------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._t)

    def items(self):
        return self._t.items()

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def __len__(self) -> int:
        return len(self._t)

    def max_exp(self) -> int:
        return max(self._t)

    def min_exp(self) -> int:
        return min(self._t)

    def leading(self) -> tuple[int, int]:
        e = max(self._t)
        return e, self._t[e]

    def coeff(self, e: int) -> int:
        return self._t.get(e, 0)

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._t.get(0, 0)

    def is_monomial(self) -> bool:
        return len(self._t) == 1

    def content(self) -> int:
        from math import gcd

        g = 0
        for c in self._t.values():
            g = gcd(g, c)
        return g

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, int):
            other = Laurent.coerce(other)
        elif not isinstance(other, Laurent):
            return NotImplemented
        if not other._t:
            return self
        if not self._t:
            return other
        t = dict(self._t)
        for e, c in other._t.items():
            v = t.get(e, 0) + c
            if v:
                t[e] = v
            else:
                del t[e]
        return Laurent._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return Laurent._raw({e: -c for e, c in self._t.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = Laurent.coerce(other)
        elif not isinstance(other, Laurent):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Laurent.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return ZERO
            return Laurent._raw({e: c * other for e, c in self._t.items()})
        if not isinstance(other, Laurent):
            return NotImplemented
        a, b = self._t, other._t
        if not a or not b:
            return ZERO
        if len(a) == 1:
            (e0, c0), = a.items()
            return Laurent._raw({e0 + e: c0 * c for e, c in b.items()})
        if len(b) == 1:
            (e0, c0), = b.items()
            return Laurent._raw({e0 + e: c0 * c for e, c in a.items()})
        t: dict = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                k = e1 + e2
                t[k] = t.get(k, 0) + c1 * c2
        return Laurent._raw({e: c for e, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return unit_inverse(self) ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "Laurent":
        """Multiply by A^k."""
        if not k:
            return self
        return Laurent._raw({e + k: c for e, c in self._t.items()})

    def bar(self) -> "Laurent":
        """The involution A -> A^-1."""
        return Laurent._raw({-e: c for e, c in self._t.items()})

    def subs_power(self, k: int) -> "Laurent":
        """Substitute A -> A^k (k != 0)."""
        return Laurent._raw({e * k: c for e, c in self._t.items()})

    def evaluate(self, value):
        """Evaluate at a number (int, Fraction, complex...)."""
        return sum(c * value**e for e, c in self._t.items())

    def divmod_exact(self, other: "Laurent"):
        """Return ``self / other`` if it lies in Z[A, A^-1], else None."""
        if not other._t:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if not self._t:
            return ZERO
        if len(other._t) == 1:
            (e0, c0), = other._t.items()
            out = {}
            for e, c in self._t.items():
                q, r = divmod(c, c0)
                if r:
                    return None
                out[e - e0] = q
            return Laurent._raw(out)
        # shift both into Z[A] and do long division from the top
        lo_n, lo_d = self.min_exp(), other.min_exp()
        num = {e - lo_n: c for e, c in self._t.items()}
        den = {e - lo_d: c for e, c in other._t.items()}
        dd = max(den)
        lc = den[dd]
        quot = {}
        while num:
            top = max(num)
            if top < dd:
                return None
            q, r = divmod(num[top], lc)
            if r:
                return None
            s = top - dd
            quot[s] = q
            for e, c in den.items():
                k = e + s
                v = num.get(k, 0) - q * c
                if v:
                    num[k] = v
                else:
                    num.pop(k, None)
        return Laurent._raw(quot).shift(lo_n - lo_d)

    # -- comparison / hashing ---------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Laurent):
            return self._t == other._t
        if isinstance(other, int):
            return self._t == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._h is None:
            self._h = hash(frozenset(self._t.items()))
        return self._h

    def sort_key(self):
        return tuple(sorted(self._t.items()))

    # -- text -------------------------------------------------------------
    def __str__(self):
        return format_laurent(self)

    def __repr__(self):
        return f"Laurent({format_laurent(self)!r})"


def format_laurent(s: Laurent) -> str:
    """Render as ``A^2 - 2 A + 1 - A^-2`` (descending exponents)."""
    if not s._t:
        return "0"
    parts = []
    for i, e in enumerate(sorted(s._t, reverse=True)):
        c = s._t[e]
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            var = "A" if e == 1 else f"A^{e}"
            body = var if a == 1 else f"{a} {var}"
        if i == 0:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


ZERO = Laurent._raw({})
ONE = Laurent._raw({0: 1})
A = Laurent._raw({1: 1})
DELTA = Laurent._raw({2: 1, -2: -1})


def mono(exp: int, coeff: int = 1) -> Laurent:
    """coeff * A^exp."""
    return Laurent._raw({exp: coeff}) if coeff else ZERO


def is_unit(s: ScalarLike) -> bool:
    """True iff ``s`` is +-A^k, the units of Z[A, A^-1]."""
    s = Laurent.coerce(s)
    return len(s._t) == 1 and abs(next(iter(s._t.values()))) == 1


def unit_inverse(s: ScalarLike) -> Laurent:
    s = Laurent.coerce(s)
    if not is_unit(s):
        raise ValueError(f"{s} is not a unit of Z[A, A^-1]")
    (e, c), = s._t.items()
    return Laurent._raw({-e: c})


class QuotientSpec:
    """Quotient of Z[A, A^-1] by a monic-up-to-sign modulus with unit constant term.

    Representatives are polynomials in A of degree below the modulus degree.
    """

    def __init__(self, modulus: ScalarLike):
        m = Laurent.coerce(modulus)
        if not m or m.min_exp() < 0:
            raise ValueError("modulus must be a nonzero polynomial in A")
        m = m.shift(-m.min_exp()) if m.min_exp() > 0 else m
        deg, lc = m.leading()
        if deg < 1 or abs(lc) != 1:
            raise ValueError(f"modulus {m} needs positive degree and unit leading coefficient")
        c0 = m.coeff(0)
        if abs(c0) != 1:
            raise ValueError(f"A is not invertible modulo {m}")
        if lc == -1:
            m = -m
        self.modulus = m
        self.degree = m.max_exp()
        # m = A*g + c0  =>  A^-1 = -c0 * g  (c0 = +-1)
        g = Laurent._raw({e - 1: c for e, c in m.items() if e > 0})
        self._inv_a = self._reduce_poly(dict((g * (-c0)).items()))
        self._cache: dict = {}

    def _reduce_poly(self, t: dict) -> Laurent:
        t = {e: c for e, c in t.items() if c}
        d = self.degree
        mod = self.modulus._t
        while t:
            top = max(t)
            if top < d:
                break
            c = t.pop(top)
            s = top - d
            for e, mc in mod.items():
                if e == d:
                    continue
                k = e + s
                v = t.get(k, 0) - c * mc
                if v:
                    t[k] = v
                else:
                    t.pop(k, None)
        return Laurent._raw(t)

    def _inv_power(self, k: int) -> Laurent:
        key = -k
        if key not in self._cache:
            r = ONE
            for _ in range(k):
                r = self._reduce_poly(dict((r * self._inv_a).items()))
            self._cache[key] = r
        return self._cache[key]

    def reduce(self, s: ScalarLike) -> Laurent:
        s = Laurent.coerce(s)
        if not s._t:
            return s
        if s.min_exp() >= 0 and s.max_exp() < self.degree:
            return s
        pos = {e: c for e, c in s._t.items() if e >= 0}
        acc = self._reduce_poly(pos)
        for e, c in s._t.items():
            if e < 0:
                acc = acc + self._inv_power(-e) * c
        return self._reduce_poly(dict(acc.items()))

    def __call__(self, s: ScalarLike) -> Laurent:
        return self.reduce(s)

    def __eq__(self, other):
        return isinstance(other, QuotientSpec) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("Q", self.modulus))

    def __repr__(self):
        return f"QuotientSpec({format_laurent(self.modulus)!r})"


def specialize_scalar(s: ScalarLike, rule) -> Union[int, Laurent]:
    """Ring homomorphism image of ``s``.

    ``rule`` is ``"A=-1"`` (returns an int), ``"A->A^2"``, or a
    :class:`QuotientSpec` (returns the canonical representative).
    """
    s = Laurent.coerce(s)
    if rule == "A=-1":
        return sum(c * (-1 if e % 2 else 1) for e, c in s.items())
    if rule == "A->A^2":
        return s.subs_power(2)
    if isinstance(rule, QuotientSpec):
        return rule.reduce(s)
    raise ValueError(f"unknown specialization rule {rule!r}")


def scalar_map(rule) -> Callable[[Laurent], Laurent]:
    """The specialization as a Laurent -> Laurent map (A=-1 becomes mod A+1)."""
    if rule is None:
        return lambda s: s
    if rule == "A=-1":
        return QuotientSpec(A + 1)
    if rule == "A->A^2":
        return lambda s: s.subs_power(2)
    if isinstance(rule, QuotientSpec):
        return rule
    raise ValueError(f"unknown specialization rule {rule!r}")


_TERM_RE = re.compile(r"\s*([+-])?\s*(\d+)?\s*\*?\s*(A(?:\s*\^\s*(-?\d+))?)?\s*")


def parse_laurent(text: str) -> Laurent:
    """Parse ``A^2 - A^-2``, ``-2 A + 3``, ``A^4-1`` and the like."""
    s = text.strip()
    if not s:
        raise ValueError("empty scalar")
    pos = 0
    acc = ZERO
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse scalar at position {pos}: {s[pos:]!r}")
        sign, num, var, exp = m.groups()
        if sign is None and not first:
            raise ValueError(f"expected '+' or '-' at position {m.start()}")
        if num is None and var is None:
            raise ValueError(f"dangling sign at position {m.start()}")
        c = int(num) if num is not None else 1
        if sign == "-":
            c = -c
        e = 0
        if var is not None:
            e = int(exp) if exp is not None else 1
        acc = acc + mono(e, c)
        pos = m.end()
        first = False
    return acc


def lsum(values: Iterable[Laurent]) -> Laurent:
    acc = ZERO
    for v in values:
        acc = acc + v
    return acc
