"""Free noncommutative polynomials with Laurent coefficients.

Words are tuples of generator indices; the index of a generator is its rank.
Centrality is only a flag here: commuting a central letter past others is the
job of the rewrite rules.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Union

from .laurent import ONE, ZERO, Laurent, is_unit, unit_inverse

Word = tuple

__all__ = [
    "GeneratorTable",
    "Element",
    "TableMismatch",
    "deformed_commutator",
    "commutator",
    "substitute_generators",
]


class TableMismatch(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorTable:
    names: tuple
    central: tuple

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate generator names in {self.names}")
        if len(self.central) != len(self.names):
            raise ValueError("central flags must match generator names")

    @classmethod
    def build(cls, names: Iterable[str], central: Iterable[str] = ()) -> "GeneratorTable":
        names = tuple(names)
        central = set(central)
        unknown = central - set(names)
        if unknown:
            raise ValueError(f"unknown central generators {sorted(unknown)}")
        return cls(names, tuple(n in central for n in names))

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no generator named {name!r}") from None

    def word(self, *names: str) -> Word:
        return tuple(self.index(n) for n in names)

    def word_names(self, w: Word) -> list:
        return [self.names[i] for i in w]

    def is_central(self, i: int) -> bool:
        return self.central[i]

    def exponents(self, w: Word) -> tuple:
        v = [0] * len(self.names)
        for i in w:
            v[i] += 1
        return tuple(v)

    def sorted_word(self, exps) -> Word:
        out = []
        for i, k in enumerate(exps):
            out.extend([i] * k)
        return tuple(out)


class Element:
    """A finite sum ``sum c_w * w`` in the free algebra over Z[A, A^-1]."""

    __slots__ = ("table", "_t")

    def __init__(self, table: GeneratorTable, terms: Mapping = None):
        self.table = table
        t = {}
        if terms:
            for w, c in terms.items():
                c = Laurent.coerce(c)
                if c:
                    w = tuple(w)
                    prev = t.get(w)
                    c = c if prev is None else prev + c
                    if c:
                        t[w] = c
                    else:
                        t.pop(w, None)
        self._t = t

    @classmethod
    def _raw(cls, table, t):
        obj = cls.__new__(cls)
        obj.table = table
        obj._t = t
        return obj

    @classmethod
    def zero(cls, table):
        return cls._raw(table, {})

    @classmethod
    def one(cls, table):
        return cls._raw(table, {(): ONE})

    @classmethod
    def scalar(cls, table, s) -> "Element":
        s = Laurent.coerce(s)
        return cls._raw(table, {(): s} if s else {})

    @classmethod
    def gen(cls, table, name: str) -> "Element":
        return cls._raw(table, {(table.index(name),): ONE})

    @classmethod
    def monomial(cls, table, word: Word, coeff=ONE) -> "Element":
        coeff = Laurent.coerce(coeff)
        return cls._raw(table, {tuple(word): coeff} if coeff else {})

    # -- inspection -------------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._t)

    def items(self):
        return self._t.items()

    def words(self):
        return self._t.keys()

    def coeff(self, w: Word) -> Laurent:
        return self._t.get(tuple(w), ZERO)

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def __len__(self):
        return len(self._t)

    def is_scalar(self) -> bool:
        return not self._t or (len(self._t) == 1 and () in self._t)

    def leading(self, key: Callable) -> tuple:
        """(word, coeff) of the key-maximal word."""
        w = max(self._t, key=key)
        return w, self._t[w]

    def _check(self, other: "Element"):
        if other.table != self.table:
            raise TableMismatch("elements live over different generator tables")

    def _lift(self, other):
        if isinstance(other, Element):
            self._check(other)
            return other
        if isinstance(other, (int, Laurent)):
            return Element.scalar(self.table, other)
        return None

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        t = dict(self._t)
        for w, c in other._t.items():
            v = t.get(w)
            v = c if v is None else v + c
            if v:
                t[w] = v
            else:
                t.pop(w, None)
        return Element._raw(self.table, t)

    __radd__ = __add__

    def __neg__(self):
        return Element._raw(self.table, {w: -c for w, c in self._t.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def scale(self, s) -> "Element":
        s = Laurent.coerce(s)
        if not s:
            return Element.zero(self.table)
        t = {}
        for w, c in self._t.items():
            v = c * s
            if v:
                t[w] = v
        return Element._raw(self.table, t)

    def __mul__(self, other):
        if isinstance(other, (int, Laurent)):
            return self.scale(other)
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        t: dict = {}
        for w1, c1 in self._t.items():
            for w2, c2 in other._t.items():
                w = w1 + w2
                v = t.get(w)
                p = c1 * c2
                v = p if v is None else v + p
                if v:
                    t[w] = v
                else:
                    t.pop(w, None)
        return Element._raw(self.table, t)

    def __rmul__(self, other):
        if isinstance(other, (int, Laurent)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers of elements are not defined")
        out = Element.one(self.table)
        for _ in range(n):
            out = out * self
        return out

    def map_coefficients(self, f: Callable[[Laurent], Laurent]) -> "Element":
        t = {}
        for w, c in self._t.items():
            v = f(c)
            if v:
                t[w] = v
        return Element._raw(self.table, t)

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Element):
            return self.table == other.table and self._t == other._t
        if isinstance(other, (int, Laurent)):
            return self == Element.scalar(self.table, other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    def __repr__(self):
        from .expr import format_element

        return f"Element({format_element(self)!r})"

    def __str__(self):
        from .expr import format_element

        return format_element(self)


def deformed_commutator(a: Element, b: Element, u=ONE) -> Element:
    """``u*a*b - u^-1*b*a`` for a unit ``u``."""
    u = Laurent.coerce(u)
    if not is_unit(u):
        raise ValueError(f"deformation parameter {u} is not a unit")
    return (a * b).scale(u) - (b * a).scale(unit_inverse(u))


def commutator(a: Element, b: Element) -> Element:
    return a * b - b * a


def substitute_generators(
    e: Element,
    images: Mapping[str, Element],
    target_table: GeneratorTable = None,
    coefficient_map: Callable[[Laurent], Laurent] = None,
) -> Element:
    """Apply the algebra map determined by ``images`` (generator name -> element)."""
    if target_table is None:
        if not images:
            raise ValueError("target table needed when no images are given")
        target_table = next(iter(images.values())).table
    table = e.table
    out = Element.zero(target_table)
    cache: dict = {}
    for w, c in e.items():
        if coefficient_map is not None:
            c = coefficient_map(c)
            if not c:
                continue
        prod = cache.get(w)
        if prod is None:
            prod = Element.one(target_table)
            for i in w:
                name = table.names[i]
                if name not in images:
                    raise KeyError(f"no image given for generator {name!r}")
                img = images[name]
                if img.table != target_table:
                    raise TableMismatch(f"image of {name!r} is over a different table")
                prod = prod * img
            cache[w] = prod
        out = out + prod.scale(c)
    return out


Scalarish = Union[int, Laurent]
