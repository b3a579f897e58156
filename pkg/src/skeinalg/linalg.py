"""Exact linear algebra over Z[A, A^-1].

Fraction-free Gauss-Jordan elimination: every division is exact in the ring,
so no rational functions ever appear.  On exit each pivot entry equals the same
determinant ``D`` and the kernel can be read off with Laurent entries.
"""

from __future__ import annotations

import math
from typing import List, Optional, Sequence

from .laurent import ONE, ZERO, Laurent

__all__ = ["gauss_jordan", "nullspace", "solve_exact", "ExactDivisionError"]


class ExactDivisionError(ArithmeticError):
    pass


def _div(a: Laurent, b: Laurent) -> Laurent:
    q = a.divmod_exact(b)
    if q is None:
        raise ExactDivisionError(f"{a} is not divisible by {b}")
    return q


def gauss_jordan(rows: Sequence[Sequence[Laurent]], ncols: int = None):
    """Reduce in place to fraction-free reduced echelon form.

    Returns (matrix, pivot columns, D) where every pivot entry equals D.
    """
    m = [[Laurent.coerce(x) for x in r] for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    prev = ONE
    pivots: List[int] = []
    k = 0
    for c in range(ncols):
        if k == len(m):
            break
        cands = [i for i in range(k, len(m)) if m[i][c]]
        if not cands:
            continue
        r = min(cands, key=lambda i: (len(m[i][c]), sum(1 for x in m[i] if x)))
        m[k], m[r] = m[r], m[k]
        piv = m[k][c]
        for i in range(len(m)):
            if i == k:
                continue
            f = m[i][c]
            row_i = m[i]
            row_k = m[k]
            m[i] = [_div(piv * row_i[j] - f * row_k[j], prev) if (row_i[j] or (f and row_k[j])) else ZERO
                    for j in range(ncols)]
        prev = piv
        pivots.append(c)
        k += 1
    # rows above the last pivot were scaled by later pivots; bring them all to prev
    for i, c in enumerate(pivots):
        if m[i][c] != prev:
            raise ExactDivisionError("pivot normalisation failed")
    return m, pivots, prev


def nullspace(rows: Sequence[Sequence[Laurent]], ncols: int) -> List[List[Laurent]]:
    """A basis (over the fraction field) of the kernel, with Laurent entries."""
    if not rows:
        return [[ONE if j == f else ZERO for j in range(ncols)] for f in range(ncols)]
    m, pivots, d = gauss_jordan(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    out = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = d
        for i, c in enumerate(pivots):
            v[c] = -m[i][f]
        out.append(_primitive(v))
    return out


def _prem_gcd(a: Laurent, b: Laurent) -> Laurent:
    """gcd in Z[A] of two polynomials (nonnegative exponents), up to sign, via
    primitive pseudo-remainder sequences."""
    def prim(p):
        g = p.content()
        return Laurent({e - p.min_exp(): c // g for e, c in p.items()})

    a, b = prim(a), prim(b)
    if a.max_exp() < b.max_exp():
        a, b = b, a
    while b:
        while a and a.max_exp() >= b.max_exp():
            da, ca = a.leading()
            db, cb = b.leading()
            a = a * cb - b * Laurent({da - db: ca})
        a, b = b, (prim(a) if a else a)
    return a


def _primitive(v: List[Laurent]) -> List[Laurent]:
    """Divide out the common factor (gcd over Z[A, A^-1]); fix the sign."""
    nz = [x for x in v if x]
    if not nz:
        return v
    g = nz[0]
    for x in nz[1:]:
        if g.is_monomial():
            break
        g = _prem_gcd(g, x)
    if g.max_exp() > g.min_exp():
        v = [_div(x, g) if x else x for x in v]
        nz = [x for x in v if x]
    lo = min(x.min_exp() for x in nz)
    g = 0
    for x in nz:
        g = math.gcd(g, x.content())
    v = [Laurent({e - lo: c // g for e, c in x.items()}) if x else x for x in v]
    first = next(x for x in v if x)
    if first.leading()[1] < 0:
        v = [-x for x in v]
    return v


def solve_exact(rows: Sequence[Sequence[Laurent]], rhs: Sequence[Laurent]) -> Optional[List[Laurent]]:
    """One Laurent solution of rows * x = rhs (free unknowns set to 0), or
    None if the system is inconsistent or needs non-Laurent entries."""
    n = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    m, pivots, d = gauss_jordan(aug, n + 1)
    if n in pivots:
        return None
    x = [ZERO] * n
    for i, c in enumerate(pivots):
        q = m[i][n].divmod_exact(d)
        if q is None:
            return None
        x[c] = q
    return x
