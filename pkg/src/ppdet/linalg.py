"""Exact determinants, Pfaffians and minor sums."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .exact import Rational, as_fraction
from .poly import UniPoly

__all__ = [
    "ExactMatrix",
    "SkewMatrix",
    "det",
    "det_cofactor",
    "det_poly",
    "pfaffian",
    "minor_sum",
    "desnanot_jacobi_check",
    "submatrix",
]


@dataclass(frozen=True)
class ExactMatrix:
    """Rectangular matrix of exact rationals (or :class:`UniPoly` entries)."""

    entries: tuple[tuple, ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.entries)
        if rows and len({len(r) for r in rows}) != 1:
            raise ValueError("ragged matrix")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def build(cls, rows: int, cols: int, entry: Callable[[int, int], object]) -> "ExactMatrix":
        return cls(tuple(tuple(entry(i, j) for j in range(cols)) for i in range(rows)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def tolist(self) -> list[list]:
        return [list(r) for r in self.entries]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(tuple(zip(*self.entries)) if self.entries else ())


def _as_rows(m) -> list[list]:
    if isinstance(m, ExactMatrix):
        return m.tolist()
    if isinstance(m, SkewMatrix):
        return m.dense()
    return [list(r) for r in m]


def _require_square(rows: list[list]) -> int:
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError(f"determinant needs a square matrix, got {n}x{len(rows[0]) if rows else 0}")
    return n


def submatrix(m, row_idx: Sequence[int], col_idx: Sequence[int]) -> list[list]:
    rows = _as_rows(m)
    return [[rows[i][j] for j in col_idx] for i in row_idx]


def det(m) -> Fraction:
    """Exact determinant via Bareiss elimination on an integer lift.

    Each row is multiplied by the lcm of its denominators, the integer
    determinant is computed fraction-free, and the scaling is divided out.
    """
    rows = _as_rows(m)
    n = _require_square(rows)
    if n == 0:
        return Fraction(1)
    scale = 1
    a: list[list[int]] = []
    for r in rows:
        r = [as_fraction(v) for v in r]
        lcm = 1
        for v in r:
            lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
        scale *= lcm
        a.append([v.numerator * (lcm // v.denominator) for v in r])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            lead = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pivot * ri[j] - lead * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return Fraction(sign * a[n - 1][n - 1], scale)


def det_cofactor(m) -> Fraction:
    """Determinant by Laplace expansion along the first row.

    Deliberately naive; used as an independent oracle for :func:`det`.
    """
    rows = _as_rows(m)
    n = _require_square(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return as_fraction(rows[0][0])
    total = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * as_fraction(rows[0][j]) * det_cofactor(minor)
    return total


def det_poly(m) -> UniPoly:
    """Determinant of a matrix with polynomial entries (Laplace with memo)."""
    rows = _as_rows(m)
    n = _require_square(rows)
    rows = [[e if isinstance(e, UniPoly) else UniPoly.constant(e) for e in r] for r in rows]

    @lru_cache(maxsize=None)
    def expand(k: int, cols: int) -> UniPoly:
        # determinant of rows k..n-1 restricted to the column bitmask ``cols``
        if k == n:
            return UniPoly.constant(1)
        total = UniPoly()
        sign = 1
        for j in range(n):
            if cols >> j & 1:
                e = rows[k][j]
                if not e.is_zero():
                    term = e * expand(k + 1, cols & ~(1 << j))
                    total = total + term if sign > 0 else total - term
                sign = -sign
        return total

    return expand(0, (1 << n) - 1)


class SkewMatrix:
    """Skew-symmetric matrix stored by its strict upper triangle."""

    def __init__(self, n: int, upper: dict[tuple[int, int], Rational] | None = None):
        if n < 0:
            raise ValueError("negative order")
        self.n = n
        self._upper: dict[tuple[int, int], Fraction] = {}
        for (i, j), v in (upper or {}).items():
            self[i, j] = v

    @classmethod
    def build(cls, n: int, entry: Callable[[int, int], Rational]) -> "SkewMatrix":
        """``entry(i, j)`` is consulted only for ``i < j``."""
        return cls(n, {(i, j): entry(i, j) for i in range(n) for j in range(i + 1, n)})

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[Rational]]) -> "SkewMatrix":
        n = len(rows)
        for i in range(n):
            if rows[i][i] != 0:
                raise ValueError("nonzero diagonal")
            for j in range(i + 1, n):
                if rows[j][i] != -rows[i][j]:
                    raise ValueError(f"not skew at ({i},{j})")
        return cls.build(n, lambda i, j: rows[i][j])

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        if i == j:
            return Fraction(0)
        if i < j:
            return self._upper.get((i, j), Fraction(0))
        return -self._upper.get((j, i), Fraction(0))

    def __setitem__(self, ij, value):
        i, j = ij
        if i == j:
            if value != 0:
                raise ValueError("diagonal of a skew matrix is zero")
            return
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise IndexError(ij)
        if i > j:
            i, j, value = j, i, -as_fraction(value)
        self._upper[(i, j)] = as_fraction(value)

    def dense(self) -> list[list[Fraction]]:
        return [[self[i, j] for j in range(self.n)] for i in range(self.n)]

    def __repr__(self):
        return f"SkewMatrix({self.n}, {self.dense()})"


def pfaffian(m: SkewMatrix) -> Fraction:
    """Pfaffian by expansion along the first remaining index.

    Normalised so that ``Pf([[0, a], [-a, 0]]) = a``.  Odd order gives 0.
    """
    if not isinstance(m, SkewMatrix):
        m = SkewMatrix.from_dense(_as_rows(m))
    n = m.n
    if n % 2:
        return Fraction(0)

    @lru_cache(maxsize=None)
    def pf(mask: int) -> Fraction:
        if mask == 0:
            return Fraction(1)
        idx = [k for k in range(n) if mask >> k & 1]
        first = idx[0]
        rest = mask & ~(1 << first)
        total = Fraction(0)
        for pos, j in enumerate(idx[1:]):
            a = m[first, j]
            if a:
                sub = pf(rest & ~(1 << j))
                total += a * sub if pos % 2 == 0 else -a * sub
        return total

    return pf((1 << n) - 1)


def minor_sum(m, k: int) -> Fraction:
    """Sum of all ``k x k`` minors (all row and column ``k``-subsets)."""
    rows = _as_rows(m)
    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    if k < 0 or k > min(nr, nc):
        raise ValueError(f"minor order {k} out of range for {nr}x{nc} matrix")
    total = Fraction(0)
    for ri in itertools.combinations(range(nr), k):
        for ci in itertools.combinations(range(nc), k):
            total += det(submatrix(rows, ri, ci))
    return total


def desnanot_jacobi_check(m, trials: int = 0, seed: int = 0) -> bool:
    """Check the Desnanot-Jacobi (Dodgson condensation) identity on ``m``.

    With ``trials > 0`` the identity is additionally checked on that many
    randomly chosen square submatrices of order >= 2 (seeded).
    """
    rows = _as_rows(m)
    n = _require_square(rows)
    if n < 2:
        raise ValueError("Desnanot-Jacobi needs order >= 2")
    if not _dj_holds(rows):
        return False
    rng = random.Random(seed)
    for _ in range(trials):
        k = rng.randint(2, n)
        ri = sorted(rng.sample(range(n), k))
        ci = sorted(rng.sample(range(n), k))
        if not _dj_holds(submatrix(rows, ri, ci)):
            return False
    return True


def _dj_holds(rows: list[list]) -> bool:
    n = len(rows)
    full = list(range(n))
    inner = full[1:-1]

    def d(ri, ci):
        return det(submatrix(rows, ri, ci))

    lhs = d(full, full) * d(inner, inner)
    rhs = d(full[:-1], full[:-1]) * d(full[1:], full[1:]) - d(full[1:], full[:-1]) * d(full[:-1], full[1:])
    return lhs == rhs
