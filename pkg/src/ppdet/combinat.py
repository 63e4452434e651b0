"""Lattice paths, shifted plane partitions and constant-term oracles."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .exact import binomial
from .linalg import det
from .poly import (
    BoxOverflow,
    LaurentBox,
    constant_term_of_product,
    geometric_expand,
    laurent_mul,
)

__all__ = [
    "GuardError",
    "CapInstability",
    "LatticePath",
    "PathFamily",
    "ShiftedPlanePartition",
    "count_paths",
    "lgv_count",
    "all_paths_to_line",
    "enumerate_families",
    "count_families_lgv",
    "paths_to_spp",
    "iter_spp",
    "enumerate_spp",
    "count_nonintersecting_pairs",
    "ct_via_series",
    "ct_laurent_thm12",
    "ct_laurent_thm13",
    "FIGURE1_FAMILY",
]

Point = tuple[int, int]

# enumeration guards (hard errors, never silent truncation)
MAX_ENUM_X = 3
MAX_ENUM_N = 4
MAX_SERIES_CELLS = 250_000


class GuardError(ValueError):
    """Requested size exceeds an enumeration or expansion guard."""


class CapInstability(ArithmeticError):
    """The constant term changed when the truncation cap was enlarged."""


@dataclass(frozen=True)
class LatticePath:
    """Unit East/North steps starting at ``start``."""

    start: Point
    steps: str

    def __post_init__(self):
        if set(self.steps) - {"E", "N"}:
            raise ValueError(f"steps must be over 'E'/'N', got {self.steps!r}")

    def points(self) -> list[Point]:
        a, b = self.start
        pts = [(a, b)]
        for s in self.steps:
            if s == "E":
                a += 1
            else:
                b += 1
            pts.append((a, b))
        return pts

    @property
    def end(self) -> Point:
        return self.points()[-1]

    def shifted(self, da: int, db: int) -> "LatticePath":
        return LatticePath((self.start[0] + da, self.start[1] + db), self.steps)


@dataclass(frozen=True)
class PathFamily:
    """Paths ``P_0..P_{n-1}``, ``P_i`` starting at ``(-2i, i)``."""

    paths: tuple[LatticePath, ...]

    @property
    def n(self) -> int:
        return len(self.paths)

    def is_nonintersecting(self) -> bool:
        seen: set[Point] = set()
        for p in self.paths:
            pts = p.points()
            if seen.intersection(pts):
                return False
            seen.update(pts)
        return True

    def validate(self, x: int) -> None:
        for i, p in enumerate(self.paths):
            if p.start != (-2 * i, i):
                raise ValueError(f"path {i} starts at {p.start}, expected {(-2 * i, i)}")
            if sum(p.end) != x:
                raise ValueError(f"path {i} ends at {p.end}, off the line x1 + x2 = {x}")
        if not self.is_nonintersecting():
            raise ValueError("paths intersect")

    def heights(self) -> tuple[int, ...]:
        """End heights ``lambda_i`` (second coordinate of each end point)."""
        return tuple(p.end[1] for p in self.paths)


@dataclass(frozen=True)
class ShiftedPlanePartition:
    """Staircase array; ``rows[r]`` holds row ``r+1`` from its diagonal cell rightwards."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def entry(self, r: int, c: int) -> int:
        """1-based row ``r`` and column ``c >= r``."""
        return self.rows[r - 1][c - r]

    def is_valid(self, x: int, n: int) -> bool:
        length = x + n - 1
        if len(self.rows) != length:
            return False
        for r, row in enumerate(self.rows, start=1):
            if len(row) != length - r + 1:
                return False
            for k, v in enumerate(row):
                if not (max(n - r, 0) <= v <= n):
                    return False
                if k and row[k - 1] < v:
                    return False
                c = r + k
                if r > 1 and self.entry(r - 1, c) < v:
                    return False
        return True


FIGURE1_FAMILY = PathFamily(
    (
        LatticePath((0, 0), "EN"),
        LatticePath((-2, 1), "NNE"),
        LatticePath((-4, 2), "NENE"),
        LatticePath((-6, 3), "NNNNE"),
        LatticePath((-8, 4), "NNENNN"),
    )
)


def count_paths(a: Point, e: Point) -> int:
    dx, dy = e[0] - a[0], e[1] - a[1]
    if dx < 0 or dy < 0:
        return 0
    return binomial(dx + dy, dy)


def lgv_count(starts: Sequence[Point], ends: Sequence[Point]) -> int:
    """Determinant of single-path counts; counts nonintersecting families
    when the compatibility hypothesis holds."""
    if len(starts) != len(ends):
        raise ValueError("starts and ends differ in length")
    value = det([[count_paths(a, e) for e in ends] for a in starts])
    return int(value)


def _check_enum_guard(x: int, n: int) -> None:
    if x < 0 or n < 0:
        raise ValueError("x and n must be nonnegative")
    if x > MAX_ENUM_X or n > MAX_ENUM_N:
        raise GuardError(f"enumeration guard: need x <= {MAX_ENUM_X}, n <= {MAX_ENUM_N}; got x={x}, n={n}")


def all_paths_to_line(start: Point, x: int) -> list[LatticePath]:
    """Every East/North path from ``start`` to the antidiagonal ``x1 + x2 = x``."""
    length = x - sum(start)
    if length < 0:
        return []
    return [LatticePath(start, "".join(s)) for s in itertools.product("EN", repeat=length)]


def enumerate_families(x: int, n: int) -> list[PathFamily]:
    """All nonintersecting families with free end points on ``x1 + x2 = x`` (exhaustive)."""
    _check_enum_guard(x, n)
    options = [[(p, frozenset(p.points())) for p in all_paths_to_line((-2 * i, i), x)] for i in range(n)]
    out: list[PathFamily] = []

    def extend(i: int, chosen: list[LatticePath], used: frozenset):
        if i == n:
            out.append(PathFamily(tuple(chosen)))
            return
        for p, pts in options[i]:
            if used.isdisjoint(pts):
                chosen.append(p)
                extend(i + 1, chosen, used | pts)
                chosen.pop()

    extend(0, [], frozenset())
    return out


def count_families_lgv(x: int, n: int) -> int:
    """Sum over end-point tuples of the LGV determinant (the fast path)."""
    total = 0
    ranges = [range(i, x + 2 * i + 1) for i in range(n)]
    starts = [(-2 * i, i) for i in range(n)]
    for lam in itertools.product(*ranges):
        if any(lam[k] >= lam[k + 1] for k in range(n - 1)):
            continue
        total += lgv_count(starts, [(x - l, l) for l in lam])
    return total


def paths_to_spp(f: PathFamily, x: int, n: int) -> ShiftedPlanePartition:
    """Map a family to its shifted plane partition.

    Each ``P_i`` is shifted by ``(i, -i)`` so that it starts at ``(-i, 0)``.
    A unit cell with lower-left corner ``(a, b)`` receives the number of
    shifted paths passing to its left.  Reading cells with ``a = r - n`` and
    ``b = L - c`` (``L = x+n-1``) gives row ``r``, column ``c`` of the array,
    which is the reflection in the antidiagonal of the region picture.
    """
    if f.n != n:
        raise ValueError(f"family has {f.n} paths, expected {n}")
    f.validate(x)
    length = x + n - 1
    # for each shifted path: end height e_i and, per height b < e_i, the
    # abscissa of the vertical step from b to b+1
    ends: list[int] = []
    crossings: list[dict[int, int]] = []
    for i, p in enumerate(f.paths):
        q = p.shifted(i, -i)
        pts = q.points()
        steps: dict[int, int] = {}
        for (a0, b0), (a1, b1) in zip(pts, pts[1:]):
            if b1 == b0 + 1:
                steps[b0] = a0
        ends.append(q.end[1])
        crossings.append(steps)

    def value(a: int, b: int) -> int:
        count = 0
        for e, steps in zip(ends, crossings):
            if b >= e or a < steps[b]:
                count += 1
        return count

    rows = tuple(tuple(value(r - n, length - c) for c in range(r, length + 1)) for r in range(1, length + 1))
    spp = ShiftedPlanePartition(rows)
    if not spp.is_valid(x, n):
        raise AssertionError(f"bijection produced an invalid array {rows}")
    return spp


def _decreasing_rows(length: int, lo: int, hi_caps: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing tuples with entry k in ``[lo, hi_caps[k]]``."""

    def rec(k: int, prev: int):
        if k == length:
            yield ()
            return
        for v in range(min(prev, hi_caps[k]), lo - 1, -1):
            for rest in rec(k + 1, v):
                yield (v,) + rest

    yield from rec(0, max(hi_caps) if hi_caps else 0)


def iter_spp(x: int, n: int) -> Iterator[ShiftedPlanePartition]:
    """Every shifted plane partition counted by :func:`enumerate_spp`."""
    _check_enum_guard(x, n)
    length = x + n - 1

    def rec(r: int, prev: tuple[int, ...], acc: list[tuple[int, ...]]):
        if r > length:
            yield ShiftedPlanePartition(tuple(acc))
            return
        caps = [n] * (length - r + 1) if r == 1 else list(prev[1:])
        for row in _decreasing_rows(length - r + 1, max(n - r, 0), caps):
            acc.append(row)
            yield from rec(r + 1, row, acc)
            acc.pop()

    yield from rec(1, (), [])


def enumerate_spp(x: int, n: int) -> int:
    """Count shifted plane partitions of staircase shape ``(x+n-1, ..., 1)``,
    entries in ``[0, n]``, row ``i`` entries at least ``n - i``.

    Row-by-row transfer: each row only constrains the next one.
    """
    _check_enum_guard(x, n)
    length = x + n - 1
    if length <= 0:
        return 1

    @lru_cache(maxsize=None)
    def count_from(r: int, prev: tuple[int, ...]) -> int:
        if r > length:
            return 1
        caps = [n] * (length - r + 1) if r == 1 else list(prev[1:])
        return sum(count_from(r + 1, row) for row in _decreasing_rows(length - r + 1, max(n - r, 0), caps))

    return count_from(1, ())


def count_nonintersecting_pairs(x: int, i: int, j: int) -> int:
    """Brute-force count of nonintersecting ``(P_i, P_j)`` with free ends on ``x1 + x2 = x``."""
    if not 0 <= i < j:
        raise ValueError("need 0 <= i < j")
    if x + j > 10:
        raise GuardError(f"pair enumeration guard: need x + j <= 10, got {x + j}")
    pi = [frozenset(p.points()) for p in all_paths_to_line((-2 * i, i), x)]
    pj = [frozenset(p.points()) for p in all_paths_to_line((-2 * j, j), x)]
    return sum(1 for a in pi for b in pj if a.isdisjoint(b))


# --------------------------------------------------------------------------
# Constant terms


def _univariate(nvars: int, k: int, terms: dict[int, int], lo, hi) -> LaurentBox:
    coeffs = {}
    for e, c in terms.items():
        vec = [0] * nvars
        vec[k] = e
        coeffs[tuple(vec)] = c
    return LaurentBox(lo, hi, coeffs)


def _binomial_poly(power: int, shift: int = 0, inverse: bool = False) -> dict[int, int]:
    """``(1 + z^{+-1})^power`` times ``z^shift`` as ``{exponent: coeff}``."""
    sign = -1 if inverse else 1
    return {shift + sign * k: binomial(power, k) for k in range(power + 1)}


def ct_via_series(x: int, n: int, cap: int | None = None, check: bool = True) -> Fraction:
    """Constant term of the TSSCPP rational function by truncated series.

    The numerator is a Laurent polynomial and is expanded exactly; every
    denominator factor ``1/(1 - z_i z_j)`` and ``1/(1 - z_i)`` is a geometric
    series with nonnegative exponents, truncated at ``cap`` per variable.
    With ``check`` the computation is repeated at ``cap + 2`` and any change
    raises :class:`CapInstability`.

    Under power-series expansion of the denominators the cross factor has to
    be read as ``(1 - z_j/z_i)`` for ``i < j`` (equivalently, the weight
    exponents run ``x, x+1, ..., x+n-1`` across ``z_0..z_{n-1}``); the literal
    ``(1 - z_i/z_j)`` gives 1 instead of 2 at ``x = 0, n = 2``.
    """
    if x < 0 or n < 0:
        raise ValueError("x and n must be nonnegative")
    if n == 0:
        return Fraction(1)
    if cap is None:
        cap = x + 2 * n
    value = _ct_series_once(x, n, cap)
    if check:
        wider = _ct_series_once(x, n, cap + 2)
        if wider != value:
            raise CapInstability(f"cap {cap} gives {value}, cap {cap + 2} gives {wider}")
    return value


def _ct_series_once(x: int, n: int, cap: int) -> Fraction:
    cells = (2 * cap + 1) ** n
    if cells > MAX_SERIES_CELLS:
        raise GuardError(f"series box has {cells} cells (limit {MAX_SERIES_CELLS}); reduce n, x or cap")
    lo, hi = (-cap,) * n, (cap,) * n
    num = LaurentBox.one(lo, hi)
    try:
        for i in range(n):
            num = laurent_mul(num, _univariate(n, i, _binomial_poly(x + n - i - 1, inverse=True), lo, hi))
        for i in range(n):
            for j in range(i + 1, n):
                vec = [0] * n
                vec[i], vec[j] = -1, 1
                factor = LaurentBox(lo, hi, {(0,) * n: 1, tuple(vec): -1})
                num = laurent_mul(num, factor)
    except BoxOverflow as exc:
        raise CapInstability(f"cap {cap} too small for the numerator: {exc}") from exc
    den = LaurentBox.one(lo, hi)
    for i in range(n):
        vec = [0] * n
        vec[i] = 1
        den = laurent_mul(den, geometric_expand(tuple(vec), lo, hi), mode="truncating")
    for i in range(n):
        for j in range(i + 1, n):
            vec = [0] * n
            vec[i] = vec[j] = 1
            den = laurent_mul(den, geometric_expand(tuple(vec), lo, hi), mode="truncating")
    return constant_term_of_product(num, den)


def _ct_guard(x: int, y: int, n: int) -> None:
    if min(x, y, n) < 0:
        raise ValueError("x, y, n must be nonnegative")
    if n > 4 or x + y > 6:
        raise GuardError(f"Laurent guard: need n <= 4 and x + y <= 6; got n={n}, x+y={x + y}")


def _pair_product(n: int) -> dict[tuple[int, ...], int]:
    """``prod_{i<j} (z_i - z_j)(z_i + z_j + z_i z_j)`` as a sparse polynomial."""
    poly: dict[tuple[int, ...], int] = {(0,) * n: 1}
    for i in range(n):
        for j in range(i + 1, n):
            factor: dict[tuple[int, ...], int] = {}
            for (ea, ca) in (((1, 0), 1), ((0, 1), -1)):
                for (eb, cb) in (((1, 0), 1), ((0, 1), 1), ((1, 1), 1)):
                    vec = [0] * n
                    vec[i] = ea[0] + eb[0]
                    vec[j] = ea[1] + eb[1]
                    key = tuple(vec)
                    factor[key] = factor.get(key, 0) + ca * cb
            out: dict[tuple[int, ...], int] = {}
            for e1, c1 in poly.items():
                for e2, c2 in factor.items():
                    if c2:
                        key = tuple(a + b for a, b in zip(e1, e2))
                        out[key] = out.get(key, 0) + c1 * c2
            poly = {e: c for e, c in out.items() if c}
    return poly


def _power_series_one_plus_z(power: int, degree: int) -> dict[int, int]:
    """``(1+z)^power`` up to ``z^degree``; a polynomial when ``power >= 0``."""
    top = power if power >= 0 else degree
    return {k: binomial(power, k) for k in range(min(top, degree) + 1)}


def _times(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[ea + eb] = out.get(ea + eb, 0) + ca * cb
    return out


def _ct_weighted(n: int, factors: list[dict[int, int]]) -> Fraction:
    """``CT(prod_i f_i(z_i) * pair product)`` via coefficient pairing."""
    pairs = _pair_product(n)
    lo = tuple(min(min(f), -2 * (n - 1)) for f in factors)
    hi = tuple(max(max(f), 2 * (n - 1)) for f in factors)
    f_box = LaurentBox(lo, hi, {e: c for e, c in _grid_product(factors).items()})
    v_box = LaurentBox(tuple(-h for h in hi), tuple(-l for l in lo), pairs)
    return constant_term_of_product(v_box, f_box)


def _grid_product(factors: list[dict[int, int]]) -> dict[tuple[int, ...], int]:
    out: dict[tuple[int, ...], int] = {(): 1}
    for f in factors:
        out = {e + (k,): c * v for e, c in out.items() for k, v in f.items() if v}
    return out


def ct_laurent_thm12(x: int, y: int, n: int) -> Fraction:
    """CT of ``prod_i (1+z_i)^{x+y+i-1} (1+2z_i)(z_i+2)(z_i-1) z_i^{-y-2n+i+1}``
    times ``prod_{i<j} (z_i - z_j)(z_i + z_j + z_i z_j)``.

    At ``x = y = 0`` the ``i = 0`` factor is ``(1+z_0)^{-1}``, expanded as a
    power series; only terms up to ``z^{y+2n}`` can reach the constant term.
    """
    _ct_guard(x, y, n)
    if n == 0:
        return Fraction(1)
    cubic = {0: -2, 1: -3, 2: 3, 3: 2}  # (1+2z)(z+2)(z-1)
    factors = []
    for i in range(n):
        shift = -y - 2 * n + i + 1
        base = _times(_power_series_one_plus_z(x + y + i - 1, y + 2 * n), cubic)
        factors.append({e + shift: c for e, c in base.items() if c})
    return _ct_weighted(n, factors)


def ct_laurent_thm13(x: int, y: int, n: int) -> Fraction:
    """CT of ``prod_i (1+z_i)^{x+y+i-1} (1+2z_i) z_i^{-y-2n+i+2}`` times the pair product."""
    _ct_guard(x, y, n)
    if n == 0:
        return Fraction(1)
    factors = []
    for i in range(n):
        shift = -y - 2 * n + i + 2
        base = _times(_power_series_one_plus_z(x + y + i - 1, y + 2 * n), {0: 1, 1: 2})
        factors.append({e + shift: c for e, c in base.items() if c})
    return _ct_weighted(n, factors)
