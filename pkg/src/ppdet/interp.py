"""Residual polynomial factors: Step-6 interpolation, extraction, and conjecture explorers."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Literal

from .exact import as_fraction, double_factorial, factorial, pochhammer, pochhammer_ext
from .families import (
    d_matrix,
    e_matrix,
    rhs_prop4_prefactor,
    rhs_prop5_prefactor,
    rhs_thm2_prefactor,
    thm8_sum,
    thm9_sum,
    u_value,
)
from .linalg import ExactMatrix, det
from .poly import UniPoly, lagrange_interpolate

log = logging.getLogger(__name__)

__all__ = [
    "ResidualReport",
    "ConsistencyReport",
    "ExploreReport",
    "step6_nodes",
    "step6_matrix",
    "step6_prefactor",
    "step6_zero_block_holds",
    "p1_via_step6",
    "p1_numeric",
    "p6_value",
    "p4_consistency",
    "p5_det_value",
    "p5_extract",
    "explore_p3",
    "explore_458",
]

Route = Literal["step6", "integer_nodes", "closed_form"]
Verdict = Literal["consistent", "inconsistent", "insufficient-data"]

STEP6_MAX_M = 6
STEP6_MAX_N = 8


@dataclass
class ResidualReport:
    m: int
    n: int
    polynomial: UniPoly
    route: Route
    checks_passed: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def degree(self):
        return self.polynomial.degree()


def _prod(vals) -> Fraction:
    out = Fraction(1)
    for v in vals:
        out *= v
    return out


def _superfactorial(n: int) -> int:
    out = 1
    for i in range(n):
        out *= factorial(i)
    return out


def _check_mn(m: int, n: int) -> None:
    if m < 0 or n < 1:
        raise ValueError(f"need m >= 0 and n >= 1, got m={m}, n={n}")
    if m > n:
        raise ValueError(f"needs m <= n, got m={m}, n={n}")


# --------------------------------------------------------------------------
# Step 6 of the Theorem 2 proof


def step6_nodes(m: int, n: int) -> list[Fraction]:
    """``x = -floor((m+n)/2) + t - 1/2`` for ``t = 0..floor(m/2)``."""
    top = (m + n) // 2
    return [Fraction(-2 * top + 2 * t - 1, 2) for t in range(m // 2 + 1)]


def step6_matrix(x, m: int, n: int) -> ExactMatrix:
    """The bordered ``n x n`` matrix whose determinant gives ``P_1`` up to an explicit factor."""
    x = as_fraction(x)
    P = pochhammer_ext

    def entry(i, j):
        last_i, last_j = i == n - 1, j == n - 1
        if last_i and last_j:
            return u_value(x, x + m, n)
        if last_j:
            return P(2 * x + m + i + 2, n - 1) * P(x + 2 * i - n + 4, n - 1) * P(x + m + 2 * n - i - 1, i)
        if last_i:
            return -P(2 * x + m + n + 1, j) * P(x + 2 * n - j - 1, j) * P(x + m + 2 * j - n + 4, n - 1)
        return P(2 * x + m + i + 2, j) * P(x + 2 * i - j + 3, j) * P(x + m + 2 * j - i + 3, i) * (m + 3 * j - 3 * i)

    return ExactMatrix.build(n, n, entry)


def step6_prefactor(x, m: int, n: int) -> Fraction:
    x = as_fraction(x)
    fm = m // 2
    num = _prod(2 * x + 2 * fm + 2 * i for i in range(1, (m + n) // 2 - fm + 1))
    if n % 2 and not m % 2:
        # last factor of (2x+m+1)_n, not cancelled by the odd-type product
        num *= 2 * x + m + n
    den = pochhammer_ext(x + fm + 1, 2 * n - 2 - fm) * pochhammer_ext(x + m + 1, 2 * n - 2)
    for i in range(1, n):
        den *= pochhammer(3 * x + m + 2 * i + 2, i - 1) * pochhammer(3 * x + 2 * m + 2 * i + 2, i - 1)
    if den == 0:
        raise ZeroDivisionError(f"Step-6 denominator vanishes at x={x}, m={m}, n={n}")
    return Fraction(1, 4 ** (n - 1)) * num / den


def step6_zero_block_holds(m: int, n: int, t: int) -> bool:
    """Entries with ``i <= 2v-m-1`` and ``i+j >= 2v-m`` vanish at the ``t``-th node (``v = floor((m+n)/2) - t``)."""
    x = step6_nodes(m, n)[t]
    v = (m + n) // 2 - t
    mat = step6_matrix(x, m, n)
    for i in range(n):
        for j in range(n):
            if (i, j) == (n - 1, n - 1):
                continue
            if i <= 2 * v - m - 1 and i + j >= 2 * v - m and mat[i, j] != 0:
                return False
    return True


def _step6_value(x, m: int, n: int) -> Fraction:
    return step6_prefactor(x, m, n) * det(step6_matrix(x, m, n))


def p1_via_step6(m: int, n: int) -> ResidualReport:
    """``P_1(x;m,n)`` from the half-integer specializations and Lagrange interpolation."""
    _check_mn(m, n)
    if m > STEP6_MAX_M or n > STEP6_MAX_N:
        raise ValueError(f"Step-6 guard: m <= {STEP6_MAX_M}, n <= {STEP6_MAX_N}")
    nodes = step6_nodes(m, n)
    if len(nodes) != m // 2 + 1:
        raise ValueError("node count shortfall")
    pts = [(x, _step6_value(x, m, n)) for x in nodes]
    poly = lagrange_interpolate(pts)
    return ResidualReport(m, n, poly, "step6", checks_passed=0)


def _p1_at(x: int, m: int, n: int) -> Fraction | None:
    pre = rhs_thm2_prefactor(x, m, n)
    if pre == 0:
        return None
    return det(d_matrix(x, x + m, n)) / pre


def p1_numeric(m: int, n: int, extra: int = 2) -> ResidualReport:
    """``P_1`` by dividing ``D(x,x+m;n)`` by its explicit factor at integer nodes."""
    _check_mn(m, n)
    need = m // 2 + 1
    pts: list[tuple[int, Fraction]] = []
    notes = []
    x = 0
    while len(pts) < need + extra:
        v = _p1_at(x, m, n)
        if v is None:
            notes.append(f"prefactor zero at x={x}; node skipped")
        else:
            pts.append((x, v))
        x += 1
    poly = lagrange_interpolate(pts[:need])
    passed = 0
    for xe, ve in pts[need:]:
        if poly(xe) != ve:
            raise ArithmeticError(f"P1({m},{n}) interpolant disagrees at x={xe}")
        passed += 1
    return ResidualReport(m, n, poly, "integer_nodes", checks_passed=passed, notes=notes)


# --------------------------------------------------------------------------
# E-family residuals


def p6_value(x, y, n: int):
    """``(prod_{i<n} i!) * sum_k (-1)^k C(n,k) (x)_k (y)_{n-k}``."""
    if n < 0:
        raise ValueError("n >= 0 required")
    return thm8_sum(x, y, n) * _superfactorial(n)


@dataclass
class ConsistencyReport:
    n: int
    checked: int = 0
    passed: int = 0
    skipped: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def _tally(self, ok: bool, label: str) -> None:
        self.checked += 1
        if ok:
            self.passed += 1
        else:
            self.failures.append(label)


def p4_consistency(n: int, grid: Iterable[tuple[int, int]] | None = None) -> ConsistencyReport:
    """Check ``det E / prefactor = P_6`` on ``grid`` and the four structural properties of ``P_6``."""
    if n < 0:
        raise ValueError("n >= 0 required")
    rep = ConsistencyReport(n)
    grid = list(grid) if grid is not None else [(x, y) for x in range(5) for y in range(5)]
    for x, y in grid:
        try:
            pre = rhs_prop4_prefactor(x, y, n)
        except ZeroDivisionError:
            rep.skipped.append(f"prefactor pole at ({x},{y})")
            log.info("p4_consistency: prefactor pole at (%s,%s), n=%s", x, y, n)
            continue
        if pre == 0:
            rep.skipped.append(f"prefactor zero at ({x},{y})")
            continue
        rep._tally(det(e_matrix(x, y, n)) / pre == p6_value(x, y, n), f"division at ({x},{y})")
    # (1) degree at most n in x for fixed y
    t = UniPoly.x()
    for y in range(3):
        rep._tally(p6_value(t, UniPoly.constant(y), n).degree() <= n, f"degree witness y={y}")
    # (2) vanishing at (-u,-v), u+v <= n-1
    for u in range(n):
        for v in range(n - u):
            rep._tally(p6_value(-u, -v, n) == 0, f"vanishing at (-{u},-{v})")
    # (3) antisymmetry
    for x, y in grid:
        rep._tally(p6_value(y, x, n) == (-1) ** n * p6_value(x, y, n), f"antisymmetry at ({x},{y})")
    # (4) y = x+1
    h = n // 2
    for x in range(4):
        want = Fraction(factorial(n), factorial(h)) * _superfactorial(n) * pochhammer(x + 1, h)
        rep._tally(p6_value(x, x + 1, n) == want, f"y=x+1 form at x={x}")
    return rep


def p5_det_value(x, m: int, n: int) -> Fraction:
    """``P_5(x;m,n)`` from its own determinant representation."""
    x = as_fraction(x)
    den = pochhammer(x + m, n // 2 - m // 2)
    for i in range(n):
        den *= pochhammer(3 * x + m + 2 * i + 1, i) * pochhammer(3 * x + 2 * m + 2 * i + 1, i)
    if den == 0:
        raise ZeroDivisionError(f"P5 denominator vanishes at x={x}")
    mat = ExactMatrix.build(
        n,
        n,
        lambda i, j: pochhammer(2 * x + m + i, j)
        * pochhammer(x + 2 * i - j + 2, j)
        * pochhammer(x + m + 2 * j - i + 2, i)
        * (m + 3 * j - 3 * i),
    )
    return det(mat) / den


def _p5_closed(m: int, n: int) -> UniPoly:
    h = n // 2
    scale = Fraction(factorial(n), factorial(h)) * _superfactorial(n)
    return thm9_sum(UniPoly.x(), m, n) * scale


def p5_extract(m: int, n: int, extra: int = 2) -> ResidualReport:
    """``P_5(x;m,n)`` from ``E(x,x+m;n)`` at integer nodes, checked against both other routes."""
    _check_mn(m, n)
    closed = _p5_closed(m, n)
    need = m // 2 + 1
    notes: list[str] = []
    if m == 0 and n % 2:
        # E(x,x;n) vanishes identically; dividing it out says nothing
        notes.append("E(x,x;n) is identically zero for odd n; closed form used")
        poly, route = closed, "closed_form"
        nodes = list(range(1, need + extra + 1))
    else:
        pts: list[tuple[int, Fraction]] = []
        x = 0
        while len(pts) < need + extra:
            try:
                pre = rhs_prop5_prefactor(x, m, n)
            except ZeroDivisionError:
                pre = 0
            if pre == 0:
                notes.append(f"prefactor zero at x={x}; node skipped")
            else:
                pts.append((x, det(e_matrix(x, x + m, n)) / pre))
            x += 1
        poly, route = lagrange_interpolate(pts[:need]), "integer_nodes"
        for xe, ve in pts[need:]:
            if poly(xe) != ve:
                raise ArithmeticError(f"P5({m},{n}) interpolant disagrees at x={xe}")
        nodes = [p[0] for p in pts]
    passed = 0
    if poly.coeffs != closed.coeffs:
        raise ArithmeticError(f"P5({m},{n}) disagrees with the closed form")
    passed += 1
    for xe in nodes:
        try:
            v = p5_det_value(xe, m, n)
        except ZeroDivisionError:
            continue
        if v != poly(xe):
            raise ArithmeticError(f"P5({m},{n}) disagrees with its determinant at x={xe}")
        passed += 1
    return ResidualReport(m, n, poly, route, checks_passed=passed, notes=notes)


# --------------------------------------------------------------------------
# Conjecture explorers


@dataclass
class ExploreRow:
    n: int
    polynomial: UniPoly | None
    note: str = ""


@dataclass
class CoefficientFit:
    parity: str
    e: int
    points: list[tuple[int, Fraction]]
    polynomial: UniPoly | None
    status: Verdict


@dataclass
class ExploreReport:
    conjecture: str
    m: int
    rows: list[ExploreRow]
    fits: list[CoefficientFit]
    verdict: Verdict
    reasons: list[str] = field(default_factory=list)


def _n_values(n) -> list[int]:
    return [n] if isinstance(n, int) else list(n)


def _positive_integer_coeffs(p: UniPoly) -> bool:
    return not p.is_zero() and all(c.denominator == 1 and c > 0 for c in p.coeffs)


def _explore(name: str, m: int, ns: list[int], compute) -> ExploreReport:
    fm = m // 2
    rows: list[ExploreRow] = []
    reasons: list[str] = []
    bad = False
    usable: dict[int, UniPoly] = {}
    for n in ns:
        if n < max(m, 1):
            rows.append(ExploreRow(n, None, "excluded: needs m <= n"))
            continue
        poly, note = compute(n)
        rows.append(ExploreRow(n, poly, note))
        if poly is None:
            continue
        usable[n] = poly
        if poly.degree() != fm:
            bad = True
            reasons.append(f"n={n}: degree {poly.degree()} != {fm}")
        elif not _positive_integer_coeffs(poly):
            bad = True
            reasons.append(f"n={n}: coefficients not positive integers")
    fits: list[CoefficientFit] = []
    confirmed = False
    for parity, label in ((0, "even"), (1, "odd")):
        cls = sorted(n for n in usable if n % 2 == parity)
        for e in range(fm + 1):
            d = fm - e
            pts = [(n, usable[n][e]) for n in cls]
            if len(pts) < d + 2:
                fits.append(CoefficientFit(label, e, pts, None, "insufficient-data"))
                continue
            p = lagrange_interpolate(pts[: d + 1])
            ok = all(p(n) == v for n, v in pts[d + 1:]) and p.degree() == d and _positive_integer_coeffs(p)
            if not ok:
                bad = True
                reasons.append(f"{label} n, x^{e}: coefficient not a degree-{d} polynomial in n with positive integer coefficients")
            else:
                confirmed = True
            fits.append(CoefficientFit(label, e, pts, p, "consistent" if ok else "inconsistent"))
    if bad:
        verdict: Verdict = "inconsistent"
    elif confirmed:
        verdict = "consistent"
    else:
        verdict = "insufficient-data"
        reasons.append("no parity class has enough usable n values to test the coefficient polynomials")
    return ExploreReport(name, m, rows, fits, verdict, reasons)


def explore_p3(m: int, n) -> ExploreReport:
    """Evidence for the exact-degree / positive-coefficient conjecture on ``P_3(x;m,n)``.

    ``m = 0`` with odd ``n`` is skipped: ``D(x,x;n)`` vanishes identically there.
    """

    def compute(k: int):
        if m == 0 and k % 2:
            return None, "excluded: D(x,x;n) = 0 for odd n"
        p1 = p1_via_step6(m, k).polynomial
        return p1 * Fraction(double_factorial(2 * (k // 2) - 1), _superfactorial(k)), ""

    return _explore("p3", m, _n_values(n), compute)


def explore_458(m: int, n) -> ExploreReport:
    """Evidence for the analogous conjecture on the ``P_5`` sum polynomial."""

    def compute(k: int):
        p = thm9_sum(UniPoly.x(), m, k)
        if p.is_zero():
            return None, "excluded: sum vanishes identically"
        return p, ""

    return _explore("c458", m, _n_values(n), compute)
