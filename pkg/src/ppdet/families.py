"""Matrix families and closed-form right-hand sides.

Every builder returns an :class:`ExactMatrix` (or :class:`SkewMatrix`) whose
determinant (or Pfaffian) is one side of an identity; every ``rhs_*`` function
evaluates the matching product formula exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .exact import (
    DirectedBounds,
    Rational,
    as_fraction,
    binomial,
    directed_sum,
    double_factorial,
    factorial,
    factorial_reciprocal,
    format_rational,
    pochhammer,
    pochhammer_ext,
)
from .linalg import ExactMatrix, SkewMatrix
from .poly import UniPoly, poly_pochhammer

__all__ = [
    "IdentityRecord",
    "matrix_21",
    "matrix_22a",
    "matrix_22b",
    "q_entry",
    "q_matrix",
    "q_matrix_odd",
    "d_matrix",
    "d_matrix_alt4",
    "d_matrix_alt5",
    "d_a_matrix",
    "d_b_matrix",
    "d_a_prefactor",
    "d_b_prefactor",
    "s_value",
    "t_value",
    "u_value",
    "e_matrix",
    "e_b_matrix",
    "ab_matrix",
    "andrews_burge_51",
    "andrews_burge_52",
    "thm12_matrix",
    "rhs_thm11",
    "rhs_cor3",
    "rhs_thm2_prefactor",
    "rhs_thm8",
    "thm8_prefactor",
    "thm8_sum",
    "rhs_thm9",
    "thm9_sum",
    "rhs_cor6",
    "rhs_prop4_prefactor",
    "rhs_prop5_prefactor",
    "rhs_thm10",
    "rhs_thm12",
    "rhs_thm12_short",
    "rhs_thm12_m",
    "rhs_thm13",
]


@dataclass(frozen=True)
class IdentityRecord:
    """One verified grid point: both sides exact, plus the verdict."""

    identity: str
    params: dict
    lhs: Fraction
    rhs: Fraction
    elapsed_ms: int = 0
    note: str = ""
    equal: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "lhs", as_fraction(self.lhs))
        object.__setattr__(self, "rhs", as_fraction(self.rhs))
        object.__setattr__(self, "equal", self.lhs == self.rhs)

    @property
    def skipped(self) -> bool:
        """Point excluded by a guard or a pole; not evaluated."""
        return self.note.startswith("skipped")

    def to_dict(self) -> dict:
        d = {
            "identity": self.identity,
            "params": dict(self.params),
            "lhs": format_rational(self.lhs),
            "rhs": format_rational(self.rhs),
            "equal": self.equal,
            "elapsed_ms": self.elapsed_ms,
        }
        if self.note:
            d["note"] = self.note
        return d


def _prod(values) -> Fraction:
    result = Fraction(1)
    for v in values:
        result *= v
    return result


def _require_int(**kw):
    for name, v in kw.items():
        if isinstance(v, bool) or not isinstance(v, int):
            raise TypeError(f"{name} must be an integer, got {v!r}")


def _require_nonneg(**kw):
    _require_int(**kw)
    for name, v in kw.items():
        if v < 0:
            raise ValueError(f"{name} must be nonnegative, got {v}")


def _require_y_ge_x(x, y):
    if y < x:
        raise ValueError(f"polynomial forms assume y >= x, got x={x}, y={y}; use D(x,y) = (-1)^n D(y,x)")


def _square(n: int, entry: Callable[[int, int], object]) -> ExactMatrix:
    return ExactMatrix.build(n, n, entry)


# --------------------------------------------------------------------------
# Theorem 1 matrices


def matrix_21(x: int, n: int) -> ExactMatrix:
    """``binom(x+i, j-i)`` for ``0 <= i < n`` and ``0 <= j <= 2n+x-2``.

    The column range is the printed one (width ``2n+x-1``), not the
    ``n x (2n-1)`` shape named in the surrounding prose.
    """
    _require_nonneg(x=x, n=n)
    return ExactMatrix.build(n, 2 * n + x - 1, lambda i, j: binomial(x + i, j - i))


def q_entry(x: int, i: int, j: int) -> int:
    """Number of nonintersecting pairs ``(P_i, P_j)`` as a directed binomial sum."""
    return directed_sum(DirectedBounds(x + 2 * i - j, x + 2 * j - i), lambda r: binomial(2 * x + i + j, r))


def d_matrix(x: int, y: int, n: int) -> ExactMatrix:
    """``D(x,y;n)``: entries ``sum_{x+2i-j < r <= y+2j-i} binom(x+y+i+j, r)``."""
    _require_int(x=x, y=y)
    _require_nonneg(n=n)
    return _square(
        n,
        lambda i, j: directed_sum(
            DirectedBounds(x + 2 * i - j, y + 2 * j - i), lambda r: binomial(x + y + i + j, r)
        ),
    )


def matrix_22a(x: int, n: int) -> ExactMatrix:
    return d_matrix(x, x, n)


def matrix_22b(x: int, n: int) -> ExactMatrix:
    """The ``(n-1) x (n-1)`` matrix whose determinant times ``4^x`` is the odd-n square."""
    _require_nonneg(x=x, n=n)

    def entry(i, j):
        return (
            factorial(2 * x + i + j + 1)
            * (3 * x + 3 * i + 4)
            * (3 * x + 3 * j + 4)
            * (3 * j - 3 * i)
            * factorial_reciprocal(x + 2 * i - j + 2)
            * factorial_reciprocal(x + 2 * j - i + 2)
        )

    return _square(max(n - 1, 0), entry)


def q_matrix(x: int, n: int) -> SkewMatrix:
    """Skew matrix ``(Q(i,j))_{0<=i,j<n}``; its Pfaffian counts families for even ``n``."""
    _require_nonneg(x=x, n=n)
    return SkewMatrix.build(n, lambda i, j: q_entry(x, i, j))


def q_matrix_odd(x: int, n: int) -> SkewMatrix:
    """Order ``n+1`` skew matrix indexed ``-1..n-1`` with the dummy-path border.

    Stored index ``k`` corresponds to path index ``k-1``; the border row is
    ``Q(-1, j) = 2^(x+j)``.
    """
    _require_nonneg(x=x, n=n)

    def entry(a, b):
        i, j = a - 1, b - 1
        if i == -1:
            return 2 ** (x + j)
        return q_entry(x, i, j)

    return SkewMatrix.build(n + 1, entry)


# --------------------------------------------------------------------------
# Equivalent forms of D(x,y;n)


def s_value(x: int, y: int, n: int) -> Rational:
    """``S(x,y;n)``, the top-left entry of the polynomial form of ``D``."""
    f = (y - x) // 2
    c = -((x - y) // 2)

    def term(r):
        return pochhammer(x + r + 1, f - r) * pochhammer(y - r + 1, 2 * n + r - 2)

    return sum((term(r) for r in range(1, f + 1)), 0) + sum((term(r) for r in range(0, c)), 0)


def t_value(x: int, y: int) -> Rational:
    """``T(x,y)``, the top-left entry after the column rescaling that follows ``S``."""
    f = (y - x) // 2
    c = -((x - y) // 2)

    def term(r):
        return pochhammer(x + r + 1, f - r) * pochhammer(y - r + 1, r)

    return sum((term(r) for r in range(1, f + 1)), 0) + sum((term(r) for r in range(0, c)), 0)


def u_value(x: Rational, y: Rational, n: int) -> Fraction:
    """Bottom-right entry ``U(x,y;n)`` of the Step-6 matrix (``y - x`` a nonnegative integer)."""
    m = y - x
    if as_fraction(m).denominator != 1 or m < 0:
        raise ValueError("U(x,y;n) needs y - x a nonnegative integer")
    total = Fraction(0)
    for r in range(int(m)):
        total += (
            pochhammer_ext(x + y + n + 1, n - 2)
            * pochhammer_ext(x + n + r, n - r - 1)
            * pochhammer_ext(y + n - r, r + n - 1)
        )
    return total


def d_matrix_alt4(x: int, y: int, n: int) -> ExactMatrix:
    """``D`` after subtracting twice the previous row/column (top-down, left-right)."""
    _require_nonneg(x=x, y=y, n=n)
    fr = factorial_reciprocal

    def entry(i, j):
        if i == 0 and j == 0:
            return directed_sum(DirectedBounds(x, y), lambda r: binomial(x + y, r))
        if i == 0:
            return factorial(x + y + j) * (x + 2 * y + 3 * j + 1) * fr(x - j + 1) * fr(y + 2 * j)
        if j == 0:
            return -factorial(x + y + i) * (2 * x + y + 3 * i + 1) * fr(x + 2 * i) * fr(y - i + 1)
        return (
            factorial(x + y + i + j - 1)
            * (y - x + 3 * j - 3 * i)
            * (2 * x + y + 3 * i + 1)
            * (x + 2 * y + 3 * j + 1)
            * fr(x + 2 * i - j + 1)
            * fr(y + 2 * j - i + 1)
        )

    return _square(n, entry)


def d_matrix_alt5(x: int, y: int, n: int) -> ExactMatrix:
    """``D`` after subtracting half the next row/column, leaving a special last row/column."""
    _require_nonneg(x=x, y=y, n=n)
    fr = factorial_reciprocal
    half = Fraction(1, 2)

    def entry(i, j):
        last_i, last_j = i == n - 1, j == n - 1
        if last_i and last_j:
            return directed_sum(
                DirectedBounds(x + n - 1, y + n - 1), lambda r: binomial(x + y + 2 * n - 2, r)
            )
        if last_j:
            return half * factorial(x + y + i + n) * (2 * x + y + 3 * i + 4) * fr(x + 2 * i - n + 3) * fr(
                y + 2 * n - i - 2
            )
        if last_i:
            return -half * factorial(x + y + j + n) * (x + 2 * y + 3 * j + 4) * fr(x + 2 * n - j - 2) * fr(
                y + 2 * j - n + 3
            )
        return (
            Fraction(1, 4)
            * factorial(x + y + i + j + 1)
            * (y - x + 3 * j - 3 * i)
            * (2 * x + y + 3 * i + 4)
            * (x + 2 * y + 3 * j + 4)
            * fr(x + 2 * i - j + 2)
            * fr(y + 2 * j - i + 2)
        )

    return _square(n, entry)


def d_a_matrix(x: int, y: int, n: int) -> ExactMatrix:
    """Polynomial-entry form ``D_A`` with ``S(x,y;n)`` in the corner (needs ``y >= x``)."""
    _require_nonneg(x=x, y=y, n=n)
    _require_y_ge_x(x, y)
    f = (y - x) // 2

    def entry(i, j):
        if i == 0 and j == 0:
            return s_value(x, y, n)
        if i == 0:
            return (
                pochhammer(x + y + 1, j)
                * pochhammer_ext(x - j + 2, f + j - 1)
                * pochhammer(y + 2 * j + 1, 2 * n - 2 * j - 2)
            )
        if j == 0:
            return -pochhammer(y - i + 2, 2 * n - 2)
        return (
            pochhammer(x + y + i + 1, j - 1)
            * pochhammer(x + 2 * i - j + 2, j - 1)
            * pochhammer(y + 2 * j - i + 2, 2 * n - 2 * j - 2)
            * (y - x + 3 * j - 3 * i)
        )

    return _square(n, entry)


def d_a_prefactor(x: int, y: int, n: int) -> Fraction:
    """``D(x,y;n) = d_a_prefactor * det(D_A)``."""
    out = Fraction(factorial(x + y)) * factorial_reciprocal((x + y) // 2) * factorial_reciprocal(y + 2 * n - 2)
    for i in range(1, n):
        out *= (
            factorial(x + y + i)
            * (2 * x + y + 3 * i + 1)
            * (x + 2 * y + 3 * i + 1)
            * factorial_reciprocal(x + 2 * i)
            * factorial_reciprocal(y + 2 * n - i - 1)
        )
    return out


def d_b_matrix(x: int, y: int, n: int) -> ExactMatrix:
    """``D_B``: ``D_A`` with rows and columns rescaled so ``T(x,y)`` sits in the corner."""
    _require_nonneg(x=x, y=y, n=n)
    _require_y_ge_x(x, y)
    f = (y - x) // 2

    def entry(i, j):
        if i == 0 and j == 0:
            return t_value(x, y)
        if i == 0:
            return pochhammer(x + y + 1, j) * pochhammer_ext(x - j + 2, f + j - 1)
        if j == 0:
            return -pochhammer(y - i + 2, i - 1)
        return (
            pochhammer(x + y + i + 1, j - 1)
            * pochhammer(x + 2 * i - j + 2, j - 1)
            * pochhammer(y + 2 * j - i + 2, i - 1)
            * (y - x + 3 * j - 3 * i)
        )

    return _square(n, entry)


def d_b_prefactor(y: int, n: int) -> Fraction:
    """``det(D_A) = d_b_prefactor * det(D_B)``."""
    return as_fraction(pochhammer(y + 1, 2 * n - 2)) * _prod(pochhammer(y + 2 * i + 1, n - i - 1) for i in range(1, n))


# --------------------------------------------------------------------------
# E(x,y;n) and relatives


def e_matrix(x: int, y: int, n: int) -> ExactMatrix:
    """``E(x,y;n)``: ``(x+y+i+j-1)! (y-x+3j-3i) / ((x+2i-j+1)! (y+2j-i+1)!)``.

    An entry whose linear factor ``y-x+3j-3i`` vanishes is 0.  This only
    matters at ``x = y = 0, i = j = 0`` where ``(-1)!`` would otherwise appear,
    and agrees with the limit along ``y = x``.
    """
    _require_nonneg(x=x, y=y, n=n)

    def entry(i, j):
        lin = y - x + 3 * j - 3 * i
        if lin == 0:
            return 0
        return (
            factorial(x + y + i + j - 1)
            * lin
            * factorial_reciprocal(x + 2 * i - j + 1)
            * factorial_reciprocal(y + 2 * j - i + 1)
        )

    return _square(n, entry)


def e_b_matrix(x, y, n: int) -> ExactMatrix:
    """Polynomial form of ``E``: ``(x+y+i)_j (x+2i-j+2)_j (y+2j-i+2)_i (y-x+3j-3i)``.

    Accepts rationals or :class:`UniPoly` for ``x`` and ``y``.
    """
    _require_nonneg(n=n)

    def poch(a, k):
        return poly_pochhammer(a, k) if isinstance(a, UniPoly) else pochhammer(a, k)

    def entry(i, j):
        return (
            poch(x + y + i, j)
            * poch(x + 2 * i - j + 2, j)
            * poch(y + 2 * j - i + 2, i)
            * (y - x + 3 * j - 3 * i)
        )

    return _square(n, entry)


def ab_matrix(x: int, y: int, n: int, variant: str = "factorial") -> ExactMatrix:
    """Matrices of the Andrews-Burge type identity, factorial or binomial form."""
    _require_nonneg(x=x, y=y, n=n)
    if variant == "factorial":

        def entry(i, j):
            top = x + y + i + j - 1
            if top < 0:
                raise ZeroDivisionError(f"(x+y+i+j-1)! is a pole at x={x}, y={y}, i={i}, j={j}")
            return factorial(top) * factorial_reciprocal(x + 2 * i - j) * factorial_reciprocal(y + 2 * j - i)

    elif variant == "binomial":

        def entry(i, j):
            return binomial(x + y + i + j, y + 2 * j - i) + binomial(x + y + i + j - 1, y + 2 * j - i - 1)

    else:
        raise ValueError(f"unknown variant {variant!r}")
    return _square(n, entry)


def andrews_burge_51(n: int) -> ExactMatrix:
    """``binom(i+j+1, 2j-i) + binom(i+j, 2j-i-1)``."""
    _require_nonneg(n=n)
    return _square(n, lambda i, j: binomial(i + j + 1, 2 * j - i) + binomial(i + j, 2 * j - i - 1))


def andrews_burge_52(x: int, n: int) -> ExactMatrix:
    """``binom(x+i+j+1, 2j-i+1) + binom(x+i+j, 2j-i)``; entrywise ``ab_matrix(x, 1, n, 'binomial')``."""
    _require_nonneg(x=x, n=n)
    return _square(n, lambda i, j: binomial(x + i + j + 1, 2 * j - i + 1) + binomial(x + i + j, 2 * j - i))


def thm12_matrix(x: int, y: int, n: int) -> ExactMatrix:
    """Entries ``(x+y+i+j-1)! (2x+y+3i+1)(x+2y+3j+1)(y-x+3j-3i) / ((x+2i-j)! (y+2j-i)!)``.

    This is the single-entry constant-term matrix in the proof of the
    constant-term form of Theorem 8; kept so the two readings can be compared.
    """
    _require_nonneg(x=x, y=y, n=n)

    def entry(i, j):
        lin = y - x + 3 * j - 3 * i
        if lin == 0:
            return 0
        return (
            factorial(x + y + i + j - 1)
            * (2 * x + y + 3 * i + 1)
            * (x + 2 * y + 3 * j + 1)
            * lin
            * factorial_reciprocal(x + 2 * i - j)
            * factorial_reciprocal(y + 2 * j - i)
        )

    return _square(n, entry)


# --------------------------------------------------------------------------
# Closed forms


def rhs_thm11(x: int, n: int) -> Fraction:
    """TSSCPP-type product; ``rhs_thm11(0, n)`` is 1, 2, 7, 42, 429, ..."""
    _require_nonneg(x=x, n=n)
    fr = factorial_reciprocal

    def block(i):
        return factorial(3 * x + 3 * i + 1) * fr(3 * x + 2 * i + 1) * fr(x + 2 * i)

    if n % 2 == 0:
        return _prod(block(i) for i in range(n)) * _prod(
            factorial(2 * x + 2 * i + 1) * factorial(2 * i) for i in range(n // 2)
        )
    return (
        2**x
        * _prod(block(i) for i in range(1, n))
        * _prod(factorial(2 * x + 2 * i) * factorial(2 * i - 1) for i in range(1, (n - 1) // 2 + 1))
    )


def rhs_thm2_prefactor(x: Rational, m: int, n: int) -> Fraction:
    """Explicit factor in front of ``P_1(x;m,n)`` (integer ``x``)."""
    _require_nonneg(x=x, m=m, n=n)
    fr = factorial_reciprocal
    out = Fraction(1)
    for i in range(1, n):
        out *= (
            factorial(2 * x + m + i)
            * pochhammer(3 * x + m + 2 * i + 2, i)
            * pochhammer(3 * x + 2 * m + 2 * i + 2, i)
            * fr(x + 2 * i)
            * fr(x + m + 2 * i)
        )
    out *= factorial(2 * x + m) * fr(x + m // 2) * fr(x + m)
    cm = (m + 1) // 2
    out *= _prod(2 * x + 2 * cm + 2 * i + 1 for i in range(n // 2))
    return out


def rhs_cor3(x: int, m: int, n: int) -> Fraction:
    """``D(x, x+m; n)`` in closed form for ``m = 0..4``."""
    _require_nonneg(x=x, m=m, n=n)
    if m not in range(5):
        raise ValueError(f"closed forms exist only for m = 0..4, got {m}")
    if n < m:
        raise ValueError(f"closed form for m={m} needs n >= {m}")
    fr = factorial_reciprocal
    h = n // 2
    if m == 0:
        if n % 2:
            return Fraction(0)
        core = _prod(
            factorial(i) * factorial(2 * x + i) * pochhammer(3 * x + 2 * i + 2, i) ** 2 * fr(x + 2 * i) ** 2
            for i in range(n)
        )
        return core * _prod(2 * x + 2 * i + 1 for i in range(h)) / double_factorial(n - 1)
    # m = 1..4 share one shape: i! (2x+i+m)! (3x+2i+a)_i (3x+2i+b)_i / ((x+2i)! (x+2i+m)!)
    a, b = {1: (3, 4), 2: (4, 6), 3: (5, 8), 4: (6, 10)}[m]
    odd_shift = {1: 3, 2: 3, 3: 5, 4: 5}[m]
    core = _prod(
        factorial(i)
        * factorial(2 * x + i + m)
        * pochhammer(3 * x + 2 * i + a, i)
        * pochhammer(3 * x + 2 * i + b, i)
        * fr(x + 2 * i)
        * fr(x + 2 * i + m)
        for i in range(n)
    )
    core *= _prod(2 * x + 2 * i + odd_shift for i in range(h))
    core /= double_factorial(2 * h - 1)
    even = n % 2 == 0
    if m == 1:
        return core
    if m == 2:
        return core * (x + n + 1 if even else 2 * x + n + 2) / (x + 1)
    if m == 3:
        return core * (x + 2 * n + 1 if even else 3 * x + 2 * n + 5) / (x + 1)
    tail = x * x + (4 * n + 3) * x + 2 * (n * n + 4 * n + 1) if even else (2 * x + n + 4) * (2 * x + 2 * n + 4)
    return core * tail / ((x + 1) * (x + 2))


def thm8_sum(x: Rational, y: Rational, n: int) -> Rational:
    """``sum_k (-1)^k C(n,k) (x)_k (y)_{n-k}``; works for UniPoly arguments too."""
    poch = poly_pochhammer if isinstance(x, UniPoly) or isinstance(y, UniPoly) else pochhammer
    if poch is poly_pochhammer:
        x = x if isinstance(x, UniPoly) else UniPoly.constant(x)
        y = y if isinstance(y, UniPoly) else UniPoly.constant(y)
        total = UniPoly()
    else:
        total = 0
    for k in range(n + 1):
        total = total + (-1) ** k * binomial(n, k) * poch(x, k) * poch(y, n - k)
    return total


def thm8_prefactor(x: int, y: int, n: int, extra: int = 0, with_factorials: bool = True) -> Fraction:
    """``prod i! (x+y+i-1)! (2x+y+2i+1)_{i+e} (x+2y+2i+1)_{i+e} / ((x+2i+1)! (y+2i+1)!)``.

    Requires ``x + y >= 1``; the ``x = y = 0`` pole is handled by callers.
    """
    fr = factorial_reciprocal
    out = Fraction(1)
    for i in range(n):
        out *= (
            (factorial(i) if with_factorials else 1)
            * factorial(x + y + i - 1)
            * pochhammer(2 * x + y + 2 * i + 1, i + extra)
            * pochhammer(x + 2 * y + 2 * i + 1, i + extra)
            * fr(x + 2 * i + 1)
            * fr(y + 2 * i + 1)
        )
    return out


def _thm8_at_origin(n: int, extra: int, with_factorials: bool) -> Fraction:
    # x = y = 0: (x+y-1)! is a pole and the sum vanishes.  Take the limit
    # along x = y = t: Gamma(2t) * S(t) -> S'(0) / 2.
    t = UniPoly.x()
    s = thm8_sum(t, t, n)
    limit = s[1] / 2
    if n == 0:
        return Fraction(1)
    rest = Fraction(1)
    for i in range(1, n):
        rest *= (
            (factorial(i) if with_factorials else 1)
            * factorial(i - 1)
            * pochhammer(2 * i + 1, i + extra)
            * pochhammer(2 * i + 1, i + extra)
            * factorial_reciprocal(2 * i + 1) ** 2
        )
    # i = 0 factor without (x+y-1)!: 0! * (1)_e^2 / (1! 1!)
    first = pochhammer(1, extra) ** 2
    return limit * first * rest


def rhs_thm8(x: int, y: int, n: int) -> Fraction:
    """Closed form of ``E(x,y;n)``; the ``x = y = 0`` value is the limit along ``y = x``."""
    _require_nonneg(x=x, y=y, n=n)
    if x == 0 and y == 0:
        return _thm8_at_origin(n, 0, True)
    return thm8_prefactor(x, y, n) * thm8_sum(x, y, n)


def rhs_prop4_prefactor(x: int, y: int, n: int) -> Fraction:
    """Factor in front of ``P_4(x,y;n)`` (no ``i!``)."""
    _require_nonneg(x=x, y=y, n=n)
    if x + y == 0 and n > 0:
        raise ZeroDivisionError("prefactor has a pole at x = y = 0")
    return thm8_prefactor(x, y, n, with_factorials=False)


def thm9_sum(x: Rational, m: int, n: int):
    """``sum_k C(m, 2k+[n odd]) (floor(n/2)-k+1)_k (x+ceil(m/2)+floor(n/2))_{floor(m/2)-k}``.

    ``x`` may be a rational or a :class:`UniPoly`.
    """
    _require_nonneg(m=m, n=n)
    chi = n % 2
    h, fm, cm = n // 2, m // 2, (m + 1) // 2
    poly = isinstance(x, UniPoly)
    total = UniPoly() if poly else 0
    for k in range(fm + 1):
        c = binomial(m, 2 * k + chi)
        if c == 0:
            continue
        arg = x + cm + h
        p = poly_pochhammer(arg, fm - k) if poly else pochhammer(arg, fm - k)
        total = total + p * (c * pochhammer(h - k + 1, k))
    return total


def rhs_thm9(x: int, m: int, n: int) -> Fraction:
    """Closed form of ``E(x, x+m; n)`` for ``m <= n``."""
    _require_nonneg(x=x, m=m, n=n)
    if m > n:
        raise ValueError(f"needs m <= n, got m={m}, n={n}")
    h = n // 2
    lead = Fraction(factorial(n), factorial(h))
    s = thm9_sum(x, m, n)
    tail_len = h - m // 2
    if x == 0 and m == 0:
        if n == 0:
            return Fraction(1)
        if n % 2 or s == 0:
            return Fraction(0)
        # Gamma(2x) (x)_h -> (h-1)!/2 as x -> 0
        limit = Fraction(factorial(h - 1), 2)
        rest = _prod(
            factorial(i)
            * factorial(i - 1)
            * pochhammer(2 * i + 1, i) ** 2
            * factorial_reciprocal(2 * i + 1) ** 2
            for i in range(1, n)
        )
        return lead * limit * rest * s
    fr = factorial_reciprocal
    core = _prod(
        factorial(i)
        * factorial(2 * x + m + i - 1)
        * pochhammer(3 * x + m + 2 * i + 1, i)
        * pochhammer(3 * x + 2 * m + 2 * i + 1, i)
        * fr(x + 2 * i + 1)
        * fr(x + m + 2 * i + 1)
        for i in range(n)
    )
    return lead * core * pochhammer(x + m, tail_len) * s


def rhs_prop5_prefactor(x: int, m: int, n: int) -> Fraction:
    """Factor in front of ``P_5(x;m,n)`` including ``(x+m)_{floor(n/2)-floor(m/2)}``."""
    _require_nonneg(x=x, m=m, n=n)
    if 2 * x + m == 0 and n > 0:
        raise ZeroDivisionError("prefactor has a pole at x = m = 0")
    fr = factorial_reciprocal
    core = _prod(
        factorial(2 * x + m + i - 1)
        * pochhammer(3 * x + m + 2 * i + 1, i)
        * pochhammer(3 * x + 2 * m + 2 * i + 1, i)
        * fr(x + 2 * i + 1)
        * fr(x + m + 2 * i + 1)
        for i in range(n)
    )
    return core * pochhammer(x + m, n // 2 - m // 2)


def rhs_cor6(x: int, m: int, n: int) -> Fraction:
    """``E(x, x+m; n)`` for ``m`` in ``{0, 1}``."""
    _require_nonneg(x=x, m=m, n=n)
    fr = factorial_reciprocal
    if m == 0:
        if n % 2:
            return Fraction(0)
        # second printed form; finite at x = 0
        return _prod(pochhammer(3 * x + 2 * i + 1, i) ** 2 * fr(x + 2 * i + 1) ** 2 for i in range(n)) * _prod(
            factorial(2 * x + 2 * i) ** 2 * factorial(2 * i + 1) ** 2 for i in range(n // 2)
        )
    if m == 1:
        h = n // 2
        core = _prod(
            factorial(i)
            * factorial(2 * x + i)
            * pochhammer(3 * x + 2 * i + 2, i)
            * pochhammer(3 * x + 2 * i + 3, i)
            * fr(x + 2 * i + 1)
            * fr(x + 2 * i + 2)
            for i in range(n)
        )
        return Fraction(factorial(n), factorial(h)) * core * pochhammer(x + 1, h)
    raise ValueError(f"closed forms exist only for m in {{0, 1}}, got {m}")


def rhs_thm10(x: int, y: int, n: int, variant: str = "factorial") -> Fraction:
    """Product side of the Andrews-Burge type identity.

    For the binomial variant the ``i = 0`` factor is evaluated as
    ``C(x+y, y) + C(x+y-1, y-1)``, which is finite at ``x = y = 0``.
    """
    _require_nonneg(x=x, y=y, n=n)
    if variant not in ("factorial", "binomial"):
        raise ValueError(f"unknown variant {variant!r}")
    extra = 1 if variant == "binomial" else 0
    fr = factorial_reciprocal
    out = Fraction(1)
    for i in range(n):
        if i == 0 and x + y == 0:
            if variant == "factorial":
                raise ZeroDivisionError("(x+y-1)! is a pole at x = y = 0")
            out *= binomial(x + y, y) + binomial(x + y - 1, y - 1)
            continue
        out *= (
            factorial(i)
            * factorial(x + y + i - 1)
            * pochhammer(2 * x + y + 2 * i, i)
            * pochhammer(x + 2 * y + 2 * i, i + extra)
            * fr(x + 2 * i)
            * fr(y + 2 * i)
        )
    return out


def rhs_thm12(x: int, y: int, n: int) -> Fraction:
    """Constant-term form of Theorem 8: Pochhammer lengths ``i+1``.

    At ``x = y = 0`` the constant term has a ``(1+z_0)^{-1}`` factor whose
    expansion is polynomial in ``x`` at ``y = 0``; the matching value is the
    limit ``x -> 0`` taken at ``y = 0``, where ``Gamma(x) (x)_n -> (n-1)!``.
    """
    _require_nonneg(x=x, y=y, n=n)
    if x == 0 and y == 0 and n > 0:
        return (-1) ** n * factorial(n - 1) * _prod(
            factorial(i)
            * factorial(i - 1)
            * pochhammer(2 * i + 1, i + 1) ** 2
            * factorial_reciprocal(2 * i + 1) ** 2
            for i in range(1, n)
        )
    return rhs_thm8(x, y, n) * _prod((2 * x + y + 3 * i + 1) * (x + 2 * y + 3 * i + 1) for i in range(n))


def rhs_thm12_short(x: int, y: int, n: int) -> Fraction:
    """The alternative reading with Pochhammer lengths ``i`` (equal to ``rhs_thm8``)."""
    return rhs_thm8(x, y, n)


def rhs_thm12_m(x: int, m: int, n: int) -> Fraction:
    """The ``y = x+m`` specialisation of :func:`rhs_thm12` via the Theorem 9 sum."""
    _require_nonneg(x=x, m=m, n=n)
    if x == 0 and m == 0:
        return rhs_thm12(0, 0, n)
    return rhs_thm9(x, m, n) * _prod(
        (3 * x + m + 3 * i + 1) * (3 * x + 2 * m + 3 * i + 1) for i in range(n)
    )


def rhs_thm13(x: int, y: int, n: int) -> Fraction:
    return rhs_thm10(x, y, n, "binomial")
