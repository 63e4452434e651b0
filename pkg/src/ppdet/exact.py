"""Exact scalars and the combinatorial conventions used throughout.

Every number in this package is an ``int`` or a :class:`fractions.Fraction`.
Nothing here touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

Rational = Union[int, Fraction]

__all__ = [
    "Rational",
    "DirectedBounds",
    "as_fraction",
    "factorial",
    "factorial_reciprocal",
    "pochhammer",
    "binomial",
    "directed_sum",
    "double_factorial",
    "format_rational",
    "parse_rational",
]


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot treat {type(value).__name__} as an exact rational")


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if "." in text or "e" in text.lower():
        raise ValueError(f"refusing decimal literal {text!r}; write p/q")
    return Fraction(text)


def format_rational(value: Rational) -> str:
    """Canonical ``p/q`` string (``p`` alone when the denominator is 1)."""
    q = as_fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def factorial(k: int) -> int:
    if k < 0:
        raise ValueError(f"factorial of negative integer {k} is not a value; use factorial_reciprocal")
    return math.factorial(k)


def factorial_reciprocal(k: int) -> Fraction:
    """``1/k!``, extended by ``1/Gamma(k+1) = 0`` for negative integers ``k``."""
    if k < 0:
        return Fraction(0)
    return Fraction(1, math.factorial(k))


def pochhammer(a: Rational, k: int) -> Rational:
    """Rising factorial ``a (a+1) ... (a+k-1)``; ``(a)_0 = 1``."""
    if k < 0:
        raise ValueError(f"pochhammer length must be nonnegative, got {k}")
    result: Rational = 1
    for i in range(k):
        result *= a + i
        if result == 0:
            return 0
    return result


def pochhammer_ext(a: Rational, k: int) -> Fraction:
    """Rising factorial continued to negative lengths, ``Gamma(a+k)/Gamma(a)``.

    ``(a)_{-k} = 1 / ((a-1)(a-2)...(a-k))``.  Raises ZeroDivisionError at poles.
    """
    if k >= 0:
        return as_fraction(pochhammer(a, k))
    denom = pochhammer(as_fraction(a) + k, -k)
    if denom == 0:
        raise ZeroDivisionError(f"({a})_{k} hits a pole")
    return Fraction(1) / denom


def binomial(a: int, k: int) -> int:
    """``C(a, k)`` for integer ``a`` (negative allowed) and integer ``k``.

    Zero when ``k < 0``; for negative ``a`` the upper-index-negation value.
    """
    if k < 0:
        return 0
    if a >= 0:
        return math.comb(a, k) if k <= a else 0
    # C(a, k) = (-1)^k C(k - a - 1, k)
    return (-1) ** k * math.comb(k - a - 1, k)


@dataclass(frozen=True)
class DirectedBounds:
    """Limits of a sum ``sum_{r=lower+1}^{upper}`` read with orientation.

    ``lower < upper`` is an ordinary sum, ``lower == upper`` is empty, and
    ``lower > upper`` is minus the sum over ``upper < r <= lower``.
    """

    lower: int
    upper: int


def directed_sum(bounds: DirectedBounds, term: Callable[[int], Rational]) -> Rational:
    a, b = bounds.lower, bounds.upper
    if a == b:
        return 0
    if a < b:
        return sum((term(r) for r in range(a + 1, b + 1)), 0)
    return -sum((term(r) for r in range(b + 1, a + 1)), 0)


def double_factorial(k: int) -> int:
    """``k!!`` with ``(-1)!! = 0!! = 1``."""
    if k < -1:
        raise ValueError(f"double factorial undefined for {k}")
    result = 1
    while k > 1:
        result *= k
        k -= 2
    return result
