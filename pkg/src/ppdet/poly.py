"""Univariate polynomials over Q and box-bounded multivariate Laurent series."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .exact import Rational, as_fraction, format_rational


class _MinusInfinity:
    """Degree of the zero polynomial. Compares below every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "-inf"

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        if other is self:
            raise ArithmeticError("-inf - -inf")
        return self


NEG_INF = _MinusInfinity()


def _trim(coeffs: Iterable) -> tuple[Fraction, ...]:
    c = [as_fraction(v) for v in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class UniPoly:
    """Dense polynomial; ``coeffs[k]`` is the coefficient of ``x**k``."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def constant(cls, c: Rational) -> "UniPoly":
        return cls((c,))

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def linear(cls, a: Rational, b: Rational) -> "UniPoly":
        """``a*x + b``."""
        return cls((b, a))

    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __call__(self, x: Rational) -> Fraction:
        return poly_eval(self, x)

    def _coerce(self, other) -> "UniPoly":
        return other if isinstance(other, UniPoly) else UniPoly.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(tuple(self[k] + other[k] for k in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            c = as_fraction(other)
            return UniPoly(tuple(v * c for v in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = UniPoly.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def divmod(self, divisor: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = divisor.degree()
        lead = divisor.coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lead
            if c:
                quot[k - dq] = c
                for i, d in enumerate(divisor.coeffs):
                    rem[k - dq + i] -= c * d
        return UniPoly(tuple(quot)), UniPoly(tuple(rem[:dq]))

    def exact_div(self, divisor: "UniPoly") -> "UniPoly":
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise ArithmeticError("division leaves a remainder")
        return q

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            cs = format_rational(c)
            if mono:
                cs = {"1": "", "-1": "-"}.get(cs, f"({cs})*" if "/" in cs else f"{cs}*")
            parts.append(f"{cs}{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def poly_eval(p: UniPoly, x: Rational) -> Fraction:
    """Horner evaluation."""
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_pochhammer(a: UniPoly, k: int) -> UniPoly:
    """``(a)_k`` for a polynomial argument ``a``."""
    result = UniPoly.constant(1)
    for i in range(k):
        result = result * (a + i)
    return result


def lagrange_interpolate(points: Sequence[tuple[Rational, Rational]]) -> UniPoly:
    """Unique polynomial of degree < len(points) through ``points``."""
    if not points:
        raise ValueError("need at least one point")
    nodes = [as_fraction(p[0]) for p in points]
    if len(set(nodes)) != len(nodes):
        raise ValueError(f"duplicate interpolation nodes in {nodes}")
    result = UniPoly()
    for i, (xi, yi) in enumerate(points):
        yi = as_fraction(yi)
        if yi == 0:
            continue
        basis = UniPoly.constant(1)
        denom = Fraction(1)
        for j, xj in enumerate(nodes):
            if j != i:
                basis = basis * UniPoly((-xj, 1))
                denom *= nodes[i] - xj
        result = result + basis * (yi / denom)
    return result


# --------------------------------------------------------------------------
# Laurent objects

Exponent = tuple[int, ...]


class BoxOverflow(ArithmeticError):
    def __init__(self, exponent: Exponent):
        super().__init__(f"exponent {exponent} leaves the box in exact mode")
        self.exponent = exponent


@dataclass(frozen=True)
class LaurentBox:
    """Sparse Laurent polynomial whose support lies in ``[lo, hi]`` per variable.

    Coefficients outside the box are never stored.  In ``truncating`` mode a
    product simply drops them, which is how power-series expansions are kept
    finite.
    """

    lo: Exponent
    hi: Exponent
    coeffs: Mapping[Exponent, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if len(self.lo) != len(self.hi):
            raise ValueError("lo/hi length mismatch")
        clean = {}
        for e, c in self.coeffs.items():
            e = tuple(e)
            if len(e) != len(self.lo):
                raise ValueError(f"exponent {e} has wrong arity")
            c = as_fraction(c)
            if not c:
                continue
            if not self.contains(e):
                raise BoxOverflow(e)
            clean[e] = c
        object.__setattr__(self, "lo", tuple(self.lo))
        object.__setattr__(self, "hi", tuple(self.hi))
        object.__setattr__(self, "coeffs", clean)

    @property
    def nvars(self) -> int:
        return len(self.lo)

    def contains(self, e: Exponent) -> bool:
        return all(l <= v <= h for l, v, h in zip(self.lo, e, self.hi))

    @classmethod
    def one(cls, lo: Exponent, hi: Exponent) -> "LaurentBox":
        return cls(lo, hi, {(0,) * len(lo): Fraction(1)})

    @classmethod
    def monomial(cls, lo: Exponent, hi: Exponent, exponent: Exponent, coeff: Rational = 1) -> "LaurentBox":
        return cls(lo, hi, {tuple(exponent): as_fraction(coeff)})

    @classmethod
    def from_terms(cls, lo: Exponent, hi: Exponent, terms: Mapping[Exponent, Rational]) -> "LaurentBox":
        return cls(lo, hi, dict(terms))

    def coefficient(self, e: Exponent) -> Fraction:
        return self.coeffs.get(tuple(e), Fraction(0))

    def __len__(self):
        return len(self.coeffs)

    def __add__(self, other: "LaurentBox") -> "LaurentBox":
        _check_same_box(self, other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentBox(self.lo, self.hi, out)

    def scale(self, c: Rational) -> "LaurentBox":
        c = as_fraction(c)
        return LaurentBox(self.lo, self.hi, {e: v * c for e, v in self.coeffs.items()})


def _check_same_box(a: LaurentBox, b: LaurentBox) -> None:
    if a.lo != b.lo or a.hi != b.hi:
        raise ValueError(f"incompatible boxes {a.lo}..{a.hi} and {b.lo}..{b.hi}")


def laurent_mul(a: LaurentBox, b: LaurentBox, mode: str = "exact") -> LaurentBox:
    """Product of two Laurent objects living in the same box.

    ``mode="exact"`` raises :class:`BoxOverflow` when a nonzero product term
    leaves the box; ``mode="truncating"`` drops such terms.
    """
    if mode not in ("exact", "truncating"):
        raise ValueError(f"unknown mode {mode!r}")
    _check_same_box(a, b)
    lo, hi = a.lo, a.hi
    n = len(lo)
    truncate = mode == "truncating"
    acc: dict[Exponent, Fraction] = {}
    for ea, ca in a.coeffs.items():
        for eb, cb in b.coeffs.items():
            e = tuple(ea[k] + eb[k] for k in range(n))
            if truncate and any(e[k] < lo[k] or e[k] > hi[k] for k in range(n)):
                continue
            acc[e] = acc.get(e, 0) + ca * cb
    if not truncate:
        bad = sorted(e for e, c in acc.items() if c and not a.contains(e))
        if bad:
            raise BoxOverflow(bad[0])
    return LaurentBox(lo, hi, acc)


def geometric_expand(monomial: Exponent, lo: Exponent, hi: Exponent) -> LaurentBox:
    """``1/(1 - z^monomial)`` expanded as ``sum_k z^(k*monomial)`` inside the box."""
    monomial = tuple(monomial)
    if any(v < 0 for v in monomial) or not any(monomial):
        raise ValueError("geometric expansion needs a nonconstant monomial with nonnegative exponents")
    terms = {}
    k = 0
    while True:
        e = tuple(k * v for v in monomial)
        if any(ev > h for ev, h in zip(e, hi)):
            break
        terms[e] = Fraction(1)
        k += 1
    return LaurentBox(lo, hi, terms)


def constant_term(a: LaurentBox) -> Fraction:
    return a.coefficient((0,) * a.nvars)


def constant_term_of_product(a: LaurentBox, b: LaurentBox) -> Fraction:
    """``CT(a*b)`` without forming the product: ``sum_e a[e] * b[-e]``."""
    if a.nvars != b.nvars:
        raise ValueError("variable count mismatch")
    if len(a) > len(b):
        a, b = b, a
    total = Fraction(0)
    for e, c in a.coeffs.items():
        d = b.coeffs.get(tuple(-v for v in e))
        if d:
            total += c * d
    return total
