"""Terminating hypergeometric series and the appendix summation checks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .exact import Rational, as_fraction, pochhammer as _pochhammer
from .families import IdentityRecord
from .poly import UniPoly, poly_pochhammer

__all__ = [
    "HyperSeries",
    "NonTerminating",
    "ParameterCollision",
    "termination_index",
    "hyper_eval",
    "lemma_a3_check",
    "lemma_a4_check",
    "cor_a5_check",
    "lemma_a6_check",
    "vandermonde_check",
    "esym",
    "degree_probe",
    "lemma_a7_probe",
    "lemma_a8_probe",
    "appendix_grid",
]


class NonTerminating(ValueError):
    """No top parameter is a nonpositive integer."""


class ParameterCollision(ZeroDivisionError):
    """A bottom Pochhammer vanishes before the series terminates."""

    def __init__(self, bottom: Fraction, k: int, message: str | None = None):
        super().__init__(message or f"bottom parameter {bottom} gives (b)_{k + 1} = 0 before termination")
        self.bottom = bottom
        self.k = k


@dataclass(frozen=True)
class HyperSeries:
    tops: tuple[Fraction, ...]
    bottoms: tuple[Fraction, ...]
    argument: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "tops", tuple(as_fraction(a) for a in self.tops))
        object.__setattr__(self, "bottoms", tuple(as_fraction(b) for b in self.bottoms))
        object.__setattr__(self, "argument", as_fraction(self.argument))


def _is_nonpositive_int(a: Fraction) -> bool:
    return a.denominator == 1 and a <= 0


def termination_index(s: HyperSeries) -> int:
    """``K = min(1 - a)`` over nonpositive integer tops ``a``; the sum runs ``k < K``."""
    cands = [int(1 - a) for a in s.tops if _is_nonpositive_int(a)]
    if not cands:
        raise NonTerminating(f"no nonpositive integer among tops {s.tops}")
    return min(cands)


def hyper_eval(s: HyperSeries) -> Fraction:
    """Exact value of a terminating series.

    Bottom parameters must keep ``(b)_k`` nonzero for every ``k < K``; a zero
    there is a 0/0 clash and raises :class:`ParameterCollision`.
    """
    K = termination_index(s)
    for b in s.bottoms:
        if _is_nonpositive_int(b) and int(-b) < K - 1:
            raise ParameterCollision(b, int(-b))
    total = Fraction(0)
    term = Fraction(1)
    for k in range(K):
        total += term
        num = Fraction(1)
        for a in s.tops:
            num *= a + k
        den = Fraction(k + 1)
        for b in s.bottoms:
            den *= b + k
        if k + 1 < K:
            term = term * num * s.argument / den
    return total


def _record(identity: str, params: dict, lhs_fn: Callable[[], Fraction], rhs_fn: Callable[[], Fraction]) -> IdentityRecord:
    try:
        lhs, rhs = lhs_fn(), rhs_fn()
    except ParameterCollision as exc:
        return IdentityRecord(identity, params, 0, 0, note=f"skipped: {exc}")
    return IdentityRecord(identity, params, lhs, rhs)


def _params(**kw) -> dict:
    return {k: str(as_fraction(v)) for k, v in kw.items()}


def pochhammer(a, k: int) -> Fraction:
    return Fraction(_pochhammer(a, k))


def _half(v) -> Fraction:
    return as_fraction(v) / 2


def lemma_a3_check(n: int, A: Rational, B: Rational) -> IdentityRecord:
    if n < 1:
        raise ValueError("n >= 1 required")
    A, B = as_fraction(A), as_fraction(B)
    s = HyperSeries((-_half(n), Fraction(1, 2) - _half(n), -A, A + B), (1 - n, B / 2, Fraction(1, 2) + B / 2))
    return _record(
        "A3",
        _params(n=n, A=A, B=B),
        lambda: hyper_eval(s),
        lambda: (pochhammer(A + B, n) + pochhammer(-A, n)) / _nonzero(pochhammer(B, n), "(B)_n"),
    )


def lemma_a4_check(n: int, A: Rational, B: Rational) -> IdentityRecord:
    if n < 1:
        raise ValueError("n >= 1 required")
    A, B = as_fraction(A), as_fraction(B)
    s = HyperSeries(
        (1 - Fraction(2 * n, 3), -_half(n), Fraction(1, 2) - _half(n), -A, A + B),
        (-Fraction(2 * n, 3), 1 - n, Fraction(1, 2) + B / 2, 1 + B / 2),
    )

    def rhs():
        d = _nonzero(2 * A + B, "2A+B") * _nonzero(pochhammer(1 + B, n), "(1+B)_n")
        return ((A - B - 2 * n) * pochhammer(-A, n) + (A + 2 * B + 2 * n) * pochhammer(A + B, n)) / (2 * d)

    return _record("A4", _params(n=n, A=A, B=B), lambda: hyper_eval(s), rhs)


def cor_a5_check(n: int, B: Rational) -> IdentityRecord:
    if n < 1:
        raise ValueError("n >= 1 required")
    B = as_fraction(B)
    s = HyperSeries(
        (1 - Fraction(2 * n, 3), -_half(n), Fraction(1, 2) - _half(n), -2 * n - B, 2 * n + 2 * B),
        (-Fraction(2 * n, 3), 1 - n, Fraction(1, 2) + B / 2, 1 + B / 2),
    )
    return _record(
        "A5",
        _params(n=n, B=B),
        lambda: hyper_eval(s),
        lambda: pochhammer(2 * n + 2 * B, n) / (2 * _nonzero(pochhammer(1 + B, n), "(1+B)_n")),
    )


def lemma_a6_check(n: int, B: Rational) -> IdentityRecord:
    if n < 1:
        raise ValueError("n >= 1 required")
    B = as_fraction(B)
    third = Fraction(2 * n, 3)
    s = HyperSeries(
        (Fraction(4, 3) + third + B, 1 - third, -_half(n), Fraction(1, 2) - _half(n), -1 - 2 * n - B, 2 * n + 2 * B),
        (Fraction(1, 3) + third + B, -third, 1 - n, 1 + B / 2, Fraction(3, 2) + B / 2),
    )

    def rhs():
        d = 2 * _nonzero(1 + 2 * n + 3 * B, "1+2n+3B") * _nonzero(pochhammer(2 + B, n), "(2+B)_n")
        return (1 + 5 * n + 3 * B) * pochhammer(2 * n + 2 * B, n) / d

    return _record("A6", _params(n=n, B=B), lambda: hyper_eval(s), rhs)


def vandermonde_check(a: Rational, n: int, c: Rational) -> IdentityRecord:
    """``2F1[a, -n; c; 1] = (c-a)_n / (c)_n``."""
    a, c = as_fraction(a), as_fraction(c)
    s = HyperSeries((a, -n), (c,))
    return _record(
        "Vandermonde",
        _params(a=a, n=n, c=c),
        lambda: hyper_eval(s),
        lambda: pochhammer(c - a, n) / _nonzero(pochhammer(c, n), "(c)_n"),
    )


def _nonzero(v, label: str):
    if v == 0:
        raise ParameterCollision(Fraction(0), 0, f"closed form divides by {label} = 0")
    return v


# --------------------------------------------------------------------------
# Elementary symmetric functions and finite-difference degree probes


def esym(a: Rational, n: int, k: int) -> Fraction:
    """``e_k(a, a+1, ..., a+n-1)``; zero when ``n < k``."""
    if n < 0 or k < 0:
        raise ValueError("n, k must be nonnegative")
    e = [Fraction(1)] + [Fraction(0)] * k
    for i in range(n):
        v = as_fraction(a) + i
        for j in range(k, 0, -1):
            e[j] += v * e[j - 1]
    return e[k]


def degree_probe(f: Callable[[int], Rational], claimed_degree: int, window: Iterable[int]) -> bool:
    """True iff ``f`` has exact degree ``claimed_degree`` on the consecutive integer window."""
    pts = list(window)
    d = claimed_degree
    if len(pts) < d + 2:
        raise ValueError(f"window of {len(pts)} points too small for degree {d} (need {d + 2})")
    if any(b - a != 1 for a, b in zip(pts, pts[1:])):
        raise ValueError("window must be consecutive integers")
    vals = [as_fraction(f(t)) for t in pts]
    for _ in range(d):
        vals = [b - a for a, b in zip(vals, vals[1:])]
    dth = vals
    nxt = [b - a for a, b in zip(dth, dth[1:])]
    return all(v == 0 for v in nxt) and any(v != 0 for v in dth)


def lemma_a7_probe(a: int, k: int, window: Sequence[int] | None = None) -> bool:
    """``n -> e_k(a, ..., a+n-1)`` has degree exactly ``2k``."""
    window = window if window is not None else range(0, 2 * k + 4)
    return degree_probe(lambda n: esym(a, n, k), 2 * k, window)


def lemma_a8_probe(a: int, p: int, window: Sequence[int] | None = None) -> bool:
    """Coefficient of ``x^{j-p}`` in ``(x+a)_j`` has degree ``2p`` in ``j``."""
    window = window if window is not None else range(0, 2 * p + 3)

    def coeff(j: int) -> Fraction:
        if j < p:
            return Fraction(0)
        return poly_pochhammer(UniPoly((a, 1)), j)[j - p]

    return degree_probe(coeff, 2 * p, window)


APPENDIX_A = (Fraction(0), Fraction(1), Fraction(2), Fraction(3), Fraction(1, 2))
APPENDIX_B = (Fraction(1), Fraction(2), Fraction(3), Fraction(5, 2), Fraction(7, 2))


def appendix_grid(max_n: int = 8) -> list[IdentityRecord]:
    """Lemmas A3-A6 over ``n <= max_n`` and the standard ``A``/``B`` grid, plus Vandermonde."""
    out: list[IdentityRecord] = []
    for n in range(1, max_n + 1):
        for B in APPENDIX_B:
            for A in APPENDIX_A:
                out.append(lemma_a3_check(n, A, B))
                out.append(lemma_a4_check(n, A, B))
            out.append(cor_a5_check(n, B))
            out.append(lemma_a6_check(n, B))
    for a in (Fraction(-3), Fraction(-1), Fraction(1, 2), Fraction(2), Fraction(7, 3)):
        for n in range(5):
            for c in (Fraction(5, 2), Fraction(4)):
                out.append(vandermonde_check(a, n, c))
    return out
