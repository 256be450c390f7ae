"""Special functions needed by the bound-state solution.

Only real parameters occur here. The Gauss series is summed directly; at
arguments ``x <= -1/2`` the Pfaff transformation

    2F1(a, b; c; x) = (1 - x)^(-b) 2F1(c - a, b; c; x/(x - 1))

moves the evaluation point into ``[1/3, 1/2]`` where the series converges
geometrically. ``x = -1`` thus becomes a series in powers of 1/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy import special

__all__ = [
    "PoleError",
    "SingularParameterError",
    "ConvergenceError",
    "SeriesResult",
    "log_gamma",
    "pochhammer",
    "hyp2f1_terminating",
    "hyp2f1_at",
]

SERIES_TOL = 1e-14
MAX_TERMS = 10_000


class PoleError(ValueError):
    """Gamma function evaluated at a non-positive integer."""


class SingularParameterError(ValueError):
    """A hypergeometric denominator parameter hits a pole."""


class ConvergenceError(ArithmeticError):
    """A series failed to converge within the term budget."""


@dataclass(frozen=True)
class SeriesResult:
    value: float
    terms_used: int
    converged: bool

    def __float__(self):
        return self.value


def _is_nonpositive_int(x: float) -> bool:
    return x <= 0 and float(x).is_integer()


def log_gamma(x: float) -> float:
    """``ln|Gamma(x)|``; raises :class:`PoleError` at 0, -1, -2, ..."""
    x = float(x)
    if _is_nonpositive_int(x):
        raise PoleError(f"Gamma has a pole at x={x:g}")
    return float(special.gammaln(x))


def pochhammer(a: float, k: int) -> float:
    """Rising factorial ``(a)_k = a (a+1) ... (a+k-1)``, exact at negative integers."""
    if k < 0 or int(k) != k:
        raise ValueError("k must be a non-negative integer")
    out = 1.0
    for j in range(int(k)):
        out *= a + j
        if out == 0.0:
            break
    return out


def hyp2f1_terminating(n: int, b: float, c: float, x: float) -> float:
    """Degree-``n`` polynomial ``2F1(-n, b; c; x)``, summed term by term.

    Raises
    ------
    SingularParameterError
        If ``(c)_k`` vanishes for some ``k <= n``.
    """
    if n < 0 or int(n) != n:
        raise ValueError("n must be a non-negative integer")
    n = int(n)
    if _is_nonpositive_int(c) and -c < n:
        raise SingularParameterError(f"(c)_k vanishes before termination for c={c:g}, n={n}")
    term = 1.0
    total = 1.0
    for k in range(n):
        # ratio t_{k+1}/t_k = (k - n)(b + k) x / ((c + k)(k + 1))
        term *= (k - n) * (b + k) * x / ((c + k) * (k + 1))
        total += term
    return total


def _gauss_series(a: float, b: float, c: float, x: float) -> SeriesResult:
    term = 1.0
    total = 1.0
    for k in range(MAX_TERMS):
        term *= (a + k) * (b + k) * x / ((c + k) * (k + 1))
        total += term
        if term == 0.0:
            return SeriesResult(total, k + 2, True)
        if abs(term) <= SERIES_TOL * abs(total):
            # geometric tail bound needs the ratio to have settled below one
            ratio = abs((a + k + 1) * (b + k + 1) * x / ((c + k + 1) * (k + 2)))
            if ratio < 1.0:
                return SeriesResult(total, k + 2, True)
    raise ConvergenceError(
        f"2F1({a:g}, {b:g}; {c:g}; {x:g}) did not converge in {MAX_TERMS} terms"
    )


def hyp2f1_at(a: float, b: float, c: float, x: float) -> SeriesResult:
    """Gauss hypergeometric function for real parameters and ``-1 <= x < 1``.

    At ``x = -1`` the series is required to converge, i.e.
    ``c - a - b + 1 > 0``, matching the classical criterion on the unit
    circle; otherwise :class:`ConvergenceError` is raised.
    """
    if _is_nonpositive_int(c):
        # harmless only when a or b terminates the series first
        stops = [p for p in (a, b) if _is_nonpositive_int(p) and p > c]
        if not stops:
            raise SingularParameterError(f"c={c:g} is a pole of 2F1")
    if not -1.0 <= x < 1.0:
        raise ValueError(f"x={x!r} outside [-1, 1)")
    if x == -1.0 and not c - a - b + 1.0 > 0.0:
        raise ConvergenceError(
            f"2F1({a:g}, {b:g}; {c:g}; -1) diverges (c - a - b + 1 = {c - a - b + 1:g})"
        )
    terminating = _is_nonpositive_int(a) or _is_nonpositive_int(b)
    if x > -0.5 or terminating:
        return _gauss_series(a, b, c, x)
    # Pfaff: pick the numerator parameter that keeps the transformed series
    # free of a pole in c (the transformed parameters are c - a, b).
    y = x / (x - 1.0)
    inner = _gauss_series(c - a, b, c, y)
    scale = (1.0 - x) ** (-b)
    return SeriesResult(scale * inner.value, inner.terms_used, inner.converged)
