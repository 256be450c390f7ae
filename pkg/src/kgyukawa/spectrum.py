"""Energy spectrum of the Klein-Gordon equation with the Hulthen-form Yukawa
potential and the position-dependent mass.

Two routes to the energies live here:

* :func:`energy_closed_form` evaluates the quadratic-root formula for
  ``E^-`` and ``E^+``;
* :func:`energy_exact` solves the termination condition of the
  hypergeometric series numerically.

Reduction of the radial equation in ``z = 1 - exp(-2 alpha r)`` gives the
regular exponent ``(1 + L)/2`` at the origin and ``lambda2`` at infinity; the
series ``2F1(a, b; c; z)`` terminates (``a = -n``) exactly when::

    lambda1 - lambda2 = n + (1 + L)/2

with both square roots taken positive. This is the residual used by
:func:`quantization_residual`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import optimize

from .model import PhysicalConfig, QuantumNumbers

__all__ = [
    "Branch",
    "Status",
    "EnergyLevel",
    "EnergyPair",
    "SpectralCoefficients",
    "OutOfDomainError",
    "NoBoundStateError",
    "NotFoundError",
    "capital_lambda",
    "script_l",
    "lambda_sq_pair",
    "spectral_coefficients",
    "radicand",
    "radicand_scale",
    "energy_closed_form",
    "quantization_residual",
    "energy_exact",
    "critical_parameter",
    "schrodinger_energy",
]


class Branch(str, enum.Enum):
    PLUS = "plus"
    MINUS = "minus"

    @property
    def sign(self) -> int:
        return 1 if self is Branch.PLUS else -1


class Status(str, enum.Enum):
    REAL = "real"
    IMAGINARY = "imaginary"


class OutOfDomainError(ValueError):
    """An energy makes ``lambda1^2`` or ``lambda2^2`` negative."""


class NoBoundStateError(LookupError):
    """No sign change of the quantization residual in the bound-state window."""


class NotFoundError(LookupError):
    """No critical point inside the requested parameter range."""


@dataclass(frozen=True)
class EnergyLevel:
    branch: Branch
    value: Optional[float] = None
    status: Status = Status.REAL

    def __post_init__(self):
        object.__setattr__(self, "branch", Branch(self.branch))
        object.__setattr__(self, "status", Status(self.status))
        if self.status is Status.IMAGINARY:
            if self.value is not None:
                raise ValueError("imaginary levels carry no value")
        elif self.value is None or not math.isfinite(self.value):
            raise ValueError("real levels need a finite value")

    @property
    def is_real(self) -> bool:
        return self.status is Status.REAL

    @classmethod
    def imaginary(cls, branch) -> "EnergyLevel":
        return cls(branch, None, Status.IMAGINARY)


@dataclass(frozen=True)
class EnergyPair:
    e_plus: EnergyLevel
    e_minus: EnergyLevel

    def __getitem__(self, branch) -> EnergyLevel:
        return self.e_plus if Branch(branch) is Branch.PLUS else self.e_minus


@dataclass(frozen=True)
class SpectralCoefficients:
    """Coefficients of the transformed equation at one energy.

    ``script_l`` is ``None`` when its radicand is negative; then ``xi1``,
    ``xi2`` and ``radicand`` are ``None`` as well.
    """

    capital_lambda: float
    script_l: Optional[float]
    lambda1_sq: float
    lambda2_sq: float
    xi1: Optional[complex]
    xi2: Optional[complex]
    radicand: Optional[float]


# relative size below which the radicand is indistinguishable from zero
RADICAND_ROUNDOFF = 64 * np.finfo(float).eps


def capital_lambda(cfg: PhysicalConfig) -> float:
    b2, c4, a2 = cfg.beta**2, cfg.c**4, cfg.alpha**2
    return (
        -b2 * cfg.m0 * cfg.m1 * c4 / (2.0 * a2)
        + b2 * cfg.m1**2 * c4 / (4.0 * a2)
        - b2 * cfg.eta**2
    )


def _script_l_sq(l: int, cfg: PhysicalConfig) -> float:
    b2 = cfg.beta**2
    return (
        1.0
        + 4.0 * l * (l + 1)
        + b2 * cfg.m1**2 * cfg.c**4 / cfg.alpha**2
        - 4.0 * b2 * cfg.eta**2
    )


def script_l(l: int, cfg: PhysicalConfig) -> Optional[float]:
    """Principal root of ``1 + 4l(l+1) + beta^2 m1^2 c^4/alpha^2 - 4 beta^2 eta^2``.

    Returns ``None`` (the imaginary marker) when the argument is negative.
    """
    arg = _script_l_sq(l, cfg)
    return math.sqrt(arg) if arg >= 0 else None


def lambda_sq_pair(E: float, qn: QuantumNumbers, cfg: PhysicalConfig) -> tuple:
    """``(lambda1^2, lambda2^2)`` at energy ``E``. ``qn`` does not enter."""
    b2 = cfg.beta**2
    l2 = b2 * (cfg.m0**2 * cfg.c**4 - E * E) / (4.0 * cfg.alpha**2)
    l1 = l2 + E * b2 * cfg.eta / cfg.alpha + capital_lambda(cfg)
    return l1, l2


def spectral_coefficients(E: float, qn: QuantumNumbers, cfg: PhysicalConfig) -> SpectralCoefficients:
    l1s, l2s = lambda_sq_pair(E, qn, cfg)
    L = script_l(qn.l, cfg)
    if L is None:
        return SpectralCoefficients(capital_lambda(cfg), None, l1s, l2s, None, None, None)
    s = complex(np.sqrt(complex(l1s))) + complex(np.sqrt(complex(l2s)))
    xi1 = s + 0.5 * (1.0 + L)
    xi2 = s + 0.5 * (1.0 - L)
    return SpectralCoefficients(capital_lambda(cfg), L, l1s, l2s, xi1, xi2, radicand(qn, cfg))


def _k_and_a(qn: QuantumNumbers, cfg: PhysicalConfig):
    L = script_l(qn.l, cfg)
    if L is None:
        return None
    K = L + 2 * qn.n + 1
    return K, K * K - 4.0 * capital_lambda(cfg)


def radicand(qn: QuantumNumbers, cfg: PhysicalConfig) -> Optional[float]:
    """Argument of the inner square root of the closed-form energies.

    ``None`` when ``script_l`` is imaginary.
    """
    ka = _k_and_a(qn, cfg)
    if ka is None:
        return None
    K, A = ka
    b2 = cfg.beta**2
    return 4.0 * b2 * cfg.m0**2 * cfg.c**4 / cfg.alpha**2 * (K * K + b2 * cfg.eta**2) - A * A


def radicand_scale(qn: QuantumNumbers, cfg: PhysicalConfig) -> float:
    """Magnitude of the larger of the two terms whose difference is the radicand."""
    ka = _k_and_a(qn, cfg)
    if ka is None:
        raise OutOfDomainError("script_l is imaginary")
    K, A = ka
    b2 = cfg.beta**2
    return max(4.0 * b2 * cfg.m0**2 * cfg.c**4 / cfg.alpha**2 * (K * K + b2 * cfg.eta**2), A * A)


def energy_closed_form(qn: QuantumNumbers, cfg: PhysicalConfig) -> EnergyPair:
    """Closed-form ``E^-`` and ``E^+``, accurate to second order in alpha and eta.

    The ``-`` sign of the ``-/+`` is ``e_minus``. With ``m1 = 0`` and
    ``alpha -> 0`` this sends ``e_plus -> +m0 c^2`` and ``e_minus -> -m0 c^2``.
    Levels are marked imaginary when the radicand is negative or ``script_l``
    is imaginary. A radicand within ``RADICAND_ROUNDOFF`` of the size of its
    terms is treated as zero, so ``E^+ = E^-`` at a critical point. At ``eta = 0`` the ``1/eta`` in the splitting term cancels
    against the prefactor and the cancelled form is used.
    """
    rad = radicand(qn, cfg)
    if rad is not None and abs(rad) <= RADICAND_ROUNDOFF * radicand_scale(qn, cfg):
        # below the cancellation noise of its two terms: the gap is closed
        rad = 0.0
    if rad is None or rad < 0:
        return EnergyPair(EnergyLevel.imaginary(Branch.PLUS), EnergyLevel.imaginary(Branch.MINUS))
    K, A = _k_and_a(qn, cfg)
    b, eta, alpha = cfg.beta, cfg.eta, cfg.alpha
    D = K * K + b * b * eta * eta
    root = math.sqrt(rad)
    if eta > 0:
        pref = alpha * eta / (2.0 * D)
        base = pref * A
        split = pref * K / (b * eta) * root
    else:
        base = 0.0
        split = alpha * K * root / (2.0 * D * b)
    return EnergyPair(
        EnergyLevel(Branch.PLUS, base + split),
        EnergyLevel(Branch.MINUS, base - split),
    )


def quantization_residual(E: float, qn: QuantumNumbers, cfg: PhysicalConfig) -> float:
    """``lambda1(E) - lambda2(E) - n - (1 + L)/2``; zero on the exact spectrum.

    Raises
    ------
    OutOfDomainError
        If ``lambda1^2`` or ``lambda2^2`` is negative at ``E``, or ``L`` is
        imaginary.
    """
    l1s, l2s = lambda_sq_pair(E, qn, cfg)
    if l1s < 0 or l2s < 0:
        raise OutOfDomainError(f"negative lambda^2 at E={E!r}")
    L = script_l(qn.l, cfg)
    if L is None:
        raise OutOfDomainError("script_l is imaginary")
    return math.sqrt(l1s) - math.sqrt(l2s) - qn.n - 0.5 * (1.0 + L)


def _residual_on_grid(E: np.ndarray, qn: QuantumNumbers, cfg: PhysicalConfig) -> np.ndarray:
    """Vectorised residual; NaN wherever a square is negative."""
    l1s, l2s = lambda_sq_pair(E, qn, cfg)
    ok = (l1s >= 0) & (l2s >= 0)
    out = np.full(E.shape, np.nan)
    L = script_l(qn.l, cfg)
    out[ok] = np.sqrt(l1s[ok]) - np.sqrt(l2s[ok]) - qn.n - 0.5 * (1.0 + L)
    return out


def energy_exact(
    qn: QuantumNumbers,
    cfg: PhysicalConfig,
    branch=Branch.PLUS,
    resolution: int = 10_000,
    xtol: float = 1e-12,
) -> EnergyLevel:
    """Root of :func:`quantization_residual` in the branch's half of ``(-m0c^2, m0c^2)``.

    The half-window is scanned inward from ``+/- m0 c^2`` on ``resolution``
    points uniform in ``theta`` with ``E = +/- m0 c^2 cos(theta)``, which
    crowds points toward threshold where weakly bound levels sit (``lambda2``
    is proportional to ``sin(theta)``). The first sign change is refined with
    Brent's method.

    Raises
    ------
    NoBoundStateError
        If the scan finds no sign change.
    """
    branch = Branch(branch)
    if script_l(qn.l, cfg) is None:
        return EnergyLevel.imaginary(branch)
    mc2 = cfg.rest_energy
    # open interval: drop both endpoints of the half window
    theta = np.linspace(0.0, 0.5 * np.pi, resolution + 2)[1:-1]
    grid = mc2 * np.cos(theta) * branch.sign
    vals = _residual_on_grid(grid, qn, cfg)
    prod = vals[:-1] * vals[1:]
    hits = np.flatnonzero(prod <= 0)
    if hits.size == 0:
        raise NoBoundStateError(f"no bound state for {qn} on the {branch.value} branch")
    i = hits[0]
    a, b = grid[i], grid[i + 1]
    if vals[i] == 0:
        return EnergyLevel(branch, float(a))
    if vals[i + 1] == 0:
        return EnergyLevel(branch, float(b))
    root = optimize.brentq(quantization_residual, min(a, b), max(a, b), args=(qn, cfg),
                           xtol=xtol, rtol=4 * np.finfo(float).eps, maxiter=500)
    return EnergyLevel(branch, float(root))


def critical_parameter(
    qn: QuantumNumbers,
    cfg: PhysicalConfig,
    vary: str,
    range: tuple,
) -> float:
    """Value of ``eta`` or ``alpha`` at which the closed-form radicand vanishes.

    Beyond it the closed-form levels turn imaginary and ``E^+ = E^-`` at it.
    The bracket is bisected until its ends are neighbouring floats.

    Raises
    ------
    NotFoundError
        If the radicand has no sign change on ``range``.
    """
    if vary not in ("eta", "alpha"):
        raise ValueError("vary must be 'eta' or 'alpha'")
    lo, hi = map(float, range)

    def f(p):
        value = radicand(qn, cfg.with_(**{vary: p}))
        if value is None:
            raise NotFoundError("script_l turns imaginary inside the range")
        return value

    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if np.sign(flo) == np.sign(fhi):
        raise NotFoundError(f"radicand does not change sign on [{lo}, {hi}] in {vary}")
    # plain bisection down to adjacent floats; the endpoint on the real side
    # (radicand >= 0) is returned so the levels there are real and equal
    a, b, fa = lo, hi, flo
    while True:
        mid = 0.5 * (a + b)
        if mid <= a or mid >= b:
            break
        fm = f(mid)
        if fm == 0:
            return mid
        if np.sign(fm) == np.sign(fa):
            a, fa = mid, fm
        else:
            b = mid
    return a if fa > 0 else b


def schrodinger_energy(qn: QuantumNumbers, cfg: PhysicalConfig) -> float:
    """Non-relativistic energy for the same Hulthen-form problem (always real)."""
    n, l = qn.n, qn.l
    a, h, m0, eta = cfg.alpha, cfg.hbar, cfg.m0, cfg.eta
    pref = a * a * h * h / (2.0 * m0)
    inner = (-2.0 * m0 * eta / (a * h * h) - (n + l + 1) ** 2 - l * (l + 1)) / (2.0 * (l + n + 1))
    return pref * l * (l + 1) - pref * inner * inner
