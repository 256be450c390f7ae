"""Bound-state eigenfunctions, their normalisation and density profiles.

Two functional forms are available for a state of energy ``E``:

``"published"``
    ``z^lambda1 (1-z)^lambda2 2F1(-n, n + 2 lambda1 + 2 lambda2 + 1; 1 + 2 lambda1; z)``,
    the form used for the normalisation table and the density figures.
``"regular"``
    ``z^s (1-z)^lambda2 2F1(-n, n + 2 s + 2 lambda2; 2 s; z)`` with
    ``s = (1 + L)/2``, the solution of the radial equation that is regular at
    the origin. At an exact eigenvalue it coincides with the shooting
    solution.

Here ``z = 1 - exp(-2 alpha r)``. Normalisation constants are quoted for
one of three measures: ``dr``, ``dz`` and ``ds`` with ``s = 1 - 2z``. For
``ds`` the function is taken in the ``s`` form
``(1-s)^p (1+s)^lambda2 F``, which differs from the ``z`` form by
``2^(p + lambda2)``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import integrate

from .model import DomainError, PhysicalConfig, QuantumNumbers, yukawa_hulthen
from .specfun import hyp2f1_at, hyp2f1_terminating, pochhammer
from .spectrum import (
    Branch,
    EnergyLevel,
    energy_closed_form,
    energy_exact,
    lambda_sq_pair,
    script_l,
)

__all__ = [
    "NonNormalizableError",
    "StateClass",
    "WaveSolution",
    "MEASURES",
    "FORMS",
    "coordinate_map",
    "state_exponents",
    "build_state",
    "phi_unnormalized",
    "phi",
    "sigma_sum",
    "norm_quadrature",
    "norm_closed_form",
    "classify_state",
    "density_profile",
    "node_count",
    "overlap",
]

MEASURES = ("dr", "dz", "ds")
FORMS = ("published", "regular")
QUAD_RTOL = 1e-10


class NonNormalizableError(ValueError):
    """The state has a non-positive or imaginary exponent, or no real norm."""


class StateClass(str, enum.Enum):
    NORMALIZABLE = "normalizable"
    IMAGINARY_NORM = "imaginary-norm"


@dataclass(frozen=True)
class WaveSolution:
    """A bound state fixed by its quantum numbers, branch and energy.

    ``lambda1``/``lambda2`` are ``None`` when the corresponding square is
    negative at the stored energy; ``norm`` is ``None`` when no real
    normalisation exists.
    """

    qn: QuantumNumbers
    cfg: PhysicalConfig
    branch: Branch
    energy: EnergyLevel
    lambda1: Optional[float]
    lambda2: Optional[float]
    norm: Optional[float]
    form: str = "published"
    measure: str = "dr"

    @property
    def origin_exponent(self) -> Optional[float]:
        """Power of ``z`` in front of the polynomial factor."""
        if self.form == "published":
            return self.lambda1
        L = script_l(self.qn.l, self.cfg)
        return None if L is None else 0.5 * (1.0 + L)

    @property
    def has_positive_exponents(self) -> bool:
        p = self.origin_exponent
        return (
            self.lambda1 is not None
            and self.lambda2 is not None
            and p is not None
            and p > 0
            and self.lambda2 > 0
        )

    def hyp_params(self) -> tuple:
        """``(b, c)`` of the terminating ``2F1(-n, b; c; z)``."""
        n, l2, p = self.qn.n, self.lambda2, self.origin_exponent
        if self.form == "published":
            return n + 2 * p + 2 * l2 + 1, 1 + 2 * p
        return n + 2 * p + 2 * l2, 2 * p


def coordinate_map(r, alpha: float):
    """``z = 1 - exp(-2 alpha r)``, mapping ``(0, inf)`` onto ``(0, 1)``."""
    r = np.asarray(r, dtype=float)
    if np.any(~(r > 0)):
        raise DomainError("radial distance must be > 0")
    z = -np.expm1(-2.0 * alpha * r)
    return float(z) if z.ndim == 0 else z


def state_exponents(E: float, qn: QuantumNumbers, cfg: PhysicalConfig) -> tuple:
    """Positive roots ``(lambda1, lambda2)`` at energy ``E``.

    Raises
    ------
    NonNormalizableError
        If either square is negative.
    """
    l1s, l2s = lambda_sq_pair(E, qn, cfg)
    if l1s < 0 or l2s < 0:
        raise NonNormalizableError(f"lambda^2 = ({l1s:.6g}, {l2s:.6g}) at E={E:.12g}")
    return math.sqrt(l1s), math.sqrt(l2s)


def _energy_level(qn, cfg, branch, energy) -> EnergyLevel:
    if isinstance(energy, EnergyLevel):
        return energy
    if isinstance(energy, (int, float)):
        return EnergyLevel(branch, float(energy))
    if energy == "exact":
        return energy_exact(qn, cfg, branch)
    if energy == "closed_form":
        return energy_closed_form(qn, cfg)[branch]
    raise ValueError("energy must be 'exact', 'closed_form', a number or an EnergyLevel")


def build_state(
    qn: QuantumNumbers,
    cfg: PhysicalConfig,
    branch=Branch.PLUS,
    energy="exact",
    form: str = "published",
    measure: str = "dr",
) -> WaveSolution:
    """Assemble a :class:`WaveSolution` and normalise it by quadrature.

    ``energy`` selects the eigenvalue route (``"exact"`` or
    ``"closed_form"``) or passes an explicit value. States whose exponents
    are not both real and positive are returned with ``norm=None``.
    :class:`~kgyukawa.spectrum.NoBoundStateError` from the exact route
    propagates.
    """
    branch = Branch(branch)
    if form not in FORMS:
        raise ValueError(f"form must be one of {FORMS}")
    if measure not in MEASURES:
        raise ValueError(f"measure must be one of {MEASURES}")
    level = _energy_level(qn, cfg, branch, energy)
    if not level.is_real:
        return WaveSolution(qn, cfg, branch, level, None, None, None, form, measure)
    l1s, l2s = lambda_sq_pair(level.value, qn, cfg)
    l1 = math.sqrt(l1s) if l1s >= 0 else None
    l2 = math.sqrt(l2s) if l2s >= 0 else None
    sol = WaveSolution(qn, cfg, branch, level, l1, l2, None, form, measure)
    if not sol.has_positive_exponents:
        return sol
    return WaveSolution(qn, cfg, branch, level, l1, l2, norm_quadrature(sol, measure), form, measure)


def _require_exponents(sol: WaveSolution):
    if not sol.has_positive_exponents:
        raise NonNormalizableError(f"state {sol.qn} ({sol.branch.value}) has no positive exponents")


def _phi_zw(z, w, sol: WaveSolution):
    # w = 1 - z, passed separately so the tail survives once z rounds to 1
    b, c = sol.hyp_params()
    poly = hyp2f1_terminating(sol.qn.n, b, c, z)
    return z ** sol.origin_exponent * w ** sol.lambda2 * poly


def phi_unnormalized(z, sol: WaveSolution):
    """The eigenfunction in ``z`` without the normalisation constant."""
    _require_exponents(sol)
    z = np.asarray(z, dtype=float)
    if np.any((z <= 0) | (z >= 1)):
        raise DomainError("z must lie in (0, 1)")
    out = _phi_zw(z, 1.0 - z, sol)
    return float(out) if out.ndim == 0 else out


def phi(r, sol: WaveSolution):
    """``N' phi(z(r))``; unit norm in ``dr`` when the state was built with that measure."""
    if sol.norm is None:
        raise NonNormalizableError("state has no real normalisation")
    _require_exponents(sol)
    r = np.asarray(r, dtype=float)
    z = coordinate_map(r, sol.cfg.alpha)
    out = sol.norm * _phi_zw(z, np.exp(-2.0 * sol.cfg.alpha * r), sol)
    return float(out) if np.ndim(out) == 0 else out


def _z_integral(sol: WaveSolution, measure: str) -> float:
    """``int |phi(z)|^2 d(measure)``.

    Moderate endpoint powers go to QUADPACK's algebraic weights. Large ones
    make the integrand a narrow bump, which is rescaled by its peak value and
    integrated with breakpoints around the maximum.
    """
    b, c = sol.hyp_params()
    n = sol.qn.n
    p, l2 = sol.origin_exponent, sol.lambda2
    # dr = dz / (2 alpha (1 - z)) lowers the (1 - z) power by one
    wa, wb = 2.0 * p, 2.0 * l2 - (1.0 if measure == "dr" else 0.0)
    if wb <= -1.0:
        raise NonNormalizableError("norm integral diverges at r -> infinity")

    def f(z):
        return hyp2f1_terminating(n, b, c, z) ** 2

    if wa < 20 and wb < 20:
        val, _ = integrate.quad(f, 0.0, 1.0, weight="alg", wvar=(wa, wb),
                                epsabs=0.0, epsrel=QUAD_RTOL, limit=500)
    else:
        zpk = wa / (wa + wb)
        log_peak = wa * math.log(zpk) + (wb * math.log1p(-zpk) if wb > 0 else 0.0)

        def g(z):
            if not 0 < z < 1:
                return 0.0
            return f(z) * math.exp(wa * math.log(z) + wb * math.log1p(-z) - log_peak)

        width = math.sqrt(zpk * (1 - zpk) / (wa + wb + 1.0))
        pts = sorted({max(1e-300, zpk - 40 * width), zpk, min(1 - 1e-16, zpk + 40 * width)})
        pts = [x for x in pts if 0 < x < 1]
        val, _ = integrate.quad(g, 0.0, 1.0, points=pts, epsabs=0.0, epsrel=QUAD_RTOL, limit=1000)
        val *= math.exp(log_peak)
    if measure == "dr":
        val /= 2.0 * sol.cfg.alpha
    elif measure == "ds":
        # (1-s)^p (1+s)^l2 = 2^(p+l2) z^p (1-z)^l2 and ds = 2 dz
        val *= 2.0 ** (2.0 * p + 2.0 * l2 + 1.0)
    return val


def norm_quadrature(sol: WaveSolution, measure: Optional[str] = None) -> float:
    """``N' = (int |phi|^2)^(-1/2)`` by adaptive quadrature (rtol 1e-10).

    Raises
    ------
    NonNormalizableError
        If the exponents are not positive or the integral diverges.
    """
    _require_exponents(sol)
    measure = measure or sol.measure
    if measure not in MEASURES:
        raise ValueError(f"measure must be one of {MEASURES}")
    val = _z_integral(sol, measure)
    if not (val > 0 and math.isfinite(val)):
        raise NonNormalizableError(f"norm integral is {val!r}")
    return 1.0 / math.sqrt(val)


def sigma_sum(sol: WaveSolution, k_upper: Optional[int] = None) -> float:
    """``Gamma(1+2 l1) sum_k (-n)_k (2 l1 + 2 l2 + n + 1)_k 2^-k / (Gamma(2 l1 + k + 1) k!)``.

    The formally singular ratio ``Gamma(-n+k)/Gamma(-n)`` is the Pochhammer
    symbol ``(-n)_k``, so terms beyond ``k = n`` vanish.
    """
    if sol.lambda1 is None or sol.lambda2 is None:
        raise NonNormalizableError("exponents are not real")
    n = sol.qn.n
    k_upper = n if k_upper is None else int(k_upper)
    l1, l2 = sol.lambda1, sol.lambda2
    a = 2 * l1 + 2 * l2 + n + 1
    terms = []
    for k in range(k_upper + 1):
        head = pochhammer(-n, k)
        if head == 0.0:
            continue
        # Gamma(1 + 2 l1)/Gamma(2 l1 + k + 1) = 1/(1 + 2 l1)_k
        terms.append(head * pochhammer(a, k) / (pochhammer(1 + 2 * l1, k) * math.factorial(k) * 2.0**k))
    return math.fsum(terms)


def norm_closed_form(sol: WaveSolution) -> Optional[float]:
    """Normalisation from the closed-form sum; ``None`` marks an imaginary value.

    The summation index of the outer factor is read as running over
    ``k = 0..n`` together with the inner sum::

        |N'|^2 = sum_k (2 l1 + 2k + 1) / (|Sigma|^2 2F1(-2 l2, 1; 2 l1 + 2k + 2; -1))
    """
    if sol.lambda1 is None or sol.lambda2 is None:
        return None
    l1, l2 = sol.lambda1, sol.lambda2
    sig = sigma_sum(sol)
    if sig == 0.0:
        return None
    total = 0.0
    for k in range(sol.qn.n + 1):
        f = hyp2f1_at(-2 * l2, 1.0, 2 * l1 + 2 * k + 2, -1.0).value
        total += (2 * l1 + 2 * k + 1) / (sig * sig * f)
    return math.sqrt(total) if total >= 0 else None


def classify_state(sol: WaveSolution) -> StateClass:
    """Normalizable iff both exponents are real and positive and the norm is real."""
    if sol.has_positive_exponents and sol.norm is not None and sol.norm > 0:
        return StateClass.NORMALIZABLE
    return StateClass.IMAGINARY_NORM


def density_profile(sol: WaveSolution, r_grid) -> np.ndarray:
    """Rows ``(r, N'^2 |phi(r)|^2)`` on ``r_grid``.

    Raises
    ------
    NonNormalizableError
        If the state is not normalizable.
    """
    if classify_state(sol) is not StateClass.NORMALIZABLE:
        raise NonNormalizableError(f"state {sol.qn} ({sol.branch.value}) is not normalizable")
    r = np.asarray(r_grid, dtype=float)
    rho = phi(r, sol) ** 2
    return np.column_stack([r, rho])


def node_count(sol: WaveSolution, samples: int = 20_001) -> int:
    """Sign changes of the polynomial factor on ``(0, 1)`` (interior zeros of phi)."""
    _require_exponents(sol)
    b, c = sol.hyp_params()
    z = np.linspace(0.0, 1.0, samples)[1:-1]
    poly = hyp2f1_terminating(sol.qn.n, b, c, z)
    s = np.sign(poly)
    s = s[s != 0]
    return int(np.count_nonzero(s[1:] != s[:-1]))


def overlap(a: WaveSolution, b: WaveSolution, weight: str = "plain") -> float:
    """``int phi_a phi_b w dr`` for two normalised states.

    ``weight="plain"`` uses ``w = 1``. ``weight="charge"`` uses the
    Klein-Gordon inner-product weight ``w = E_a + E_b - 2 V(r)``, under
    which eigenfunctions of distinct energies are orthogonal.
    """
    if a.cfg != b.cfg:
        raise ValueError("states must share the physical parameters")
    cfg = a.cfg
    if weight == "plain":
        def w(r):
            return 1.0
    elif weight == "charge":
        ea, eb = a.energy.value, b.energy.value

        def w(r):
            return ea + eb - 2.0 * yukawa_hulthen(r, cfg)
    else:
        raise ValueError("weight must be 'plain' or 'charge'")
    scale = 1.0 / cfg.alpha

    def f(r):
        return phi(r, a) * phi(r, b) * w(r)

    edges = [0.0, scale, 10 * scale, 100 * scale, np.inf]
    total = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        total += integrate.quad(f, lo, hi, epsabs=1e-13, epsrel=1e-10, limit=500)[0]
    return total
