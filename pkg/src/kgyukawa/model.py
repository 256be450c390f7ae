"""Physical parameters, potentials and the position-dependent mass profile.

Natural units are used throughout: with the defaults ``m0 = hbar = c = beta = 1``
energies come out in multiples of the rest energy ``m0 c^2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields, replace

import numpy as np

__all__ = [
    "DomainError",
    "PhysicalConfig",
    "QuantumNumbers",
    "yukawa_exact",
    "yukawa_hulthen",
    "coulomb",
    "mass_profile",
    "greene_aldrich_factor",
    "bose_factor",
]

# below this argument 1/(e^x - 1) is evaluated through expm1
_EXPM1_SWITCH = 1e-4


class DomainError(ValueError):
    """Raised when an argument lies outside the domain of an operation."""


@dataclass(frozen=True)
class PhysicalConfig:
    """Parameters of the Klein-Gordon / Yukawa / PDM problem.

    Parameters
    ----------
    m0 : float
        Rest mass.
    m1 : float
        Amplitude of the position-dependent part of the mass.
    alpha : float
        Screening parameter (inverse length).
    eta : float
        Yukawa coupling strength.
    beta : float
        Coupling constant, read as ``1/(hbar c)``.
    hbar, c : float
        Reduced Planck constant and speed of light.
    """

    m0: float = 1.0
    m1: float = 0.0
    alpha: float = 0.01
    eta: float = 0.1
    beta: float = 1.0
    hbar: float = 1.0
    c: float = 1.0

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise TypeError(f"{f.name} must be a real number, got {value!r}")
            if not math.isfinite(value):
                raise ValueError(f"{f.name} must be finite, got {value!r}")
            object.__setattr__(self, f.name, float(value))
        for name in ("m0", "alpha", "beta", "hbar", "c"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)!r}")
        if self.m1 < 0:
            raise ValueError(f"m1 must be non-negative, got {self.m1!r}")
        if self.eta < 0:
            raise ValueError(f"eta must be non-negative, got {self.eta!r}")

    @property
    def rest_energy(self) -> float:
        """``m0 c^2``."""
        return self.m0 * self.c**2

    def with_(self, **changes) -> "PhysicalConfig":
        """Copy with some fields replaced (validated again)."""
        return replace(self, **changes)

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass(frozen=True, order=True)
class QuantumNumbers:
    """Radial quantum number ``n`` and orbital quantum number ``l``."""

    n: int = 0
    l: int = 0

    def __post_init__(self):
        for name in ("n", "l"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise TypeError(f"{name} must be an integer, got {value!r}")
            if value < 0:
                raise ValueError(f"{name} must be >= 0, got {value!r}")
            object.__setattr__(self, name, int(value))


def _check_radius(r):
    r = np.asarray(r, dtype=float)
    if np.any(~(r > 0)):
        raise DomainError("radial distance must be > 0")
    return r


def _scalar_or_array(x):
    return float(x) if np.ndim(x) == 0 else x


def bose_factor(x):
    """``1/(e^x - 1)`` for ``x > 0``, stable for small ``x``."""
    x = np.asarray(x, dtype=float)
    with np.errstate(over="ignore"):
        small = x < _EXPM1_SWITCH
        out = np.where(small, 1.0 / np.expm1(np.where(small, x, 1.0)), 0.0)
        big = ~small
        # e^{-x}/(1 - e^{-x}) avoids overflow for large x
        ex = np.exp(-np.where(big, x, 0.0))
        out = np.where(big, ex / -np.expm1(-np.where(big, x, 1.0)), out)
    return out


def yukawa_exact(r, cfg: PhysicalConfig):
    """Screened Coulomb potential ``-eta exp(-alpha r)/r``."""
    r = _check_radius(r)
    return _scalar_or_array(-cfg.eta * np.exp(-cfg.alpha * r) / r)


def yukawa_hulthen(r, cfg: PhysicalConfig):
    """Hulthen-form rewrite of the Yukawa potential.

    ``-2 alpha eta e^{-2 alpha r} / (1 - e^{-2 alpha r})``, i.e.
    ``-2 alpha eta / (e^{2 alpha r} - 1)``.
    """
    r = _check_radius(r)
    return _scalar_or_array(-2.0 * cfg.alpha * cfg.eta * bose_factor(2.0 * cfg.alpha * r))


def coulomb(r, cfg: PhysicalConfig):
    r = _check_radius(r)
    return _scalar_or_array(-cfg.eta / r)


def mass_profile(r, cfg: PhysicalConfig):
    """``m(r) = m0 + m1/(e^{2 alpha r} - 1)``."""
    r = _check_radius(r)
    return _scalar_or_array(cfg.m0 + cfg.m1 * bose_factor(2.0 * cfg.alpha * r))


def greene_aldrich_factor(r, alpha: float):
    """Approximant of ``1/r^2``: ``4 alpha^2 e^{-2 alpha r}/(1 - e^{-2 alpha r})^2``."""
    r = _check_radius(r)
    if not alpha > 0:
        raise DomainError("alpha must be > 0")
    x = 2.0 * alpha * r
    b = bose_factor(x)
    # e^{-x}/(1-e^{-x})^2 = b (1 + b)
    return _scalar_or_array(4.0 * alpha**2 * b * (1.0 + b))
