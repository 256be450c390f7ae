"""Shooting-method solver for the radial equation, used as an independent check.

The equation integrated is ``u'' = -k^2(r) u`` with::

    k^2 = beta^2 [(E - V(r))^2 - m(r)^2 c^4] - l(l+1) C(r)

where ``V`` is the Hulthen-form potential, ``m`` the position-dependent mass
and ``C`` either ``1/r^2`` or its Greene-Aldrich approximant. Nothing from
the analytic solution enters except the asymptotic decay constant
``sqrt(m0^2 c^4 - E^2) beta``, which depends on ``E`` alone.

Integration is fixed-step classical RK4 in ``x = ln r`` so that the power-law
behaviour near the origin and the slow tail share one grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import optimize

from .model import (
    DomainError,
    PhysicalConfig,
    QuantumNumbers,
    greene_aldrich_factor,
    mass_profile,
    yukawa_hulthen,
)

__all__ = [
    "BracketError",
    "ShootingResult",
    "RadialGrid",
    "effective_wavenumber_sq",
    "integrate_radial",
    "shoot_energy",
    "shoot_branch",
    "eigenfunction",
]

R_MIN = 1e-6
DEFAULT_STEPS = 20_000
_RESCALE = 1e150


class BracketError(LookupError):
    """The energy bracket holds no eigenvalue with the requested node count."""


@dataclass(frozen=True)
class ShootingResult:
    energy: float
    nodes: int
    terminal_mismatch: float
    iterations: int
    r_max: float


def effective_wavenumber_sq(r, E, qn: QuantumNumbers, cfg: PhysicalConfig,
                            centrifugal: str = "greene_aldrich"):
    """Local ``k^2(r)`` of the radial equation."""
    r = np.asarray(r, dtype=float)
    if np.any(~(r > 0)):
        raise DomainError("radial distance must be > 0")
    V = yukawa_hulthen(r, cfg)
    m = mass_profile(r, cfg)
    l = qn.l
    if centrifugal == "greene_aldrich":
        cterm = l * (l + 1) * greene_aldrich_factor(r, cfg.alpha)
    elif centrifugal == "exact":
        cterm = l * (l + 1) / r**2
    else:
        raise ValueError("centrifugal must be 'exact' or 'greene_aldrich'")
    k2 = cfg.beta**2 * ((E - V) ** 2 - (m * cfg.c**2) ** 2) - cterm
    return float(k2) if np.ndim(k2) == 0 else k2


def _origin_exponent(qn: QuantumNumbers, cfg: PhysicalConfig, centrifugal: str) -> float:
    # u ~ r^s near the origin, s(s-1) = l(l+1) + beta^2 (m1^2 c^4/(2 alpha)^2 - eta^2)
    q = qn.l * (qn.l + 1) + cfg.beta**2 * (
        (cfg.m1 * cfg.c**2 / (2 * cfg.alpha)) ** 2 - cfg.eta**2
    )
    disc = 0.25 + q
    if disc < 0:
        raise DomainError("potential too singular at the origin (fall to centre)")
    return 0.5 + math.sqrt(disc)


class RadialGrid:
    """Log-uniform grid with the energy-independent parts of ``k^2`` cached.

    ``k^2(E) = beta^2 (E^2 - 2 E V + V^2 - m^2 c^4) - C`` is evaluated on the
    nodes and midpoints needed by RK4.
    """

    def __init__(self, qn: QuantumNumbers, cfg: PhysicalConfig, r_max: float,
                 steps: int = DEFAULT_STEPS, centrifugal: str = "greene_aldrich"):
        if steps < 2:
            raise ValueError("steps must be >= 2")
        if not r_max > R_MIN:
            raise ValueError("r_max must exceed the starting radius")
        self.qn, self.cfg, self.r_max, self.steps = qn, cfg, float(r_max), int(steps)
        self.centrifugal = centrifugal
        x0, x1 = math.log(R_MIN), math.log(r_max)
        self.h = (x1 - x0) / steps
        # 2*steps + 1 points: even indices are nodes, odd indices midpoints
        self.x = np.linspace(x0, x1, 2 * steps + 1)
        self.r = np.exp(self.x)
        self._rl = self.r.tolist()
        base = QuantumNumbers(0, qn.l)
        zero = effective_wavenumber_sq(self.r, 0.0, base, cfg, centrifugal)
        self._V = yukawa_hulthen(self.r, cfg)
        # k^2(E) = k2_0 + beta^2 (E^2 - 2 E V)
        self._k2_0 = zero
        self.s = _origin_exponent(qn, cfg, centrifugal)

    def k2(self, E: float) -> np.ndarray:
        b2 = self.cfg.beta**2
        return self._k2_0 + b2 * (E * E - 2.0 * E * self._V)

    def _sweep(self, g, i0, i1, u, p, keep=None):
        """RK4 from node ``i0`` to node ``i1`` (either direction).

        Returns ``(u, p, nodes)`` with ``p = du/dr``. ``keep`` optionally
        receives ``u`` at every node passed, on a common scale.
        """
        rl, gl = self._rl, g
        step = 1 if i1 >= i0 else -1
        h = self.h * step
        nodes = 0
        if keep is not None:
            keep[i0] = u
        last_rescale = i0
        for i in range(i0, i1, step):
            j = 2 * i
            jm, jn = j + step, j + 2 * step
            r0, r1 = rl[j], rl[jn]
            g0, gm, g1 = gl[j], gl[jm], gl[jn]
            # y = (u, v), v = r u'; dy/dx = (v, v + g u), g = -r^2 k^2
            v = r0 * p
            k1u, k1v = v, v + g0 * u
            u2, v2 = u + 0.5 * h * k1u, v + 0.5 * h * k1v
            k2u, k2v = v2, v2 + gm * u2
            u3, v3 = u + 0.5 * h * k2u, v + 0.5 * h * k2v
            k3u, k3v = v3, v3 + gm * u3
            u4, v4 = u + h * k3u, v + h * k3v
            k4u, k4v = v4, v4 + g1 * u4
            un = u + h / 6.0 * (k1u + 2 * k2u + 2 * k3u + k4u)
            vn = v + h / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v)
            if un != 0.0 and (un > 0) != (u > 0):
                nodes += 1
            u, p = un, vn / r1
            big = abs(u) + abs(p)
            if big > _RESCALE or big < 1.0 / _RESCALE:
                u /= big
                p /= big
                if keep is not None:
                    lo_, hi_ = sorted((last_rescale, i + step))
                    keep[lo_:hi_ + 1] /= big
                    last_rescale = i + step
            if keep is not None:
                keep[i + step] = u
        return u, p, nodes

    def _g(self, E):
        return (-(self.r**2) * self.k2(E)).tolist()

    def integrate(self, E: float):
        """Outward sweep to ``r_max``: ``(nodes, u'/u at r_max)``."""
        u, p, nodes = self._sweep(self._g(E), 0, self.steps, 1.0, self.s / R_MIN)
        logderiv = p / u if u != 0.0 else math.copysign(math.inf, p)
        return nodes, logderiv

    def matching_index(self, E: float) -> int:
        """Grid node at the outermost classical turning point for energy ``E``."""
        allowed = np.flatnonzero(self.k2(E)[::2] > 0)
        if allowed.size == 0:
            return self.steps // 2
        return int(min(max(allowed[-1], 1), self.steps - 1))

    def matched(self, E: float, im: int, keep: bool = False):
        """Outward solution to node ``im`` against the inward one started on the
        decaying tail ``u'/u = -kappa`` at ``r_max``.

        Returns ``(wronskian, logderiv_defect, nodes, samples)``; the Wronskian
        is formed from unit-normalised ``(u, r u')`` pairs so it stays bounded.
        ``samples`` is ``(r, u)`` on the grid nodes when ``keep`` is set.
        """
        g = self._g(E)
        kappa = _kappa(E, self.cfg)
        out = np.zeros(self.steps + 1) if keep else None
        inn = np.zeros(self.steps + 1) if keep else None
        uo, po, no = self._sweep(g, 0, im, 1.0, self.s / R_MIN, out)
        ui, pi, ni = self._sweep(g, self.steps, im, 1.0, -kappa, inn)
        rm = self._rl[2 * im]
        a = math.hypot(uo, rm * po)
        b = math.hypot(ui, rm * pi)
        w = (uo * rm * pi - ui * rm * po) / (a * b)
        defect = po / uo - pi / ui if uo != 0 and ui != 0 else math.inf
        samples = None
        if keep:
            u = out.copy()
            u[im:] = inn[im:] * (uo / ui)
            samples = (self.r[::2].copy(), u)
        return w, defect, no + ni, samples


def integrate_radial(E: float, qn: QuantumNumbers, cfg: PhysicalConfig, r_max: float,
                     steps: int = DEFAULT_STEPS, centrifugal: str = "greene_aldrich"):
    """Node count on ``(0, r_max)`` and ``u'/u`` at ``r_max`` for energy ``E``."""
    grid = RadialGrid(qn, cfg, r_max, steps, centrifugal)
    return grid.integrate(E)


def _kappa(E: float, cfg: PhysicalConfig) -> float:
    arg = cfg.rest_energy**2 - E * E
    return cfg.beta * math.sqrt(arg) if arg > 0 else 0.0


def _default_r_max(cfg: PhysicalConfig, E: Optional[float] = None) -> float:
    r_max = 40.0 / cfg.alpha
    if E is not None:
        kappa = _kappa(E, cfg)
        if kappa > 0:
            r_max = max(r_max, 40.0 / kappa)
    return min(r_max, 1e7)


def _shoot_on_grid(grid: RadialGrid, n: int, lo: float, hi: float, xtol: float):
    calls = 0

    def nodes_at(E):
        nonlocal calls
        calls += 1
        return grid.integrate(E)[0]

    n_lo, n_hi = nodes_at(lo), nodes_at(hi)
    if n_lo > n or n_hi <= n:
        raise BracketError(
            f"bracket [{lo:.12g}, {hi:.12g}] has node counts {n_lo}..{n_hi}; "
            f"no eigenvalue with {n} nodes"
        )
    # a: highest energy seen with <= n nodes, b: lowest with > n
    a, b = lo, hi
    while b - a > xtol * max(1.0, abs(a)):
        mid = 0.5 * (a + b)
        if nodes_at(mid) <= n:
            a = mid
        else:
            b = mid

    im = grid.matching_index(a)

    def wronskian(E):
        nonlocal calls
        calls += 1
        return grid.matched(E, im)[0]

    # the node edge sits within ~exp(-2 kappa r_max) of the level; widen until
    # the matched Wronskian changes sign
    w_a = wronskian(a)
    if w_a == 0.0:
        root = a
    else:
        delta = max(xtol, 1e-14) * max(1.0, abs(a))
        root = None
        for _ in range(60):
            e_lo, e_hi = max(lo, a - delta), min(hi, a + delta)
            w_lo, w_hi = wronskian(e_lo), wronskian(e_hi)
            if w_lo == 0.0:
                root = e_lo
                break
            if w_hi == 0.0:
                root = e_hi
                break
            if np.sign(w_lo) != np.sign(w_hi):
                root = optimize.brentq(wronskian, e_lo, e_hi, xtol=xtol,
                                       rtol=4 * np.finfo(float).eps, maxiter=200)
                break
            delta *= 4.0
        if root is None:
            raise BracketError(f"matching failed near E={a:.15g}")
    _, defect, nodes, _ = grid.matched(root, im)
    calls += 1
    return root, defect, nodes, calls


def shoot_energy(
    qn: QuantumNumbers,
    cfg: PhysicalConfig,
    bracket: tuple,
    centrifugal: str = "greene_aldrich",
    steps: int = DEFAULT_STEPS,
    r_max: Optional[float] = None,
    xtol: float = 1e-12,
) -> ShootingResult:
    """Eigenvalue with ``qn.n`` nodes inside ``bracket``.

    Node-count bisection of the outward solution isolates the level; the
    energy is then refined by matching the outward solution at the outer
    turning point to an inward one started on the decaying tail
    ``u'/u = -beta sqrt(m0^2 c^4 - E^2)``. Without an explicit ``r_max`` a
    first pass uses ``40/alpha`` and a second pass, if needed, extends the box
    to 40 decay lengths of the level found.

    Raises
    ------
    BracketError
        If the bracket holds no level with ``qn.n`` nodes.
    """
    lo, hi = map(float, bracket)
    if not lo < hi:
        raise ValueError("bracket must satisfy lo < hi")
    box = r_max if r_max is not None else _default_r_max(cfg)
    iterations = 0
    for _ in range(2):
        grid = RadialGrid(qn, cfg, box, steps, centrifugal)
        energy, defect, nodes, calls = _shoot_on_grid(grid, qn.n, lo, hi, xtol)
        iterations += calls
        if r_max is not None:
            break
        wanted = _default_r_max(cfg, energy)
        if wanted <= box * 1.0001:
            break
        box = wanted
    return ShootingResult(float(energy), int(nodes), float(defect), iterations, grid.r_max)


def shoot_branch(qn: QuantumNumbers, cfg: PhysicalConfig, branch: str = "plus",
                 **kwargs) -> ShootingResult:
    """Shoot for the level on one half of the window ``(-m0 c^2, m0 c^2)``.

    ``branch`` is ``"plus"`` for ``(0, m0 c^2)`` and ``"minus"`` for
    ``(-m0 c^2, 0)``; the open ends stay a relative ``1e-15`` inside threshold.
    Extra keyword arguments go to :func:`shoot_energy`.
    """
    edge = cfg.rest_energy * (1.0 - 1e-15)
    value = getattr(branch, "value", branch)
    if value == "plus":
        bracket = (0.0, edge)
    elif value == "minus":
        bracket = (-edge, 0.0)
    else:
        raise ValueError("branch must be 'plus' or 'minus'")
    return shoot_energy(qn, cfg, bracket, **kwargs)


def eigenfunction(result: ShootingResult, qn: QuantumNumbers, cfg: PhysicalConfig,
                  centrifugal: str = "greene_aldrich", steps: int = DEFAULT_STEPS):
    """``(r, u)`` on the grid nodes at the shooting eigenvalue.

    Normalised to ``int u^2 dr = 1`` (trapezoid on the log grid) with ``u > 0``
    near the origin.
    """
    grid = RadialGrid(qn, cfg, result.r_max, steps, centrifugal)
    im = grid.matching_index(result.energy)
    _, _, _, (r, u) = grid.matched(result.energy, im, keep=True)
    u = u / math.sqrt(np.trapezoid(u * u, r))
    first = np.flatnonzero(np.abs(u) > 1e-8 * np.max(np.abs(u)))
    if first.size and u[first[0]] < 0:
        u = -u
    return r, u
