"""Normalized radial spinor components and Schroedinger-limit wavefunctions.

The dominant component of every bound state has the form

    f(r) = N r^(s+1) exp(-eps r) L_n^(2s+1)(2 eps r),

with ``s`` the effective index (delta for spin, eta for pseudospin, nu in the
Schroedinger limit).  :class:`LaguerreState` evaluates it together with its
first two derivatives; the partner component is obtained from the first-order
Dirac equations.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from scipy import integrate
from scipy.special import roots_genlaguerre

from .errors import PreconditionError, SingularDenominator
from .grids import hybrid_grid
from .model import (
    PhysicalParams,
    QuantumNumbers,
    SymmetryMode,
    dirac_factors,
    reduced_coefficients,
)
from .special import laguerre, laguerre_derivative
from .spectrum import nonrelativistic_energy

__all__ = [
    "Component",
    "LaguerreState",
    "CompanionState",
    "RadialFunction",
    "laguerre",
    "normalization_constant",
    "default_grid",
    "upper_spinor",
    "lower_spinor",
    "dominant_component",
    "companion_component",
    "nonrelativistic_wavefunction",
    "count_nodes",
]

GRID_POINTS = 2000
RHO_MIN = 1e-4
QUANTIZATION_TOL = 1e-8


class Component(str, Enum):
    UPPER = "F"
    LOWER = "G"


def normalization_constant(eps: float, index: float, n: int) -> float:
    """N = sqrt(n! (2 eps)^(2s+3) / (2 (n+s+1) Gamma(n+2s+2))), via log-gamma."""
    if not eps > 0:
        raise PreconditionError("eps must be positive")
    if not index > -0.5:
        raise PreconditionError("index must exceed -1/2")
    log_n2 = (
        math.lgamma(n + 1)
        + (2 * index + 3) * math.log(2 * eps)
        - math.log(2 * (n + index + 1))
        - math.lgamma(n + 2 * index + 2)
    )
    return math.exp(0.5 * log_n2)


@dataclass(frozen=True)
class LaguerreState:
    """f(r) = norm r^(index+1) exp(-eps r) L_n^(2 index + 1)(2 eps r)."""

    eps: float
    index: float
    n: int
    norm: float = field(default=math.nan)

    def __post_init__(self):
        if math.isnan(self.norm):
            object.__setattr__(self, "norm", normalization_constant(self.eps, self.index, self.n))

    @property
    def alpha(self) -> float:
        return 2.0 * self.index + 1.0

    def _envelope(self, r):
        r = np.asarray(r, dtype=float)
        s = self.index + 1.0
        # r^s e^(-eps r) in log form keeps tiny radii and long tails finite
        with np.errstate(divide="ignore"):
            h = np.exp(s * np.log(r) - self.eps * r)
        return r, s, h

    def value(self, r):
        r, _, h = self._envelope(r)
        return self.norm * h * laguerre(self.n, self.alpha, 2 * self.eps * r)

    def derivative(self, r):
        r, s, h = self._envelope(r)
        x = 2 * self.eps * r
        lag = laguerre(self.n, self.alpha, x)
        dlag = laguerre_derivative(self.n, self.alpha, x)
        return self.norm * h * ((s / r - self.eps) * lag + 2 * self.eps * dlag)

    def second_derivative(self, r):
        r, s, h = self._envelope(r)
        x = 2 * self.eps * r
        lag = laguerre(self.n, self.alpha, x)
        dlag = laguerre_derivative(self.n, self.alpha, x)
        d2lag = laguerre_derivative(self.n, self.alpha, x, order=2)
        g = s / r - self.eps
        return self.norm * h * ((g * g - s / r**2) * lag + 4 * self.eps * g * dlag + 4 * self.eps**2 * d2lag)

    def norm_integral(self) -> float:
        """Integral of f^2 over (0, inf) by generalized Gauss-Laguerre quadrature."""
        x, w = roots_genlaguerre(self.n + 12, 2.0 * self.index + 2.0)
        total = np.sum(w * laguerre(self.n, self.alpha, x) ** 2)
        return float(self.norm**2 * total / (2 * self.eps) ** (2 * self.index + 3))


@dataclass(frozen=True)
class CompanionState:
    """Partner component hbar_c (f' + sign kappa f / r) / U(r), U = c0 + c1/r."""

    parent: LaguerreState
    kappa: int
    sign: int
    c0: float
    c1: float
    hbar_c: float = 1.0

    def _u(self, r):
        return self.c0 + self.c1 / r

    def value(self, r):
        r = np.asarray(r, dtype=float)
        p = self.parent
        num = p.derivative(r) + self.sign * self.kappa * p.value(r) / r
        return self.hbar_c * num / self._u(r)

    def derivative(self, r):
        r = np.asarray(r, dtype=float)
        p = self.parent
        f, df, d2f = p.value(r), p.derivative(r), p.second_derivative(r)
        sk = self.sign * self.kappa
        num = df + sk * f / r
        dnum = d2f + sk * (df / r - f / r**2)
        u = self._u(r)
        du = -self.c1 / r**2
        return self.hbar_c * (dnum * u - num * du) / u**2

    def norm_integral(self) -> float:
        scale = 1.0 / self.parent.eps
        f2 = lambda r: float(self.value(r)) ** 2
        pieces = [0.0, scale, 10 * scale, 40 * scale, math.inf]
        return float(sum(integrate.quad(f2, a, b, limit=200, epsabs=1e-14, epsrel=1e-12)[0]
                         for a, b in zip(pieces[:-1], pieces[1:])))


@dataclass(frozen=True)
class RadialFunction:
    """A sampled radial component together with its analytic representation.

    ``norm`` is the quadrature estimate of the integral of f(r)^2 over
    (0, inf); ``state`` evaluates the function and its derivatives anywhere.
    """

    grid: np.ndarray
    values: np.ndarray
    norm: float
    qn: QuantumNumbers
    mode: SymmetryMode
    component: Component
    state: object
    params: PhysicalParams | None = None
    energy: float | None = None

    def __call__(self, r):
        return self.state.value(r)

    def derivative(self, r):
        return self.state.derivative(r)

    def second_derivative(self, r):
        second = getattr(self.state, "second_derivative", None)
        if second is None:
            raise AttributeError("no analytic second derivative for this component")
        return second(r)

    @property
    def has_second_derivative(self) -> bool:
        return hasattr(self.state, "second_derivative")

    @property
    def eps(self) -> float:
        return _root_state(self.state).eps

    @property
    def index(self) -> float:
        return _root_state(self.state).index

    @property
    def normalizer(self) -> float:
        return _root_state(self.state).norm

    def node_count(self) -> int:
        return count_nodes(self.values)


def _root_state(state) -> LaguerreState:
    while isinstance(state, CompanionState):
        state = state.parent
    return state


def count_nodes(values, rel_floor: float = 1e-10) -> int:
    """Sign changes of ``values``, ignoring samples below rel_floor * peak."""
    v = np.asarray(values, dtype=float)
    peak = np.max(np.abs(v)) if v.size else 0.0
    if peak == 0:
        return 0
    signs = np.sign(v[np.abs(v) > rel_floor * peak])
    return int(np.count_nonzero(signs[1:] != signs[:-1]))


def default_grid(eps: float, index: float, n: int, num: int = GRID_POINTS) -> np.ndarray:
    """Hybrid log-linear grid on [1e-4, 40 + 4 (n + index + 1)] / eps."""
    rho_max = 40.0 + 4.0 * (n + index + 1.0)
    return hybrid_grid(RHO_MIN, rho_max, num) / eps


def _bound_state(params, qn, mode, E) -> LaguerreState:
    rc = reduced_coefficients(params, qn, mode, E)
    if not rc.eps_real:
        raise PreconditionError(f"E={E!r} is not bound: eps^2 = {rc.eps2!r} <= 0")
    if not rc.index_real or not rc.index > -0.5:
        raise PreconditionError(f"effective index {rc.index!r} does not give a normalizable state")
    if not rc.beta > 0:
        raise PreconditionError(f"E={E!r} has beta = {rc.beta!r} <= 0: no decaying solution")
    eps = rc.epsilon
    mismatch = 2 * eps * (qn.n + rc.index + 1) - rc.beta
    if abs(mismatch) > QUANTIZATION_TOL * max(1.0, abs(rc.beta)):
        raise PreconditionError(f"E={E!r} is not an eigenvalue for n={qn.n}, kappa={qn.kappa}")
    if rc.index < 0:
        warnings.warn(
            f"negative index {rc.index:.6g}: normalizable but outside index > 0",
            RuntimeWarning,
            stacklevel=3,
        )
    return LaguerreState(eps=eps, index=rc.index, n=qn.n)


def _sample(state, params, qn, mode, component, E, grid) -> RadialFunction:
    grid = default_grid(state.eps, state.index, qn.n) if grid is None else np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size < 2 or np.any(grid <= 0) or np.any(np.diff(grid) <= 0):
        raise PreconditionError("grid must be strictly increasing and positive")
    values = np.asarray(state.value(grid), dtype=float)
    return RadialFunction(
        grid=grid, values=values, norm=state.norm_integral(), qn=qn, mode=mode,
        component=component, state=state, params=params, energy=E,
    )


def upper_spinor(params: PhysicalParams, qn: QuantumNumbers, E: float, grid=None) -> RadialFunction:
    """Normalized upper component F of a spin-symmetric bound state at energy ``E``."""
    state = _bound_state(params, qn, SymmetryMode.SPIN, E)
    return _sample(state, params, qn, SymmetryMode.SPIN, Component.UPPER, E, grid)


def lower_spinor(params: PhysicalParams, qn: QuantumNumbers, E: float, grid=None) -> RadialFunction:
    """Normalized lower component G of a pseudospin-symmetric bound state at energy ``E``."""
    state = _bound_state(params, qn, SymmetryMode.PSEUDOSPIN, E)
    return _sample(state, params, qn, SymmetryMode.PSEUDOSPIN, Component.LOWER, E, grid)


def dominant_component(params, qn, E, mode, grid=None) -> RadialFunction:
    """F for spin mode, G for pseudospin mode."""
    if SymmetryMode.parse(mode) is SymmetryMode.SPIN:
        return upper_spinor(params, qn, E, grid)
    return lower_spinor(params, qn, E, grid)


def companion_component(f: RadialFunction, params: PhysicalParams, E: float, mode=None, grid=None) -> RadialFunction:
    """Partner component from the first-order radial Dirac equations.

    For an upper component, G = hbar_c (F' + kappa F / r) / U-(r); for a lower
    component, F = hbar_c (G' - kappa G / r) / U+(r).  Derivatives come from
    the Laguerre representation, not from finite differences.
    """
    mode = f.mode if mode is None else SymmetryMode.parse(mode)
    factors = dirac_factors(params, mode, E)
    m0, lam = params.m0, params.lambda0
    if f.component is Component.UPPER:
        c0, c1, sign, out = m0 * factors.um0, m0 * lam * factors.um1, 1, Component.LOWER
    else:
        c0, c1, sign, out = m0 * factors.up0, m0 * lam * factors.up1, -1, Component.UPPER
    grid = f.grid if grid is None else np.asarray(grid, dtype=float)
    u = c0 + c1 / grid
    tiny = 1e-12 * max(abs(c0), np.max(np.abs(c1 / grid)))
    bad = np.flatnonzero(np.abs(u) <= tiny)
    if bad.size == 0 and c0 != 0:
        # a sign change between samples also means a pole
        flips = np.flatnonzero(np.sign(u[1:]) != np.sign(u[:-1]))
        if flips.size:
            bad = flips
    if bad.size:
        radius = float(-c1 / c0) if c0 != 0 else float(grid[bad[0]])
        raise SingularDenominator(f"companion denominator vanishes near r = {radius!r}", radius)
    state = CompanionState(parent=f.state, kappa=f.qn.kappa, sign=sign, c0=c0, c1=c1, hbar_c=params.hbar_c)
    values = np.asarray(state.value(grid), dtype=float)
    return RadialFunction(
        grid=grid, values=values, norm=state.norm_integral(), qn=f.qn, mode=mode,
        component=out, state=state, params=params, energy=E,
    )


def nonrelativistic_wavefunction(params: PhysicalParams, n: int, l: int, grid=None) -> RadialFunction:
    """Normalized Schroedinger-limit radial function.

    F(r) = N r^(nu+1) exp(-eps r) L_n^(2nu+1)(2 eps r) with
    nu = sqrt((l+1/2)^2 + b(b-2q)) - 1/2 and eps = sqrt(-2 m0 E) / hbar_c.
    """
    E = nonrelativistic_energy(params, n, l)
    if not E < 0 or not params.q > params.b:
        raise PreconditionError(f"no bound Schroedinger-limit state (E = {E!r}, q - b = {params.q - params.b!r})")
    nu = math.sqrt((l + 0.5) ** 2 + params.b * (params.b - 2 * params.q)) - 0.5
    if not nu > -0.5:
        raise PreconditionError("index does not give a normalizable state")
    eps = math.sqrt(-2.0 * params.m0 * E) / params.hbar_c
    state = LaguerreState(eps=eps, index=nu, n=n)
    qn = QuantumNumbers(n=n, kappa=-(l + 1))
    return _sample(state, params, qn, SymmetryMode.SPIN, Component.UPPER, E, grid)
