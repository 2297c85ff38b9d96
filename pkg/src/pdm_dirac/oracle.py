"""Shooting-method verification of the closed-form spectra.

The radial equations are integrated for the dominant component u and
w = r u', written on the scaled coordinate rho = eps r and stepped uniformly
in y = ln(rho) + rho with a fixed-step fourth-order Runge-Kutta scheme.  In
that form every variant reads

    du/dy = J w,
    dw/dy = J [ (1 + R) w + (P + s kappa R) u ],        J = 1 / (1 + rho),

with P = L + (um0 r + um1)(up0 r + up1), L the centrifugal numerator
(kappa(kappa+1) for the upper component, kappa(kappa-1) for the lower one),
s = +1 (upper) or -1 (lower) and R = r U'/U the first-derivative coupling
carried by the full equations only.  Reduced variants set R = 0.

An eigenvalue is a zero of the normalized Wronskian between the outward and
inward solutions at the matching point.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import lru_cache

import numpy as np
from numba import njit
from scipy.optimize import brentq

from .errors import (
    AmbiguousBracket,
    BracketError,
    DiracError,
    PreconditionError,
    SingularPotential,
    StiffnessError,
)
from .grids import hybrid_nodes
from .model import (
    PhysicalParams,
    QuantumNumbers,
    SymmetryMode,
    dirac_factors,
    reduced_coefficients,
)
from .spectrum import solve_energy

__all__ = [
    "OdeVariant",
    "ShootingConfig",
    "ShootResult",
    "VerificationReport",
    "bound_window",
    "integrate",
    "scan_mismatch",
    "find_eigenvalues",
    "find_eigenvalue",
    "approximation_audit",
    "residual_profile",
    "verify_state",
]


class OdeVariant(str, Enum):
    REDUCED_SPIN = "ReducedSpin"
    REDUCED_PSEUDOSPIN = "ReducedPseudospin"
    FULL_UPPER = "FullUpper"
    FULL_LOWER = "FullLower"

    @property
    def full(self) -> bool:
        return self in (OdeVariant.FULL_UPPER, OdeVariant.FULL_LOWER)

    @property
    def upper(self) -> bool:
        return self in (OdeVariant.REDUCED_SPIN, OdeVariant.FULL_UPPER)

    @property
    def default_mode(self) -> SymmetryMode:
        return SymmetryMode.SPIN if self.upper else SymmetryMode.PSEUDOSPIN

    @classmethod
    def reduced_for(cls, mode) -> "OdeVariant":
        mode = SymmetryMode.parse(mode)
        return cls.REDUCED_SPIN if mode is SymmetryMode.SPIN else cls.REDUCED_PSEUDOSPIN

    @classmethod
    def full_for(cls, mode) -> "OdeVariant":
        mode = SymmetryMode.parse(mode)
        return cls.FULL_UPPER if mode is SymmetryMode.SPIN else cls.FULL_LOWER


@dataclass(frozen=True)
class ShootingConfig:
    """Numerical settings of one shooting run.

    ``r_min`` and ``r_max`` are given in units of the decay length 1/eps at
    the trial energy, so the window follows the state as E varies.  ``steps``
    is the number of RK4 steps across the whole window at the coarse level;
    eigenvalues are refined at ``steps`` and ``2 steps`` and Richardson
    extrapolated.  ``bracket`` defaults to the energy window where eps^2 > 0.
    """

    r_min: float = 1e-4
    r_max: float = 35.0
    steps: int = 2000
    node_target: int | None = None
    bracket: tuple[float, float] | None = None
    tol: float = 1e-12
    scan_points: int = 320

    def __post_init__(self):
        if not 0 < self.r_min < self.r_max:
            raise PreconditionError("ShootingConfig needs 0 < r_min < r_max")
        if self.steps < 100:
            raise PreconditionError("ShootingConfig needs steps >= 100")
        if self.bracket is not None and not self.bracket[0] < self.bracket[1]:
            raise PreconditionError("ShootingConfig bracket must be a nonempty interval")
        if not self.tol > 0:
            raise PreconditionError("ShootingConfig tol must be positive")
        if self.scan_points < 10:
            raise PreconditionError("ShootingConfig needs scan_points >= 10")


@dataclass(frozen=True)
class ShootResult:
    """Outcome of one outward/inward integration at a fixed energy."""

    energy: float
    mismatch: float
    nodes: int
    match_radius: float
    r: np.ndarray | None = None
    u: np.ndarray | None = None


@dataclass(frozen=True)
class VerificationReport:
    variant: OdeVariant
    mode: SymmetryMode
    params: PhysicalParams
    qn: QuantumNumbers
    E_analytic: float
    E_numeric: float
    abs_dev: float
    rel_dev: float
    residual: float
    E_full: float | None = None
    approximation_gap: float | None = None
    error_estimate: float = 0.0
    exclusions: tuple[tuple[float, float], ...] = ()
    status: str = "ok"

    @property
    def ok(self) -> bool:
        return self.status == "ok"


# ---------------------------------------------------------------------------
# numerical kernel

@njit(cache=True, nogil=True)
def _rhs(rho, inv_eps, um0, um1, up0, up1, L, sk, c0, c1, full, u, w):
    r = rho * inv_eps
    jac = 1.0 / (1.0 + rho)
    P = L + (um0 * r + um1) * (up0 * r + up1)
    R = 0.0
    if full:
        R = -c1 / (c0 * r + c1)
    return jac * w, jac * ((1.0 + R) * w + (P + sk * R) * u)


@njit(cache=True, nogil=True)
def _shoot_kernel(rho_nodes, rho_mid, h, i_match, u0, w0, uN, wN,
                  inv_eps, um0, um1, up0, up1, L, sk, c0, c1, full,
                  store, out_u, out_log):
    n_nodes = rho_nodes.shape[0]
    big = 1e100
    # outward leg
    u = u0
    w = w0
    logs = 0.0
    nodes = 0
    if store:
        out_u[0] = u
        out_log[0] = 0.0
    for i in range(i_match):
        ra = rho_nodes[i]
        rm = rho_mid[i]
        rb = rho_nodes[i + 1]
        k1u, k1w = _rhs(ra, inv_eps, um0, um1, up0, up1, L, sk, c0, c1, full, u, w)
        k2u, k2w = _rhs(rm, inv_eps, um0, um1, up0, up1, L, sk, c0, c1, full, u + 0.5 * h * k1u, w + 0.5 * h * k1w)
        k3u, k3w = _rhs(rm, inv_eps, um0, um1, up0, up1, L, sk, c0, c1, full, u + 0.5 * h * k2u, w + 0.5 * h * k2w)
        k4u, k4w = _rhs(rb, inv_eps, um0, um1, up0, up1, L, sk, c0, c1, full, u + h * k3u, w + h * k3w)
        un = u + h * (k1u + 2.0 * k2u + 2.0 * k3u + k4u) / 6.0
        w = w + h * (k1w + 2.0 * k2w + 2.0 * k3w + k4w) / 6.0
        if un * u < 0.0:
            nodes += 1
        u = un
        a = max(abs(u), abs(w))
        if a > big:
            u /= a
            w /= a
            logs += math.log(a)
        if store:
            out_u[i + 1] = u
            out_log[i + 1] = logs
    uo = u
    wo = w
    # inward leg
    u = uN
    w = wN
    logs = 0.0
    if store:
        out_u[n_nodes - 1] = u
        out_log[n_nodes - 1] = 0.0
    for i in range(n_nodes - 1, i_match, -1):
        ra = rho_nodes[i]
        rm = rho_mid[i - 1]
        rb = rho_nodes[i - 1]
        k1u, k1w = _rhs(ra, inv_eps, um0, um1, up0, up1, L, sk, c0, c1, full, u, w)
        k2u, k2w = _rhs(rm, inv_eps, um0, um1, up0, up1, L, sk, c0, c1, full, u - 0.5 * h * k1u, w - 0.5 * h * k1w)
        k3u, k3w = _rhs(rm, inv_eps, um0, um1, up0, up1, L, sk, c0, c1, full, u - 0.5 * h * k2u, w - 0.5 * h * k2w)
        k4u, k4w = _rhs(rb, inv_eps, um0, um1, up0, up1, L, sk, c0, c1, full, u - h * k3u, w - h * k3w)
        un = u - h * (k1u + 2.0 * k2u + 2.0 * k3u + k4u) / 6.0
        w = w - h * (k1w + 2.0 * k2w + 2.0 * k3w + k4w) / 6.0
        if un * u < 0.0:
            nodes += 1
        u = un
        a = max(abs(u), abs(w))
        if a > big:
            u /= a
            w /= a
            logs += math.log(a)
        if store:
            out_u[i - 1] = u
            out_log[i - 1] = logs
    ui = u
    wi = w
    no = math.sqrt(uo * uo + wo * wo)
    ni = math.sqrt(ui * ui + wi * wi)
    mismatch = (wo * ui - wi * uo) / (no * ni)
    return mismatch, nodes, uo, ui


@lru_cache(maxsize=32)
def _ygrid(rho_min: float, rho_max: float, steps: int):
    y0 = math.log(rho_min) + rho_min
    y1 = math.log(rho_max) + rho_max
    h = (y1 - y0) / steps
    y = y0 + h * np.arange(steps + 1)
    nodes = hybrid_nodes(y)
    nodes[0], nodes[-1] = rho_min, rho_max
    mid = hybrid_nodes(y[:-1] + 0.5 * h)
    nodes.setflags(write=False)
    mid.setflags(write=False)
    return nodes, mid, h


# ---------------------------------------------------------------------------
# problem set-up

@dataclass(frozen=True)
class _Setup:
    eps: float
    um0: float
    um1: float
    up0: float
    up1: float
    L: float
    sk: float
    c0: float
    c1: float
    full: bool
    p: float
    c: float


def _resolve_mode(variant: OdeVariant, mode) -> SymmetryMode:
    if mode is None:
        return variant.default_mode
    mode = SymmetryMode.parse(mode)
    if not variant.full and mode is not variant.default_mode:
        raise PreconditionError(f"{variant.value} belongs to the {variant.default_mode.value} sector")
    return mode


def _setup(variant: OdeVariant, nat: PhysicalParams, qn: QuantumNumbers, e: float, mode: SymmetryMode) -> _Setup:
    f = dirac_factors(nat, mode, e)
    eps2 = f.eps2
    if not eps2 > 0:
        raise PreconditionError(f"E = {e!r} lies outside the bound window (eps^2 = {eps2!r})")
    k = qn.kappa
    if variant.upper:
        L, sk, c0, c1 = float(k * (k + 1)), float(k), f.um0, f.um1
    else:
        L, sk, c0, c1 = float(k * (k - 1)), float(-k), f.up0, f.up1
    full = variant.full and c1 != 0.0
    P0 = L + f.um1 * f.up1
    P1 = f.um0 * f.up1 + f.um1 * f.up0
    if full:
        R0, R1 = -1.0, c0 / c1
    else:
        R0 = R1 = 0.0
    A10, A11 = 1.0 + R0, R1
    A00, A01 = P0 + sk * R0, P1 + sk * R1
    disc = 0.25 * A10 * A10 + A00
    if disc < 0:
        raise PreconditionError("complex indicial exponent at the origin")
    p = 0.5 * A10 + math.sqrt(disc)
    denom = (p + 1.0) ** 2 - A10 * (p + 1.0) - A00
    c = (A11 * p + A01) / denom if denom != 0 else 0.0
    return _Setup(math.sqrt(eps2), f.um0, f.um1, f.up0, f.up1, L, sk, c0, c1, full, p, c)


def _pole_radius(s: _Setup) -> float | None:
    """Zero of U = c0 + c1/r on r > 0 for the full variants."""
    if not s.full or s.c0 == 0:
        return None
    r_star = -s.c1 / s.c0
    return r_star if r_star > 0 else None


def _shoot(variant, nat, qn, e, mode, cfg: ShootingConfig, steps: int, store: bool = False) -> ShootResult:
    s = _setup(variant, nat, qn, e, mode)
    r_star = _pole_radius(s)
    if r_star is not None and cfg.r_min <= r_star * s.eps <= cfg.r_max:
        raise SingularPotential(f"U vanishes at r = {r_star!r} inside the integration window", r_star)
    nodes_rho, mid, h = _ygrid(float(cfg.r_min), float(cfg.r_max), int(steps))
    rho_m = min(max(s.p, 0.5), 0.5 * cfg.r_max)
    i_match = int(np.searchsorted(nodes_rho, rho_m))
    i_match = min(max(i_match, 1), steps - 1)
    r0 = cfg.r_min / s.eps
    u0 = 1.0 + s.c * r0
    w0 = s.p + s.c * (s.p + 1.0) * r0
    uN, wN = 1.0, -cfg.r_max
    size = steps + 1 if store else 1
    out_u = np.zeros(size)
    out_log = np.zeros(size)
    mismatch, nodes, uo, ui = _shoot_kernel(
        nodes_rho, mid, h, i_match, u0, w0, uN, wN, 1.0 / s.eps,
        s.um0, s.um1, s.up0, s.up1, s.L, s.sk, s.c0, s.c1, s.full,
        store, out_u, out_log,
    )
    if not math.isfinite(mismatch):
        raise StiffnessError(f"integration lost finiteness at E = {e!r}")
    r = u = None
    if store:
        u = np.empty(steps + 1)
        left = slice(0, i_match + 1)
        right = slice(i_match, steps + 1)
        lo = out_log[left] - out_log[i_match]
        u[left] = out_u[left] * np.exp(lo) / uo
        ro = out_log[right] - out_log[i_match]
        u[right] = out_u[right] * np.exp(ro) / ui
        u = u / np.max(np.abs(u))
        r = np.asarray(nodes_rho) / s.eps
    return ShootResult(energy=e, mismatch=float(mismatch), nodes=int(nodes), match_radius=rho_m / s.eps, r=r, u=u)


def integrate(variant: OdeVariant | str, params: PhysicalParams, qn: QuantumNumbers, E: float,
              cfg: ShootingConfig | None = None, mode=None, store: bool = True) -> ShootResult:
    """Outward and inward solutions at energy ``E`` and their mismatch.

    The mismatch is the Wronskian of the two solutions at the matching radius
    (index + 1)/eps divided by the norms of their (u, r u') vectors; it is
    zero exactly at an eigenvalue.  The joined solution is returned on the
    integration grid (radii in the length unit of ``params``).
    """
    variant = OdeVariant(variant)
    cfg = cfg or ShootingConfig()
    mode = _resolve_mode(variant, mode)
    nat = params.natural()
    res = _shoot(variant, nat, qn, E / params.m0, mode, cfg, cfg.steps, store=store)
    r = None if res.r is None else res.r * params.lambda0
    return replace(res, energy=E, match_radius=res.match_radius * params.lambda0, r=r)


# ---------------------------------------------------------------------------
# eigenvalue search

def bound_window(params: PhysicalParams, mode) -> tuple[float, float]:
    """Open energy interval (natural units) on which eps^2 > 0."""
    mode = SymmetryMode.parse(mode)
    A = params.natural().A
    if mode is SymmetryMode.SPIN:
        a, b = A - 1.0, 1.0
    else:
        a, b = -1.0, 1.0 + A
    lo, hi = min(a, b), max(a, b)
    if not hi > lo:
        raise PreconditionError("no energies with eps^2 > 0")
    return lo, hi


def _scan_energies(lo: float, hi: float, accumulate_hi: bool | None, count: int) -> np.ndarray:
    width = hi - lo
    n_log = count // 2
    n_lin = count - n_log
    t = np.logspace(math.log10(width * 1e-7), math.log10(0.5 * width), n_log)
    pts = [lo + width * (np.arange(1, n_lin + 1) / (n_lin + 1))]
    if accumulate_hi is None:
        pts += [lo + t[::2], hi - t[::2]]
    elif accumulate_hi:
        pts += [hi - t, lo + t[::4]]
    else:
        pts += [lo + t, hi - t[::4]]
    e = np.unique(np.concatenate(pts))
    return e[(e > lo) & (e < hi)]


def _accumulation_side(nat, qn, mode, lo, hi) -> bool | None:
    """True if levels accumulate at the upper window edge, False at the lower."""
    side = []
    for edge in (lo, hi):
        rc = reduced_coefficients(nat, qn, mode, edge)
        side.append(rc.beta > 0)
    if side[1] and not side[0]:
        return True
    if side[0] and not side[1]:
        return False
    return None


def scan_mismatch(variant, params, qn, cfg: ShootingConfig | None = None, mode=None):
    """Mismatch on the scan energies; returns (energies, mismatches, exclusions).

    Energies are in natural units.  Exclusions are the scan intervals where
    the full-variant coefficient U vanished inside the window.
    """
    variant = OdeVariant(variant)
    cfg = cfg or ShootingConfig()
    mode = _resolve_mode(variant, mode)
    nat = params.natural()
    lo, hi = bound_window(nat, mode) if cfg.bracket is None else (cfg.bracket[0] / params.m0, cfg.bracket[1] / params.m0)
    acc = _accumulation_side(nat, qn, mode, *bound_window(nat, mode))
    energies = _scan_energies(lo, hi, acc, cfg.scan_points)
    values = np.full(energies.shape, np.nan)
    for i, e in enumerate(energies):
        try:
            values[i] = _shoot(variant, nat, qn, float(e), mode, cfg, cfg.steps).mismatch
        except (SingularPotential, PreconditionError):
            pass
    exclusions = []
    bad = np.isnan(values)
    i = 0
    while i < len(energies):
        if bad[i]:
            j = i
            while j + 1 < len(energies) and bad[j + 1]:
                j += 1
            a = energies[i - 1] if i > 0 else lo
            b = energies[j + 1] if j + 1 < len(energies) else hi
            exclusions.append((float(a), float(b)))
            i = j + 1
        else:
            i += 1
    return energies, values, tuple(exclusions)


def _refine(variant, nat, qn, mode, cfg, a, b, steps):
    f = lambda e: _shoot(variant, nat, qn, e, mode, cfg, steps).mismatch
    return brentq(f, a, b, xtol=cfg.tol, rtol=4 * np.finfo(float).eps, maxiter=200)


def _refine_near(variant, nat, qn, mode, cfg, e0, steps, lo, hi):
    f = lambda e: _shoot(variant, nat, qn, e, mode, cfg, steps).mismatch
    f0 = f(e0)
    if f0 == 0.0:
        return e0
    d = 1e-9
    while d < 1e-2:
        a, b = max(lo + 1e-15, e0 - d), min(hi - 1e-15, e0 + d)
        fa, fb = f(a), f(b)
        if fa * f0 <= 0:
            return brentq(f, a, e0, xtol=cfg.tol, rtol=4 * np.finfo(float).eps, maxiter=200)
        if fb * f0 <= 0:
            return brentq(f, e0, b, xtol=cfg.tol, rtol=4 * np.finfo(float).eps, maxiter=200)
        d *= 8.0
    raise BracketError(f"eigenvalue near E = {e0!r} lost on the refined grid")


@dataclass(frozen=True)
class Eigenvalue:
    energy: float
    nodes: int
    error_estimate: float


def find_eigenvalues(variant, params, qn, cfg: ShootingConfig | None = None, mode=None,
                     max_nodes: int | None = None):
    """Every eigenvalue in the bracket, Richardson-refined, with node counts.

    Sign changes whose coarse solution has more than ``max_nodes + 1`` nodes
    are skipped without refinement.  Returns ``(eigenvalues, exclusions)``
    with energies in the unit of ``params``.
    """
    variant = OdeVariant(variant)
    cfg = cfg or ShootingConfig()
    mode = _resolve_mode(variant, mode)
    nat = params.natural()
    lo, hi = bound_window(nat, mode)
    energies, values, exclusions = scan_mismatch(variant, params, qn, cfg, mode)
    found = []
    for i in range(len(energies) - 1):
        fa, fb = values[i], values[i + 1]
        if not (math.isfinite(fa) and math.isfinite(fb)) or fa * fb > 0:
            continue
        a, b = float(energies[i]), float(energies[i + 1])
        if max_nodes is not None:
            coarse = _shoot(variant, nat, qn, 0.5 * (a + b), mode, cfg, cfg.steps).nodes
            if coarse > max_nodes + 1:
                continue
        e1 = a if fa == 0 else (b if fb == 0 else _refine(variant, nat, qn, mode, cfg, a, b, cfg.steps))
        e2 = _refine_near(variant, nat, qn, mode, cfg, e1, 2 * cfg.steps, lo, hi)
        est = (e2 - e1) / 15.0
        e_best = e2 + est
        nodes = _shoot(variant, nat, qn, e2, mode, cfg, 2 * cfg.steps).nodes
        found.append(Eigenvalue(energy=e_best * params.m0, nodes=nodes, error_estimate=abs(est) * params.m0))
    unique = []
    for ev in found:
        if unique and abs(ev.energy - unique[-1].energy) < 1e-9 * params.m0:
            continue
        unique.append(ev)
    return unique, exclusions


def find_eigenvalue(variant, params, qn, cfg: ShootingConfig | None = None, mode=None) -> float:
    """The eigenvalue whose solution has ``cfg.node_target`` interior nodes (default n)."""
    cfg = cfg or ShootingConfig()
    target = qn.n if cfg.node_target is None else cfg.node_target
    eigenvalues, _ = find_eigenvalues(variant, params, qn, cfg, mode, max_nodes=target)
    matches = [ev for ev in eigenvalues if ev.nodes == target]
    if not matches:
        raise BracketError(f"no eigenvalue with {target} nodes in the bracket")
    if len(matches) > 1:
        raise AmbiguousBracket(
            f"{len(matches)} eigenvalues with {target} nodes: " + ", ".join(repr(m.energy) for m in matches)
        )
    return matches[0].energy


def _closest(eigenvalues, target_nodes, E_ref):
    matches = [ev for ev in eigenvalues if ev.nodes == target_nodes]
    if not matches:
        return None
    return min(matches, key=lambda ev: abs(ev.energy - E_ref))


# ---------------------------------------------------------------------------
# residuals and reports

def residual_profile(f, variant, params: PhysicalParams, E: float, mode=None) -> float:
    """Largest scaled residual of ``f`` in the chosen radial equation.

    The residual f'' - (U'/U)(f' + s kappa f / r) - [L / r^2 + U- U+] f is
    divided by max |eps^2 f| over the grid; the first-derivative term is
    present for the full variants only.  The analytic second derivative is
    used when ``f`` provides one, otherwise a five-point stencil.
    """
    variant = OdeVariant(variant)
    mode = _resolve_mode(variant, mode if mode is not None else (f.mode if variant.full else None))
    r = np.asarray(f.grid, dtype=float)[1:-1]
    values = np.asarray(f(r), dtype=float)
    peak = np.max(np.abs(values)) if values.size else 0.0
    if peak == 0.0:
        warnings.warn("residual of the zero function is taken as 0", RuntimeWarning, stacklevel=2)
        return 0.0
    lam = params.lambda0
    fac = dirac_factors(params, mode, E)
    k = f.qn.kappa
    if variant.upper:
        L, sk, c0, c1 = k * (k + 1), k, fac.um0, fac.um1 * lam
    else:
        L, sk, c0, c1 = k * (k - 1), -k, fac.up0, fac.up1 * lam
    uu = (fac.um0 + fac.um1 * lam / r) * (fac.up0 + fac.up1 * lam / r) / lam**2
    d1 = np.asarray(f.derivative(r), dtype=float)
    if getattr(f, "has_second_derivative", False):
        d2 = np.asarray(f.second_derivative(r), dtype=float)
    else:
        h = 1e-3 * np.minimum(r, 1.0 / max(fac.eps2, 1e-300) ** 0.5 * lam)
        fm2, fm1, fp1, fp2 = (np.asarray(f(r + s * h), dtype=float) for s in (-2, -1, 1, 2))
        d2 = (-fm2 + 16 * fm1 - 30 * values + 16 * fp1 - fp2) / (12 * h * h)
    res = d2 - (L / r**2 + uu) * values
    if variant.full and c1 != 0:
        coupling = -c1 / (r * (c0 * r + c1))
        res = res - coupling * (d1 + sk * values / r)
    eps2 = fac.eps2 / lam**2
    return float(np.max(np.abs(res)) / (eps2 * peak))


def _analytic_bound(params, qn, mode):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        sol = solve_energy(params, qn, mode)
    bound = [info.energy for info in sol.validity if info.bound]
    if not bound:
        raise PreconditionError(f"no bound analytic state for n={qn.n}, kappa={qn.kappa} ({mode.value})")
    return bound


def verify_state(params: PhysicalParams, qn: QuantumNumbers, mode, cfg: ShootingConfig | None = None,
                 audit: bool = True) -> list[VerificationReport]:
    """Compare every bound analytic root with the shooting eigenvalues.

    Each bound root is paired with the node-matched Reduced-variant eigenvalue
    closest to it.  With ``audit`` the Full-variant eigenvalue is located the
    same way and the gap between the two numerical energies is reported.
    """
    from .wavefunctions import dominant_component

    mode = SymmetryMode.parse(mode)
    cfg = cfg or ShootingConfig()
    variant = OdeVariant.reduced_for(mode)
    reduced, _ = find_eigenvalues(variant, params, qn, cfg, mode, max_nodes=qn.n)
    full = exclusions = None
    if audit:
        full, exclusions = find_eigenvalues(OdeVariant.full_for(mode), params, qn, cfg, mode, max_nodes=qn.n)
    reports = []
    for E_a in _analytic_bound(params, qn, mode):
        status = "ok"
        ev = _closest(reduced, qn.n, E_a)
        if ev is None:
            E_num, err, status = math.nan, 0.0, "no_eigenvalue"
        else:
            E_num, err = ev.energy, ev.error_estimate
        try:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", RuntimeWarning)
                wf = dominant_component(params, qn, E_a, mode)
            residual = residual_profile(wf, variant, params, E_a)
        except DiracError:
            residual = math.nan
        E_full = gap = None
        if audit:
            fv = _closest(full, qn.n, E_num if math.isfinite(E_num) else E_a)
            E_full = math.nan if fv is None else fv.energy
            gap = abs(E_full - E_num)
        abs_dev = abs(E_num - E_a)
        reports.append(VerificationReport(
            variant=variant, mode=mode, params=params, qn=qn, E_analytic=E_a, E_numeric=E_num,
            abs_dev=abs_dev, rel_dev=abs_dev / max(abs(E_a), 1e-300), residual=residual,
            E_full=E_full, approximation_gap=gap, error_estimate=err,
            exclusions=tuple(exclusions or ()), status=status,
        ))
    return reports


def approximation_audit(params: PhysicalParams, qn: QuantumNumbers, mode,
                        cfg: ShootingConfig | None = None) -> VerificationReport:
    """Gap between the reduced and full radial equations for one state.

    E_reduced and E_full are both shooting eigenvalues with n nodes; the one
    closest to the (particle-preferred) bound analytic root is reported.
    """
    reports = verify_state(params, qn, mode, cfg, audit=True)
    return reports[0]
