"""Closed-form energy spectra.

The spin and pseudospin energy conditions are quadratic in E once both sides
are expanded.  :func:`solve_energy` returns both roots with their residuals
and validity flags; the remaining functions are the special-case reductions
(A = 0, constant mass, q = b/2, s-waves and the Schroedinger limit).

All energies are returned in the energy unit of the supplied parameters
(multiples of m0 c^2 in natural units); residuals are in units of m0^2 c^4.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

from .errors import ComplexIndexError, NoRealSolution, PreconditionError
from .model import (
    PhysicalParams,
    QuantumNumbers,
    SymmetryMode,
    effective_index,
    reduced_coefficients,
)

__all__ = [
    "RootInfo",
    "EnergySolution",
    "energy_residual",
    "solve_energy",
    "energy_A0_spin",
    "energy_constant_mass",
    "duality_spectra",
    "s_wave_energy",
    "nonrelativistic_energy",
    "coulomb_ratio",
]

DEGENERATE_DISC = 1e-13
# roots sitting on the continuum edge give eps^2 ~ 1e-16 from rounding alone
EPS2_FLOOR = 1e-12


@dataclass(frozen=True)
class RootInfo:
    """Validity of one root of the energy condition.

    ``sign_consistent`` records beta > 0: the squared energy condition also
    admits roots with beta = -2 eps (n + index + 1), which do not decay.
    ``strict_index`` is the stricter requirement index > 0.
    """

    energy: float
    residual: float
    index: float
    eps_positive: bool
    index_real: bool
    normalizable: bool
    sign_consistent: bool
    strict_index: bool

    @property
    def index_nonnegative(self) -> bool:
        return self.index_real and self.index >= 0

    @property
    def bound(self) -> bool:
        return self.eps_positive and self.index_real and self.normalizable and self.sign_consistent

    @property
    def reason(self) -> str:
        if not self.eps_positive:
            return "eps_nonpositive"
        if not self.index_real:
            return "complex_index"
        if not self.normalizable:
            return "non_normalizable"
        if not self.sign_consistent:
            return "beta_nonpositive"
        return ""


@dataclass(frozen=True)
class EnergySolution:
    """Particle/antiparticle root pair of one energy condition."""

    E_particle: float | None
    E_antiparticle: float | None
    residuals: tuple[float, ...] = ()
    validity: tuple[RootInfo, ...] = ()
    B_nk: float | None = None
    degenerate: bool = False
    mode: SymmetryMode | None = None
    qn: QuantumNumbers | None = None

    @property
    def roots(self) -> tuple[float, ...]:
        return tuple(e for e in (self.E_particle, self.E_antiparticle) if e is not None)

    @property
    def bound_roots(self) -> tuple[float, ...]:
        return tuple(info.energy for info in self.validity if info.bound)

    @property
    def bound_energy(self) -> float | None:
        """The unique bound root, preferring the particle root if both qualify."""
        bound = self.bound_roots
        return bound[0] if bound else None

    def as_tuple(self) -> tuple[float | None, float | None]:
        return self.E_particle, self.E_antiparticle


def _lhs_rhs(nat: PhysicalParams, qn: QuantumNumbers, mode: SymmetryMode, e: float) -> tuple[float, float]:
    A, b, q = nat.A, nat.b, nat.q
    if mode is SymmetryMode.SPIN:
        lhs = 1.0 - e * e - A * (1.0 - e)
        num = q * (1.0 + e - A) + b * (0.5 * A - 1.0)
    else:
        lhs = 1.0 - e * e + A * (1.0 + e)
        num = q * (1.0 - e + A) + b * (1.0 + 0.5 * A)
    denom = qn.n + effective_index(nat, qn.kappa, mode) + 1.0
    return lhs, (num / denom) ** 2


def energy_residual(params: PhysicalParams, qn: QuantumNumbers, mode: SymmetryMode | str, E: float) -> float:
    """LHS - RHS of the energy condition at ``E`` (units m0^2 c^4)."""
    mode = SymmetryMode.parse(mode)
    lhs, rhs = _lhs_rhs(params.natural(), qn, mode, E / params.m0)
    return lhs - rhs


def _quadratic_roots(a2: float, a1: float, a0: float) -> tuple[list[float], bool, float]:
    """Real roots of a2 x^2 + a1 x + a0, largest first, avoiding cancellation."""
    disc = a1 * a1 - 4.0 * a2 * a0
    scale = max(a1 * a1, abs(4.0 * a2 * a0), 1e-300)
    if abs(disc) < DEGENERATE_DISC * scale:
        return [-a1 / (2.0 * a2)], True, disc
    if disc < 0:
        raise NoRealSolution(f"energy condition has complex roots (discriminant {disc:.6g})", disc)
    sq = math.sqrt(disc)
    big = -0.5 * (a1 + math.copysign(sq, a1))
    if big == 0.0:
        roots = [0.0, 0.0]
    else:
        roots = [big / a2, a0 / big]
    roots.sort(reverse=True)
    return roots, False, disc


def _root_info(params: PhysicalParams, qn: QuantumNumbers, mode: SymmetryMode, E: float) -> RootInfo:
    rc = reduced_coefficients(params, qn, mode, E)
    denom = qn.n + rc.index + 1.0
    return RootInfo(
        energy=E,
        residual=energy_residual(params, qn, mode, E),
        index=rc.index,
        eps_positive=rc.eps2 > EPS2_FLOOR * (params.m0 / params.hbar_c) ** 2,
        index_real=rc.index_real,
        normalizable=rc.index_real and rc.index > -0.5 and denom > 0,
        sign_consistent=rc.beta > 0,
        strict_index=rc.index_real and rc.index > 0,
    )


def _assemble(params, qn, mode, energies, degenerate, denom) -> EnergySolution:
    infos = tuple(_root_info(params, qn, mode, e) for e in energies)
    for info in infos:
        if info.bound and not info.index_nonnegative:
            warnings.warn(
                f"bound root E={info.energy:.12g} has a negative index; normalizable but outside index > 0",
                RuntimeWarning,
                stacklevel=3,
            )
    if degenerate:
        ep = ea = energies[0]
    else:
        ep, ea = energies
    return EnergySolution(
        E_particle=ep,
        E_antiparticle=ea,
        residuals=tuple(i.residual for i in infos),
        validity=infos,
        B_nk=denom,
        degenerate=degenerate,
        mode=mode,
        qn=qn,
    )


def _index_or_raise(nat: PhysicalParams, qn: QuantumNumbers, mode: SymmetryMode) -> float:
    index = effective_index(nat, qn.kappa, mode)
    if math.isnan(index):
        raise ComplexIndexError(
            f"complex effective index for kappa={qn.kappa}, b={nat.b}, q={nat.q} ({mode.value})"
        )
    return index


def solve_energy(params: PhysicalParams, qn: QuantumNumbers, mode: SymmetryMode | str) -> EnergySolution:
    """Both roots of the spin or pseudospin energy condition.

    The condition eps^2 = [beta / (2 (n + index + 1))]^2 is multiplied out to
    a2 E^2 + a1 E + a0 = 0 (natural units) and solved in closed form.
    """
    mode = SymmetryMode.parse(mode)
    nat = params.natural()
    A, b, q = nat.A, nat.b, nat.q
    D = qn.n + _index_or_raise(nat, qn, mode) + 1.0
    D2 = D * D
    if mode is SymmetryMode.SPIN:
        # LHS = -E^2 + A E + (1 - A); numerator = q E + s0
        s1, s0, c0 = q, q * (1.0 - A) + b * (0.5 * A - 1.0), 1.0 - A
    else:
        # LHS = -E^2 + A E + (1 + A); numerator = -q E + s0
        s1, s0, c0 = -q, q * (1.0 + A) + b * (1.0 + 0.5 * A), 1.0 + A
    a2 = -(D2 + s1 * s1)
    a1 = A * D2 - 2.0 * s0 * s1
    a0 = c0 * D2 - s0 * s0
    roots, degenerate, _ = _quadratic_roots(a2, a1, a0)
    energies = [e * params.m0 for e in roots]
    return _assemble(params, qn, mode, energies, degenerate, D)


def coulomb_ratio(N: float, q: float) -> float:
    """(N^2 - q^2) / (N^2 + q^2)."""
    return (N * N - q * q) / (N * N + q * q)


def energy_A0_spin(params: PhysicalParams, qn: QuantumNumbers) -> EnergySolution:
    """Spin spectrum at A = 0 from the explicit particle/antiparticle formulas."""
    nat = params.natural()
    if nat.A != 0:
        raise PreconditionError("energy_A0_spin requires A = 0")
    b, q = nat.b, nat.q
    B = qn.n + _index_or_raise(nat, qn, SymmetryMode.SPIN) + 1.0
    inner = B * B - b * (b - 2.0 * q)
    if inner < 0:
        raise NoRealSolution("B^2 - b(b - 2q) < 0", inner)
    root = B * math.sqrt(inner)
    denom = q * q + B * B
    ep = (q * (b - q) + root) / denom
    ea = (q * (b - q) - root) / denom
    return _assemble(params, qn, SymmetryMode.SPIN, [ep * params.m0, ea * params.m0], False, B)


def energy_constant_mass(params: PhysicalParams, qn: QuantumNumbers, mode: SymmetryMode | str) -> EnergySolution:
    """b = 0, A = 0 closed forms.

    Spin: (E_p, E_a) = (R, -1) with R = (N^2 - q^2)/(N^2 + q^2) and
    N = n + |kappa + 1/2| + 1/2.  Pseudospin: the condition maps onto the spin
    one with E -> -E, so the pair is (1, -R) with N = n + |kappa - 1/2| + 1/2.
    """
    mode = SymmetryMode.parse(mode)
    nat = params.natural()
    if nat.b != 0 or nat.A != 0:
        raise PreconditionError("energy_constant_mass requires b = 0 and A = 0")
    q = nat.q
    if mode is SymmetryMode.SPIN:
        N = qn.n + abs(qn.kappa + 0.5) + 0.5
        pair = [coulomb_ratio(N, q), -1.0]
    else:
        N = qn.n + abs(qn.kappa - 0.5) + 0.5
        pair = [1.0, -coulomb_ratio(N, q)]
    degenerate = pair[0] == pair[1]
    energies = [pair[0] * params.m0] if degenerate else [e * params.m0 for e in pair]
    return _assemble(params, qn, mode, energies, degenerate, N)


def duality_spectra(params: PhysicalParams, qn: QuantumNumbers) -> tuple[EnergySolution, EnergySolution]:
    """The two spectra tied together at q = b/2.

    The first is the variable-mass spin spectrum, (1, -R); the second is the
    constant-mass spin spectrum, (R, -1), with R = (N^2 - q^2)/(N^2 + q^2) and
    N = n + |kappa + 1/2| + 1/2.
    """
    nat = params.natural()
    if not math.isclose(nat.q, 0.5 * nat.b, rel_tol=1e-12, abs_tol=1e-15):
        raise PreconditionError(f"duality requires q = b/2 (q={nat.q}, b={nat.b})")
    N = qn.n + abs(qn.kappa + 0.5) + 0.5
    R = coulomb_ratio(N, nat.q)
    m0 = params.m0
    first = _assemble(params, qn, SymmetryMode.SPIN, [m0, -R * m0], False, N)
    constant = params.with_(b=0.0)
    second = _assemble(constant, qn, SymmetryMode.SPIN, [R * m0, -m0], False, N)
    return first, second


def s_wave_energy(params: PhysicalParams, n: int, branch: int) -> EnergySolution:
    """kappa = -1 (spin, l = 0) or kappa = +1 (pseudospin, l~ = 0) spectra.

    Built from the s-wave forms of the two conditions, whose denominator is
    2n + 1 + sqrt(1 + 4 b (b -+ 2q)).
    """
    if branch not in (-1, 1):
        raise PreconditionError("s-wave branch must be kappa = -1 or kappa = +1")
    nat = params.natural()
    A, b, q = nat.A, nat.b, nat.q
    if branch == -1:
        mode = SymmetryMode.SPIN
        radicand = 1.0 + 4.0 * b * (b - 2.0 * q)
    else:
        mode = SymmetryMode.PSEUDOSPIN
        radicand = 1.0 + 4.0 * b * (b + 2.0 * q)
    if radicand < 0:
        raise ComplexIndexError("complex s-wave index")
    D = 2 * n + 1 + math.sqrt(radicand)
    D2 = D * D
    if branch == -1:
        # (1 - E^2 - A(1 - E)) D^2 = (2q E + 2q(1 - A) + b(A - 2))^2
        t1, t0, c0 = 2.0 * q, 2.0 * q * (1.0 - A) + b * (A - 2.0), 1.0 - A
    else:
        # (1 - E^2 + A(1 + E)) D^2 = (-2q E + 2q(1 + A) + b(A + 2))^2
        t1, t0, c0 = -2.0 * q, 2.0 * q * (1.0 + A) + b * (A + 2.0), 1.0 + A
    roots, degenerate, _ = _quadratic_roots(-(D2 + t1 * t1), A * D2 - 2.0 * t0 * t1, c0 * D2 - t0 * t0)
    qn = QuantumNumbers(n=n, kappa=branch)
    return _assemble(params, qn, mode, [e * params.m0 for e in roots], degenerate, 0.5 * D)


def nonrelativistic_energy(params: PhysicalParams, n: int, l: int) -> float:
    """Schroedinger-limit level -(mu/2) (q - b)^2 / (n + 1/2 + sqrt((l+1/2)^2 + b(b-2q)))^2.

    mu = m0; the result carries the energy unit of ``params``.
    """
    if n < 0 or l < 0:
        raise PreconditionError("n and l must be non-negative")
    b, q = params.b, params.q
    radicand = (l + 0.5) ** 2 + b * (b - 2.0 * q)
    if radicand < 0:
        raise ComplexIndexError("complex non-relativistic index")
    D = n + 0.5 + math.sqrt(radicand)
    return -0.5 * params.m0 * (q - b) ** 2 / (D * D)
