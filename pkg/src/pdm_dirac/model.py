"""Physical parameters, quantum numbers and the reduced radial coefficients.

Units
-----
Every quantity can be given either in natural units (hbar = c = 1 and
energies measured in the rest energy m0 c^2, the default) or in physical
units (m0 c^2 in MeV, hbar c in MeV fm).  The energy condition and the
oracle work internally in natural units; :meth:`PhysicalParams.natural`
performs the conversion.

Potential conventions
---------------------
The Coulomb-like field is ``V(r) = -hbar_c q / r`` and the mass function is
``m(r) c^2 = m0 c^2 + hbar_c b / r``.  Under spin symmetry the difference
potential is the constant ``A`` and the sum potential is ``2 V(r)``; under
pseudospin symmetry the roles are exchanged.  These are the choices for
which the coefficients returned by :func:`reduced_coefficients` follow
exactly from the Dirac factors ``U-(r) U+(r)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import Enum

from .errors import DomainError

__all__ = [
    "PhysicalParams",
    "QuantumNumbers",
    "SymmetryMode",
    "ReducedCoefficients",
    "DiracFactors",
    "map_kappa",
    "mass_at",
    "coulomb_potential",
    "potentials_at",
    "dirac_factors",
    "reduced_coefficients",
    "pseudospin_parameter_map",
    "effective_index",
]


class SymmetryMode(str, Enum):
    SPIN = "spin"
    PSEUDOSPIN = "pseudospin"

    @classmethod
    def parse(cls, value: "SymmetryMode | str") -> "SymmetryMode":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError as exc:
            raise DomainError(f"unknown symmetry mode: {value!r}") from exc


@dataclass(frozen=True)
class PhysicalParams:
    """Couplings and unit convention of one Dirac problem.

    Parameters
    ----------
    m0:
        Rest energy m0 c^2 (1 in natural units, MeV in physical units).
    b:
        Dimensionless strength of the 1/r mass perturbation.
    q:
        Dimensionless Coulomb coupling.
    A:
        The constant difference (spin) or sum (pseudospin) potential, in the
        same energy unit as ``m0``.
    hbar_c:
        Conversion constant (1 in natural units, MeV fm in physical units).
    """

    m0: float = 1.0
    b: float = 0.0
    q: float = 0.0
    A: float = 0.0
    hbar_c: float = 1.0

    def __post_init__(self):
        for name in ("m0", "b", "q", "A", "hbar_c"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise DomainError(f"{name} must be finite, got {value!r}")
        if self.m0 <= 0:
            raise DomainError("m0 must be positive")
        if self.hbar_c <= 0:
            raise DomainError("hbar_c must be positive")

    @property
    def lambda0(self) -> float:
        """Compton-like wavelength hbar/(m0 c), in length units."""
        return self.hbar_c / self.m0

    @property
    def m1(self) -> float:
        """Perturbed mass m1 = m0 lambda0 b, expressed as m1 c^2 (energy x length)."""
        return self.m0 * self.lambda0 * self.b

    @property
    def is_natural(self) -> bool:
        return self.m0 == 1.0 and self.hbar_c == 1.0

    def natural(self) -> "PhysicalParams":
        """Same physics with hbar = c = m0 = 1."""
        if self.is_natural:
            return self
        return PhysicalParams(m0=1.0, b=self.b, q=self.q, A=self.A / self.m0, hbar_c=1.0)

    def to_physical(self, m0: float, hbar_c: float) -> "PhysicalParams":
        """Express natural-unit parameters with the given rest energy and hbar c."""
        nat = self.natural()
        return PhysicalParams(m0=m0, b=nat.b, q=nat.q, A=nat.A * m0, hbar_c=hbar_c)

    @property
    def length_unit(self) -> float:
        """Length corresponding to r = 1 in natural units."""
        return self.hbar_c / self.m0

    def with_(self, **changes) -> "PhysicalParams":
        return replace(self, **changes)


@dataclass(frozen=True)
class QuantumNumbers:
    """Radial quantum number ``n`` and spin-orbit number ``kappa``.

    ``l``, ``l_tilde`` and ``j`` are derived on construction.
    """

    n: int
    kappa: int
    l: int = field(init=False)
    l_tilde: int = field(init=False)
    j: float = field(init=False)

    def __post_init__(self):
        if int(self.kappa) != self.kappa or self.kappa == 0:
            raise DomainError(f"kappa must be a nonzero integer, got {self.kappa!r}")
        if int(self.n) != self.n or self.n < 0:
            raise DomainError(f"n must be a non-negative integer, got {self.n!r}")
        kappa = int(self.kappa)
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "kappa", kappa)
        # l = |kappa + 1/2| - 1/2 and l~ = |kappa - 1/2| - 1/2, in integer form
        object.__setattr__(self, "l", kappa if kappa > 0 else -kappa - 1)
        object.__setattr__(self, "l_tilde", kappa - 1 if kappa > 0 else -kappa)
        object.__setattr__(self, "j", abs(kappa) - 0.5)


def map_kappa(kappa: int, n: int = 0) -> QuantumNumbers:
    """Orbital, pseudo-orbital and total angular momentum for ``kappa``."""
    return QuantumNumbers(n=n, kappa=kappa)


def mass_at(params: PhysicalParams, r: float) -> float:
    """m(r) c^2 = m0 c^2 + hbar_c b / r."""
    if not r > 0:
        raise DomainError("the mass function is singular at r <= 0")
    return params.m0 + params.hbar_c * params.b / r


def coulomb_potential(params: PhysicalParams, r: float) -> float:
    """V(r) = -hbar_c q / r."""
    if not r > 0:
        raise DomainError("the Coulomb potential is singular at r <= 0")
    return -params.hbar_c * params.q / r


def potentials_at(params: PhysicalParams, mode: SymmetryMode | str, r: float) -> tuple[float, float]:
    """Return ``(Sigma(r), Delta(r))`` for the given symmetry mode."""
    mode = SymmetryMode.parse(mode)
    v2 = 2.0 * coulomb_potential(params, r)
    if mode is SymmetryMode.SPIN:
        return v2, params.A
    return params.A, v2


@dataclass(frozen=True)
class DiracFactors:
    """``U-(r) = um0 + um1/r`` and ``U+(r) = up0 + up1/r`` in natural units.

    ``U-`` multiplies G in the equation for dF/dr and ``U+`` multiplies F in the
    equation for dG/dr.
    """

    um0: float
    um1: float
    up0: float
    up1: float

    def u_minus(self, r):
        return self.um0 + self.um1 / r

    def u_plus(self, r):
        return self.up0 + self.up1 / r

    @property
    def eps2(self) -> float:
        """Asymptotic value of U-(r) U+(r)."""
        return self.um0 * self.up0


def dirac_factors(params: PhysicalParams, mode: SymmetryMode | str, E: float) -> DiracFactors:
    """Coefficients of U-(r) = m c^2 + E - Delta and U+(r) = m c^2 - E + Sigma.

    ``E`` is in the energy unit of ``params``; the result is in natural units.
    """
    mode = SymmetryMode.parse(mode)
    nat = params.natural()
    e = E / params.m0
    if mode is SymmetryMode.SPIN:
        return DiracFactors(um0=1.0 + e - nat.A, um1=nat.b, up0=1.0 - e, up1=nat.b - 2.0 * nat.q)
    return DiracFactors(um0=1.0 + e, um1=nat.b + 2.0 * nat.q, up0=1.0 - e + nat.A, up1=nat.b)


def effective_index(params: PhysicalParams, kappa: int, mode: SymmetryMode | str) -> float:
    """delta (spin) or eta (pseudospin); NaN when the square root is complex."""
    mode = SymmetryMode.parse(mode)
    b, q = params.b, params.q
    if mode is SymmetryMode.SPIN:
        radicand = (kappa + 0.5) ** 2 + b * (b - 2.0 * q)
    else:
        radicand = (kappa - 0.5) ** 2 + b * (b + 2.0 * q)
    if radicand < 0:
        return math.nan
    return math.sqrt(radicand) - 0.5


@dataclass(frozen=True)
class ReducedCoefficients:
    """Coefficients of F'' + (-eps^2 r^2 + beta r - gamma)/r^2 F = 0.

    ``eps2`` is kept separately so that scans can see its sign; ``epsilon`` is
    NaN whenever ``eps2 <= 0`` and ``index`` is NaN when it would be complex.
    """

    eps2: float
    beta: float
    gamma: float
    index: float
    mode: SymmetryMode

    @property
    def epsilon(self) -> float:
        return math.sqrt(self.eps2) if self.eps2 > 0 else math.nan

    @property
    def eps_real(self) -> bool:
        return self.eps2 > 0

    @property
    def index_real(self) -> bool:
        return not math.isnan(self.index)

    @property
    def admissible(self) -> bool:
        """Decaying solution with a square-integrable origin behaviour."""
        return self.eps_real and self.index_real and self.index > -0.5


def reduced_coefficients(
    params: PhysicalParams, qn: QuantumNumbers, mode: SymmetryMode | str, E: float
) -> ReducedCoefficients:
    """epsilon^2, beta, gamma and the effective index at trial energy ``E``.

    Lengths follow the unit convention of ``params`` (epsilon and beta are
    inverse lengths).  Invalid regimes are flagged, never raised.
    """
    mode = SymmetryMode.parse(mode)
    m0, hc, A, b, q = params.m0, params.hbar_c, params.A, params.b, params.q
    k = qn.kappa
    if mode is SymmetryMode.SPIN:
        eps2 = (m0 * m0 - E * E - A * (m0 - E)) / hc**2
        beta = (2.0 * q * (m0 + E - A) + b * (A - 2.0 * m0)) / hc
        gamma = b * (b - 2.0 * q) + k * (k + 1)
    else:
        eps2 = (m0 * m0 - E * E + A * (m0 + E)) / hc**2
        beta = -(2.0 * q * (m0 - E + A) + b * (2.0 * m0 + A)) / hc
        gamma = b * (b + 2.0 * q) + k * (k - 1)
    return ReducedCoefficients(eps2, beta, gamma, effective_index(params, k, mode), mode)


def pseudospin_parameter_map(
    params: PhysicalParams, E: float, kappa: int | None = None
) -> tuple[PhysicalParams, float, int | None]:
    """Map spin-sector inputs to pseudospin-sector inputs (and back).

    q -> -q, A -> -A, E -> -E and kappa -> -kappa; the upper and lower
    components exchange roles.  The map is an involution.
    """
    mapped = replace(params, q=-params.q, A=-params.A)
    return mapped, -E, (None if kappa is None else -kappa)
