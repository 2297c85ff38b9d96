"""Parametric Nikiforov-Uvarov machinery.

A problem is the hypergeometric-type equation

    [r (c3 - c4 r)]^2 psi'' + r (c3 - c4 r)(c1 - c2 r) psi'
        + (-xi1 r^2 + xi2 r - xi3) psi = 0,

i.e. tau~(r) = c1 - c2 r, sigma(r) = r (c3 - c4 r) and
sigma~(r) = -xi1 r^2 + xi2 r - xi3.  Everything here is a closed-form
function of the seven coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BranchError, DomainError
from .model import ReducedCoefficients
from .special import jacobi, laguerre

__all__ = [
    "NUProblem",
    "NUDerived",
    "NUBranch",
    "NUWavefunctionParts",
    "table1_problem",
    "problem_from_reduced",
    "derive_constants",
    "enumerate_branches",
    "select_branch",
    "quantization_residual",
    "nu_wavefunction_parts",
]


@dataclass(frozen=True)
class NUProblem:
    c1: float
    c2: float
    c3: float
    c4: float
    xi1: float
    xi2: float
    xi3: float

    def __post_init__(self):
        values = (self.c1, self.c2, self.c3, self.c4, self.xi1, self.xi2, self.xi3)
        if not all(math.isfinite(v) for v in values):
            raise DomainError("NU coefficients must be finite")
        if self.c3 == 0:
            raise DomainError("c3 must be nonzero")

    def sigma(self, r):
        return r * (self.c3 - self.c4 * r)

    def tau_tilde(self, r):
        return self.c1 - self.c2 * r

    def sigma_tilde(self, r):
        return -self.xi1 * r * r + self.xi2 * r - self.xi3


def table1_problem(eps: float, beta: float, gamma: float) -> NUProblem:
    """Instantiation for F'' + (-eps^2 r^2 + beta r - gamma)/r^2 F = 0."""
    return NUProblem(c1=0.0, c2=0.0, c3=1.0, c4=0.0, xi1=eps * eps, xi2=beta, xi3=gamma)


def problem_from_reduced(coeffs: ReducedCoefficients) -> NUProblem:
    return NUProblem(c1=0.0, c2=0.0, c3=1.0, c4=0.0, xi1=coeffs.eps2, xi2=coeffs.beta, xi3=coeffs.gamma)


@dataclass(frozen=True)
class NUDerived:
    """Derived constants c5..c16 and the key polynomials.

    ``c12`` and ``c14`` are ``None`` when c4 = 0; the Laguerre limit then uses
    ``c15`` and ``c16`` instead.  Polynomials are stored as
    ``(constant, slope)`` pairs.
    """

    c5: float
    c6: float
    c7: float
    c8: float
    c9: float
    c10: float
    c11: float
    c12: float | None
    c13: float
    c14: float | None
    c15: float
    c16: float
    pi_poly: tuple[float, float]
    k: float
    tau_poly: tuple[float, float]
    tau_slope: float

    @property
    def laguerre_limit(self) -> bool:
        return self.c12 is None

    @property
    def bound_branch(self) -> bool:
        return self.tau_slope < 0


def derive_constants(p: NUProblem) -> NUDerived:
    c1, c2, c3, c4 = p.c1, p.c2, p.c3, p.c4
    c5 = 0.5 * (c3 - c1)
    c6 = 0.5 * (c2 - 2.0 * c4)
    c7 = c6 * c6 + p.xi1
    c8 = 2.0 * c5 * c6 - p.xi2
    c9 = c5 * c5 + p.xi3
    c10 = c4 * (c3 * c8 + c4 * c9) + c3 * c3 * c7
    if c9 < 0:
        raise BranchError(f"c9 = {c9!r} < 0: pi(r) is not real on this branch")
    if c10 < 0:
        raise BranchError(f"c10 = {c10!r} < 0: pi(r) is not real on this branch")
    s9, s10 = math.sqrt(c9), math.sqrt(c10)

    c11 = 2.0 * s9 / c3
    c13 = (c5 + s9) / c3
    c15 = 2.0 * s10 / c3
    if c4 != 0:
        c12 = 2.0 * s10 / (c3 * c4)
        c14 = (s10 - c4 * c5 - c3 * c6) / (c3 * c4)
    else:
        c12 = c14 = None

    pi_poly = (c5 + s9, -(c4 * s9 + s10 - c3 * c6) / c3)
    k = -(c3 * c8 + 2.0 * c4 * c9 + 2.0 * math.sqrt(c9 * c10)) / c3**2
    tau_slope = -2.0 * (c3 * c4 + c4 * s9 + s10) / c3
    tau_poly = (c3 + 2.0 * s9, tau_slope)
    return NUDerived(
        c5=c5, c6=c6, c7=c7, c8=c8, c9=c9, c10=c10, c11=c11, c12=c12, c13=c13, c14=c14,
        c15=c15, c16=0.5 * c15, pi_poly=pi_poly, k=k, tau_poly=tau_poly, tau_slope=tau_slope,
    )


@dataclass(frozen=True)
class NUBranch:
    """One of the four (k, pi) candidates of the NU construction."""

    k: float
    pi_poly: tuple[float, float]
    tau_poly: tuple[float, float]
    origin_exponent: float

    @property
    def tau_slope(self) -> float:
        return self.tau_poly[1]


def enumerate_branches(p: NUProblem) -> list[NUBranch]:
    """All four candidates pi(r) = (sigma' - tau~)/2 +- sqrt(...).

    The radicand ``(c7 - k c4) r^2 + (c8 + k c3) r + c9`` must be a perfect
    square, which fixes two values of k; each gives two signs.
    """
    d = derive_constants(p)
    c3, c4 = p.c3, p.c4
    s9 = math.sqrt(d.c9)
    root = 2.0 * math.sqrt(d.c9 * d.c10)
    branches = []
    for k in (-(c3 * d.c8 + 2.0 * c4 * d.c9 - root) / c3**2,
              -(c3 * d.c8 + 2.0 * c4 * d.c9 + root) / c3**2):
        if s9 > 0:
            t = (d.c8 + k * c3) / (2.0 * s9)
        else:
            t = math.sqrt(max(d.c7 - k * c4, 0.0))
        for sign in (1.0, -1.0):
            pi0 = d.c5 + sign * s9
            pi1 = d.c6 + sign * t
            # tau = tau~ + 2 pi
            tau = (p.c1 + 2.0 * pi0, -p.c2 + 2.0 * pi1)
            branches.append(NUBranch(k=k, pi_poly=(pi0, pi1), tau_poly=tau, origin_exponent=pi0 / c3))
    return branches


def select_branch(p: NUProblem) -> NUBranch:
    """The bound-state branch: tau' < 0 and phi(r) regular at the origin.

    When several candidates survive (possible for -1/4 < xi3 - ... < 0) the one
    with the largest origin exponent is taken.
    """
    ok = [br for br in enumerate_branches(p) if br.tau_slope < 0 and br.origin_exponent > 0]
    if not ok:
        raise BranchError("no branch with tau' < 0 and a regular origin")
    ok.sort(key=lambda br: br.origin_exponent, reverse=True)
    if len(ok) > 1 and math.isclose(ok[0].origin_exponent, ok[1].origin_exponent, rel_tol=1e-14, abs_tol=0.0) \
            and not math.isclose(ok[0].k, ok[1].k, rel_tol=1e-14):
        raise BranchError("ambiguous NU branch selection")
    return ok[0]


def quantization_residual(p: NUProblem, n: int) -> float:
    """Left-hand side of the parametric energy equation; zero at an eigenvalue."""
    d = derive_constants(p)
    c2, c3, c4 = p.c2, p.c3, p.c4
    s9, s10 = math.sqrt(d.c9), math.sqrt(d.c10)
    return (
        c2 * n
        - (2 * n + 1) * d.c6
        + (2 * n + 1) * (s10 + c4 * s9) / c3
        + n * (n - 1) * c4
        + (c3 * d.c8 + 2.0 * c4 * d.c9 + 2.0 * math.sqrt(d.c9 * d.c10)) / c3**2
    )


@dataclass(frozen=True)
class NUWavefunctionParts:
    """Weight rho(r), factor phi(r) and the polynomial y_n(r), unnormalized."""

    problem: NUProblem
    derived: NUDerived
    n: int

    @property
    def family(self) -> str:
        return "laguerre" if self.derived.laguerre_limit else "jacobi"

    def rho(self, r):
        p, d = self.problem, self.derived
        r = np.asarray(r, dtype=float)
        if d.laguerre_limit:
            return r**d.c11 * np.exp(-d.c15 * r / p.c3)
        return r**d.c11 * (p.c3 - p.c4 * r) ** d.c12

    def phi(self, r):
        p, d = self.problem, self.derived
        r = np.asarray(r, dtype=float)
        if d.laguerre_limit:
            return r**d.c13 * np.exp(-(math.sqrt(d.c10) - p.c3 * d.c6) * r / p.c3**2)
        return r**d.c13 * (p.c3 - p.c4 * r) ** d.c14

    def y(self, r):
        p, d = self.problem, self.derived
        r = np.asarray(r, dtype=float)
        if d.laguerre_limit:
            return laguerre(self.n, d.c11, d.c15 * r / p.c3)
        return jacobi(self.n, d.c11, d.c12, 1.0 - 2.0 * p.c4 * r / p.c3)

    def psi(self, r):
        return self.phi(r) * self.y(r)


def nu_wavefunction_parts(p: NUProblem, n: int = 0) -> NUWavefunctionParts:
    """Closed-form descriptors of rho, phi and y_n for problem ``p``.

    For c4 = 0 and c3 = 1 this is the Laguerre limit phi = r^c13 e^(-c16 r),
    y_n = L_n^c11(c15 r).  Other c3 values carry the 1/c3 rescaling of r.
    """
    if n < 0:
        raise DomainError("n must be non-negative")
    return NUWavefunctionParts(problem=p, derived=derive_constants(p), n=n)
