"""Bound states of the Dirac equation with a Coulomb-like field and a 1/r mass.

The package solves the spin- and pseudospin-symmetric radial problems in
closed form, evaluates normalized spinor components, and checks both against
an independent shooting-method integration of the radial equations.
"""

from .errors import (
    AmbiguousBracket,
    BracketError,
    BranchError,
    ComplexIndexError,
    DiracError,
    DomainError,
    NoRealSolution,
    PreconditionError,
    SingularDenominator,
    SingularPotential,
    StiffnessError,
)
from .model import (
    PhysicalParams,
    QuantumNumbers,
    ReducedCoefficients,
    SymmetryMode,
    dirac_factors,
    effective_index,
    map_kappa,
    mass_at,
    pseudospin_parameter_map,
    reduced_coefficients,
)
from .spectrum import (
    EnergySolution,
    duality_spectra,
    energy_A0_spin,
    energy_constant_mass,
    nonrelativistic_energy,
    s_wave_energy,
    solve_energy,
)
from .wavefunctions import (
    RadialFunction,
    companion_component,
    laguerre,
    lower_spinor,
    nonrelativistic_wavefunction,
    normalization_constant,
    upper_spinor,
)
from .oracle import (
    OdeVariant,
    ShootingConfig,
    VerificationReport,
    approximation_audit,
    find_eigenvalue,
    integrate,
    residual_profile,
)

__version__ = "0.1.0"
