import math
import warnings

import numpy as np
import pytest

from pdm_dirac import (
    OdeVariant,
    PhysicalParams,
    PreconditionError,
    QuantumNumbers,
    SingularDenominator,
    companion_component,
    dirac_factors,
    lower_spinor,
    nonrelativistic_wavefunction,
    normalization_constant,
    pseudospin_parameter_map,
    residual_profile,
    upper_spinor,
)
from pdm_dirac.wavefunctions import Component, LaguerreState, count_nodes, dominant_component

from conftest import bound_root

# mpmath reference for sqrt(n! (2 eps)^(2s+3) / (2 (n+s+1) Gamma(n+2s+2)))
NORM_N3_S15_EPS08 = 0.04261121938311572557

CASES = [
    ("spin", 0, -1, 0.5, 0.0, 0.0),
    ("spin", 2, 1, 1.0, 0.1, 0.2),
    ("spin", 3, -2, 0.5, 0.3, 0.0),
    ("spin", 1, 2, 1.0, 0.3, 0.2),
    ("pseudospin", 0, 1, -0.5, 0.0, 0.2),
    ("pseudospin", 2, -1, -1.0, 0.1, 0.0),
    ("pseudospin", 3, 2, -1.0, 0.3, 0.2),
]


def state_for(mode, n, kappa, q, b, A):
    p = PhysicalParams(b=b, q=q, A=A)
    qn = QuantumNumbers(n, kappa)
    E = bound_root(p, qn, mode)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        return p, qn, E, dominant_component(p, qn, E, mode)


def test_normalization_constant_reference():
    assert normalization_constant(0.8, 1.5, 3) == pytest.approx(NORM_N3_S15_EPS08, rel=1e-14)
    with pytest.raises(PreconditionError):
        normalization_constant(0.8, -0.6, 0)


def test_normalization_survives_large_arguments():
    value = normalization_constant(0.01, 40.0, 60)
    assert math.isfinite(value) and value > 0


@pytest.mark.parametrize("case", CASES)
def test_dominant_component_properties(case):
    mode, n, *_ = case
    p, qn, E, f = state_for(*case)
    assert f.component is (Component.UPPER if mode == "spin" else Component.LOWER)
    assert abs(f.norm - 1.0) < 1e-10
    assert f.node_count() == n
    assert residual_profile(f, OdeVariant.reduced_for(mode), p, E) < 1e-8
    # decays on the outer edge and vanishes at the origin
    assert abs(f.values[-1]) < 1e-12 * np.max(np.abs(f.values))
    assert abs(f(1e-30 / f.eps)) < 1e-12 * np.max(np.abs(f.values))


@pytest.mark.parametrize("n", [0, 2, 5])
def test_quadrature_norm_agrees_with_direct_integration(n):
    from scipy import integrate

    st = LaguerreState(eps=0.6, index=1.3, n=n)
    direct = integrate.quad(lambda r: st.value(r) ** 2, 0, np.inf, limit=400, epsabs=1e-14)[0]
    assert st.norm_integral() == pytest.approx(1.0, abs=1e-13)
    assert direct == pytest.approx(1.0, abs=1e-9)


def test_companion_closes_dirac_system_at_constant_mass():
    p = PhysicalParams(q=0.7, A=0.2)
    qn = QuantumNumbers(1, -2)
    E = bound_root(p, qn, "spin")
    f = upper_spinor(p, qn, E)
    g = companion_component(f, p, E)
    assert g.component is Component.LOWER
    fac = dirac_factors(p, "spin", E)
    r = np.linspace(0.2, 20, 60)
    closure = g.derivative(r) - qn.kappa * g(r) / r - fac.u_plus(r) * f(r)
    assert np.max(np.abs(closure)) < 1e-12
    assert 0 < g.norm < 1


def test_companion_of_lower_component():
    p = PhysicalParams(q=-0.7, A=0.2)
    qn = QuantumNumbers(1, 2)
    E = bound_root(p, qn, "pseudospin")
    g = lower_spinor(p, qn, E)
    f = companion_component(g, p, E)
    assert f.component is Component.UPPER
    fac = dirac_factors(p, "pseudospin", E)
    r = np.linspace(0.2, 20, 60)
    closure = f.derivative(r) + qn.kappa * f(r) / r - fac.u_minus(r) * g(r)
    assert np.max(np.abs(closure)) < 1e-12


def test_companion_pole_is_reported():
    p = PhysicalParams(b=-0.1, q=0.7)
    qn = QuantumNumbers(0, -2)
    E = bound_root(p, qn, "spin")
    f = upper_spinor(p, qn, E)
    with pytest.raises(SingularDenominator) as info:
        companion_component(f, p, E)
    assert info.value.radius == pytest.approx(0.1 / (1 + E), rel=1e-12)


def test_pseudospin_map_on_wavefunctions():
    p = PhysicalParams(b=0.2, q=0.9, A=0.15)
    qn = QuantumNumbers(2, -2)
    E = bound_root(p, qn, "spin")
    f = upper_spinor(p, qn, E)
    mapped, E2, k2 = pseudospin_parameter_map(p, E, qn.kappa)
    g = lower_spinor(mapped, QuantumNumbers(2, k2), E2, grid=f.grid)
    np.testing.assert_allclose(g.values, f.values, rtol=0, atol=1e-12)


def test_non_eigenvalue_is_rejected():
    p = PhysicalParams(q=0.8)
    qn = QuantumNumbers(0, -1)
    with pytest.raises(PreconditionError):
        upper_spinor(p, qn, 0.5)
    with pytest.raises(PreconditionError):
        upper_spinor(p, qn, 1.2)
    with pytest.raises(PreconditionError):
        upper_spinor(p, qn, bound_root(p, qn, "spin"), grid=np.array([1.0, 0.5]))


@pytest.mark.parametrize("n, l", [(0, 0), (1, 1), (3, 2)])
def test_nonrelativistic_wavefunction(n, l):
    f = nonrelativistic_wavefunction(PhysicalParams(b=0.1, q=1.0), n, l)
    assert abs(f.norm - 1) < 1e-12
    assert f.node_count() == n
    assert f.energy < 0
    with pytest.raises(PreconditionError):
        nonrelativistic_wavefunction(PhysicalParams(b=0.5, q=0.3), n, l)


def test_count_nodes_ignores_noise():
    values = np.array([0.0, 1.0, 0.5, 1e-14, -1e-14, 0.3, -0.2, 0.0])
    assert count_nodes(values) == 1
    assert count_nodes(np.zeros(5)) == 0
