import math
import warnings

import numpy as np
import pytest

from pdm_dirac import PhysicalParams, QuantumNumbers, SymmetryMode, solve_energy


def bound_root(params, qn, mode):
    """Bound energy of the closed-form condition, or None (quiet on index warnings)."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        try:
            return solve_energy(params, qn, mode).bound_energy
        except Exception:
            return None


def sweep_cells(modes=("spin", "pseudospin")):
    """The verification grid: n <= 3, kappa in {+-1, +-2}, |q| in {0.5, 1}, b in {0, 0.1, 0.3}, A in {0, 0.2}."""
    cells = []
    for mode in modes:
        qs = (0.5, 1.0) if mode == "spin" else (-0.5, -1.0)
        for n in range(4):
            for kappa in (-2, -1, 1, 2):
                for q in qs:
                    for b in (0.0, 0.1, 0.3):
                        for A in (0.0, 0.2):
                            cells.append((SymmetryMode(mode), n, kappa, q, b, A))
    return cells


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
