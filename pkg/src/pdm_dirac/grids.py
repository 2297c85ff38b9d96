"""Radial grids shared by the wavefunction sampler and the shooting oracle."""

from __future__ import annotations

import numpy as np

__all__ = ["hybrid_nodes", "hybrid_grid"]


def hybrid_nodes(y):
    """Solve rho + ln(rho) = y for rho > 0, elementwise.

    Newton iteration on t = ln(rho); f(t) = e^t + t - y is increasing and
    convex, so the iteration converges monotonically after the first step.
    """
    y = np.asarray(y, dtype=float)
    t = np.where(y < 1.0, y, np.log(np.maximum(y, 1.0)))
    for _ in range(60):
        et = np.exp(t)
        step = (et + t - y) / (et + 1.0)
        t = t - step
        if np.all(np.abs(step) <= 1e-15 * np.maximum(1.0, np.abs(t))):
            break
    return np.exp(t)


def hybrid_grid(rho_min: float, rho_max: float, num: int) -> np.ndarray:
    """Points uniform in y = ln(rho) + rho.

    The spacing is logarithmic for rho << 1 and linear for rho >> 1, so both
    the power-law origin and the exponential tail are resolved.  The end
    points are returned exactly.
    """
    if not 0 < rho_min < rho_max:
        raise ValueError("need 0 < rho_min < rho_max")
    if num < 2:
        raise ValueError("need at least two points")
    y = np.linspace(np.log(rho_min) + rho_min, np.log(rho_max) + rho_max, num)
    rho = hybrid_nodes(y)
    rho[0], rho[-1] = rho_min, rho_max
    return rho
