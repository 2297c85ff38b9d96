"""Orthogonal polynomials evaluated by their three-term recurrences."""

from __future__ import annotations

import numpy as np

__all__ = ["laguerre", "laguerre_derivative", "jacobi"]


def laguerre(n: int, alpha: float, x):
    """Generalized Laguerre polynomial L_n^alpha(x).

    Evaluated with the ascending recurrence
    ``(k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}``,
    which is stable for x >= 0 and alpha > -1.  Scalars in, scalar out.
    """
    if n < 0:
        raise ValueError("degree must be non-negative")
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if n == 0:
        return prev if prev.ndim else float(prev)
    cur = 1.0 + alpha - x
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1 + alpha - x) * cur - (k + alpha) * prev) / (k + 1)
    return cur if cur.ndim else float(cur)


def laguerre_derivative(n: int, alpha: float, x, order: int = 1):
    """d^m/dx^m L_n^alpha(x) = (-1)^m L_{n-m}^{alpha+m}(x); zero once m > n."""
    if order > n:
        x = np.asarray(x, dtype=float)
        z = np.zeros_like(x)
        return z if z.ndim else 0.0
    sign = -1.0 if order % 2 else 1.0
    return sign * laguerre(n - order, alpha + order, x)


def jacobi(n: int, alpha: float, beta: float, x):
    """Jacobi polynomial P_n^(alpha, beta)(x) by the standard recurrence."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if n == 0:
        return prev if prev.ndim else float(prev)
    ab = alpha + beta
    cur = (alpha + 1.0) + 0.5 * (ab + 2.0) * (x - 1.0)
    for k in range(1, n):
        c = 2 * k + ab
        a1 = 2.0 * (k + 1) * (k + ab + 1) * c
        a2 = (c + 1) * (alpha * alpha - beta * beta)
        a3 = (c + 1) * (c + 2) * c
        a4 = 2.0 * (k + alpha) * (k + beta) * (c + 2)
        prev, cur = cur, ((a2 + a3 * x) * cur - a4 * prev) / a1
    return cur if cur.ndim else float(cur)
