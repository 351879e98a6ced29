"""Squared Wigner d-matrix elements for large spins.

The transition probabilities are computed from the spectral decomposition of
the tridiagonal ``J_x`` matrix in the ``J_z`` basis,

    U(theta) = exp(-i theta J_x) = V diag(exp(-i theta m_k)) V^T,

and ``p[m', m] = |<m'|U(theta)|m>|**2``.  This is the x-axis rotation.  The
conventional Wigner d-matrix ``d^j_{m',m}(theta)`` is the y-axis rotation
``exp(-i theta J_y)``; the two differ by the diagonal phase conjugation
``exp(-i pi/2 J_z)``, so their squared magnitudes coincide entrywise.

No factorials are involved, so the method does not overflow for large ``j``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .spinnum import Spin

CLAMP_TOL = 1e-12
STABILITY_TOL = 1e-8

# Certified by tests/test_wigner.py over a 100-point theta grid.
_MAX_STABLE_TWICE_J = 400


class StabilityError(ArithmeticError):
    """The computed probabilities failed the row-sum check."""


@dataclass(frozen=True)
class DMatrixSq:
    """Matrix of ``|d^j_{m',m}(theta)|**2``; rows ``m'``, columns ``m``, both ascending."""

    spin: Spin
    theta: float
    p: np.ndarray


def jx_offdiagonal(spin: Spin) -> np.ndarray:
    """Off-diagonal of ``J_x`` in the ascending ``J_z`` basis.

    ``<m+1|J_x|m> = sqrt(j(j+1) - m(m+1)) / 2``.
    """
    tj = spin.twice_j
    twice_m = np.arange(-tj, tj, 2, dtype=float)
    # 4[j(j+1) - m(m+1)] = (2j)(2j+2) - (2m)(2m+2)
    return 0.25 * np.sqrt(tj * (tj + 2.0) - twice_m * (twice_m + 2.0))


@lru_cache(maxsize=32)
def jx_eigensystem(twice_j: int) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (the values of ``m``) and real orthogonal eigenvectors of ``J_x``."""
    spin = Spin(twice_j)
    w, v = eigh_tridiagonal(np.zeros(spin.dimension()), jx_offdiagonal(spin))
    # the spectrum of J_x is exactly {-j, ..., j}
    w = np.arange(-twice_j, twice_j + 1, 2) / 2.0
    w.flags.writeable = False
    v.flags.writeable = False
    return w, v


def rotation_sq(spin: Spin, thetas) -> np.ndarray:
    """``|exp(-i theta J_x)|**2`` for an array of angles; shape ``(len(thetas), d, d)``."""
    w, v = jx_eigensystem(spin.twice_j)
    thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
    # differences of eigenvalues are integers, so reduce the phase mod 2pi first
    phase = np.exp(-1j * np.outer(np.mod(thetas, 4 * np.pi), w))
    u = np.einsum("ak,tk,bk->tab", v, phase, v, optimize=True)
    return u.real ** 2 + u.imag ** 2


def _clamp(p: np.ndarray) -> np.ndarray:
    if p.min() < -CLAMP_TOL or p.max() > 1 + CLAMP_TOL:
        raise StabilityError(
            f"probabilities outside [0, 1]: min={p.min():.3e}, max={p.max():.3e}"
        )
    return np.clip(p, 0.0, 1.0)


def _check_stochastic(p: np.ndarray, tol: float, what: str) -> None:
    dev = max(np.abs(p.sum(axis=-1) - 1).max(), np.abs(p.sum(axis=-2) - 1).max())
    if dev > tol:
        raise StabilityError(f"{what}: row/column sums deviate from 1 by {dev:.3e}")


def d_matrix_sq(spin: Spin, theta: float) -> DMatrixSq:
    """Squared magnitudes of the spin-``j`` rotation matrix at angle ``theta``.

    Parameters
    ----------
    spin : Spin
    theta : float
        Rotation angle in radians; must be finite.

    Returns
    -------
    DMatrixSq
        Doubly stochastic, symmetric under ``m' <-> m`` and ``(m', m) -> (-m', -m)``.

    Raises
    ------
    StabilityError
        If a row or column sum deviates from 1 by more than ``1e-8``.
    """
    theta = float(theta)
    if not np.isfinite(theta):
        raise ValueError(f"theta must be finite, got {theta}")
    p = rotation_sq(spin, theta)[0]
    _check_stochastic(p, STABILITY_TOL, f"2j={spin.twice_j}, theta={theta}")
    p = _clamp(p)
    p.flags.writeable = False
    return DMatrixSq(spin, theta, p)


def max_stable_spin() -> Spin:
    """Largest spin for which :func:`d_matrix_sq` is certified doubly stochastic to 1e-10."""
    return Spin(_MAX_STABLE_TWICE_J)
