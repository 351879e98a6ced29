"""Gaussian coarsening of the precession angle.

Every entry of ``|d^j(theta)|**2`` is a trigonometric polynomial in ``theta``
with integer frequencies ``|n| <= 2j``.  Averaging it against a Gaussian of
width ``delta`` centred on ``mean_angle`` therefore reduces to damping each
Fourier coefficient:

    t = sum_n c_n exp(i n mean_angle) exp(-n**2 delta**2 / 2)

which is exact on the infinite domain.  :func:`quadrature_transfer` evaluates
the same integral by adaptive quadrature and is used to check it.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np
from scipy.integrate import quad_vec

from .spinnum import Spin
from .wigner import CLAMP_TOL, StabilityError, d_matrix_sq, rotation_sq

IMAG_TOL = 1e-10
STOCHASTIC_TOL = 1e-9


@dataclass(frozen=True)
class TransferMatrix:
    """Smeared transition probabilities ``t[m', m]`` over one evolution segment."""

    spin: Spin
    mean_angle: float
    delta: float
    t: np.ndarray


def gaussian_damping(delta: float) -> Callable[[np.ndarray], np.ndarray]:
    """Fourier factors of a centred Gaussian kernel: ``n -> exp(-n**2 delta**2 / 2)``."""
    return lambda n: np.exp(-0.5 * (n * delta) ** 2)


def sample_count(spin: Spin) -> int:
    """Smallest power of two with at least ``4j + 2`` points."""
    need = 2 * spin.twice_j + 2
    return 1 << (need - 1).bit_length()


@lru_cache(maxsize=8)
def fourier_coefficients(twice_j: int) -> tuple[np.ndarray, np.ndarray]:
    """Frequencies ``n = -2j..2j`` and coefficients ``c_n`` of every matrix entry.

    Returns ``(n, c)`` with ``c`` of shape ``(4j + 1, d, d)``.
    """
    spin = Spin(twice_j)
    size = sample_count(spin)
    thetas = 2 * np.pi * np.arange(size) / size
    samples = rotation_sq(spin, thetas)
    coeffs = np.fft.fft(samples, axis=0) / size
    n = np.arange(-twice_j, twice_j + 1)
    c = coeffs[n % size]
    c.flags.writeable = False
    n.flags.writeable = False
    return n, c


def smeared_transfer(
    spin: Spin,
    mean_angle: float,
    delta: float,
    damping: Callable[[np.ndarray], np.ndarray] | None = None,
) -> TransferMatrix:
    """Gaussian-averaged transition probabilities via the Fourier expansion.

    Parameters
    ----------
    spin : Spin
    mean_angle : float
        Kernel centre in radians.
    delta : float
        Kernel standard deviation in radians, ``>= 0``.
    damping : callable, optional
        Maps integer frequencies to the kernel's Fourier factors.  Defaults to
        the Gaussian of width ``delta``; any symmetric kernel may be plugged in.

    Raises
    ------
    StabilityError
        If the result has an imaginary residue above 1e-10 or is not doubly
        stochastic to 1e-9.
    """
    mean_angle = float(mean_angle)
    delta = float(delta)
    if not np.isfinite(mean_angle):
        raise ValueError(f"mean_angle must be finite, got {mean_angle}")
    if not (delta >= 0 and np.isfinite(delta)):
        raise ValueError(f"delta must be finite and >= 0, got {delta}")
    if damping is None:
        damping = gaussian_damping(delta)

    n, c = fourier_coefficients(spin.twice_j)
    weights = np.exp(1j * n * np.mod(mean_angle, 2 * np.pi)) * damping(n)
    t = np.tensordot(weights, c, axes=(0, 0))
    residue = np.abs(t.imag).max()
    if residue > IMAG_TOL:
        raise StabilityError(f"imaginary residue {residue:.3e} at 2j={spin.twice_j}")
    t = t.real
    dev = max(np.abs(t.sum(axis=0) - 1).max(), np.abs(t.sum(axis=1) - 1).max())
    if dev > STOCHASTIC_TOL:
        raise StabilityError(f"smeared matrix not stochastic: deviation {dev:.3e}")
    if t.min() < -CLAMP_TOL or t.max() > 1 + CLAMP_TOL:
        raise StabilityError("smeared probabilities outside [0, 1]")
    t = np.clip(t, 0.0, 1.0)
    t.flags.writeable = False
    return TransferMatrix(spin, mean_angle, delta, t)


class QuadratureError(RuntimeError):
    pass


def quadrature_transfer(
    spin: Spin,
    mean_angle: float,
    delta: float,
    rel_tol: float = 1e-10,
    half_width: float = 8.0,
    limit: int = 2000,
) -> TransferMatrix:
    """Reference value of :func:`smeared_transfer` by adaptive quadrature.

    Integrates over ``mean_angle +/- half_width * delta``.  Meant for tests.
    """
    if not delta > 0:
        raise ValueError(f"quadrature needs delta > 0, got {delta}")
    if not 0 < rel_tol <= 1e-4:
        raise ValueError(f"rel_tol must lie in (0, 1e-4], got {rel_tol}")
    norm = 1.0 / (delta * np.sqrt(2 * np.pi))

    def integrand(theta):
        x = (theta - mean_angle) / delta
        return norm * np.exp(-0.5 * x * x) * d_matrix_sq(spin, theta).p

    lo = mean_angle - half_width * delta
    hi = mean_angle + half_width * delta
    # split at the kernel centre so the peak is never straddled by one panel
    total = np.zeros((spin.dimension(), spin.dimension()))
    for a, b in ((lo, mean_angle), (mean_angle, hi)):
        value, _, info = quad_vec(
            integrand, a, b, epsrel=rel_tol, epsabs=1e-15, norm="max",
            limit=limit, full_output=True,
        )
        if not info.success:
            raise QuadratureError(
                f"quadrature did not converge for 2j={spin.twice_j}, "
                f"mean_angle={mean_angle}, delta={delta}: {info.message}"
            )
        total += value
    total.flags.writeable = False
    return TransferMatrix(spin, float(mean_angle), float(delta), total)
