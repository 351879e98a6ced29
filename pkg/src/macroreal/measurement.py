"""Coarse-grained two-time statistics of ``J_z`` measurements.

The ``2j + 1`` outcomes are clubbed into two groups ``Q = -1`` (lower half,
including ``m = 0`` for integer ``j``) and ``Q = +1``.  The system starts in
``|-j; j>`` and precesses about ``x``; angles are products ``Omega * t``.
Array index 0 of a coarse table means ``Q = -1`` and index 1 means ``Q = +1``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .smear import smeared_transfer
from .spinnum import MagQuantum, Spin, is_integer_spin, outcomes
from .wigner import d_matrix_sq

MASS_TOL = 1e-9


@dataclass(frozen=True)
class Grouping:
    spin: Spin
    plus: np.ndarray  # bool mask over outcomes(), True where Q = +1

    def q(self, m: MagQuantum) -> int:
        """Coarse outcome of ``m``."""
        m.check(self.spin)
        return 1 if m.twice_m > 0 else -1

    def members(self, q: int) -> list[MagQuantum]:
        return [m for m in outcomes(self.spin) if self.q(m) == q]


def grouping(spin: Spin) -> Grouping:
    """Split the outcomes at ``m = 0``; ``m = 0`` itself falls in ``Q = -1``."""
    twice_m = np.arange(-spin.twice_j, spin.twice_j + 1, 2)
    plus = twice_m > 0
    plus.flags.writeable = False
    # half-integer j: equal halves; integer j: the Q=-1 group is larger by one
    assert plus.sum() * 2 + is_integer_spin(spin) == spin.dimension()
    return Grouping(spin, plus)


@dataclass(frozen=True)
class AngleSchedule:
    """Mean precession angles for the segments t0->t1, t1->t2 and t2->t3."""

    a01: float
    a12: float
    a23: float

    def __post_init__(self):
        for name in ("a01", "a12", "a23"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value >= 0):
                raise ValueError(f"{name} must be finite and >= 0, got {value}")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.a01, self.a12, self.a23)

    @property
    def total(self) -> float:
        return self.a01 + self.a12 + self.a23

    def pair_angles(self, i: int, k: int) -> tuple[float, float]:
        """``(angle_from_start, angle_between)`` for measurements at ``t_i < t_k``."""
        segs = (0.0,) + self.as_tuple()
        if not 1 <= i < k <= 3:
            raise ValueError(f"need 1 <= i < k <= 3, got ({i}, {k})")
        return sum(segs[: i + 1]), sum(segs[i + 1 : k + 1])


DEFAULT_SCHEDULE = AngleSchedule(math.pi, math.pi / 2, math.pi / 2)


@dataclass(frozen=True)
class CoarseJoint:
    """``p[a, b] = P(Q_i = s_a, Q_j = s_b)`` with ``s_0 = -1`` and ``s_1 = +1``."""

    p: np.ndarray

    def __post_init__(self):
        if self.p.shape != (2, 2):
            raise ValueError(f"coarse table must be 2x2, got {self.p.shape}")
        if self.p.min() < 0 or abs(self.p.sum() - 1) > MASS_TOL:
            raise ValueError(f"not a probability table: {self.p}")

    def prob(self, qi: int, qj: int) -> float:
        return float(self.p[(qi + 1) // 2, (qj + 1) // 2])

    def correlator(self) -> float:
        """``<Q_i Q_j>``."""
        return float(self.p[0, 0] + self.p[1, 1] - self.p[0, 1] - self.p[1, 0])

    def second_marginal(self) -> np.ndarray:
        return self.p.sum(axis=0)


def transfer(spin: Spin, angle: float, delta: float) -> np.ndarray:
    """Transition probabilities over one segment; sharp when ``delta == 0``."""
    if delta < 0:
        raise ValueError(f"delta must be >= 0, got {delta}")
    if delta == 0:
        return d_matrix_sq(spin, angle).p
    return smeared_transfer(spin, angle, delta).t


def first_marginal(spin: Spin, angle_from_start: float, delta: float) -> np.ndarray:
    """Distribution of ``m`` at the first measurement, in the order of ``outcomes(spin)``."""
    # the initial state |-j> is column 0
    return transfer(spin, angle_from_start, delta)[:, 0]


def fine_joint(
    spin: Spin, angle_from_start: float, angle_between: float, delta: float
) -> np.ndarray:
    """``P[a, b]`` of outcomes ``m_a`` then ``m_b`` for one pair of measurement times."""
    first = first_marginal(spin, angle_from_start, delta)
    # transfer()[m_j, m_i] -> transpose so that rows are the earlier outcome
    return first[:, None] * transfer(spin, angle_between, delta).T


def coarsen(spin: Spin, fine: np.ndarray) -> np.ndarray:
    plus = grouping(spin).plus
    masks = (~plus, plus)
    return np.array([[fine[np.ix_(a, b)].sum() for b in masks] for a in masks])


def pair_joint(
    spin: Spin, angle_from_start: float, angle_between: float, delta: float
) -> CoarseJoint:
    """Joint distribution of the coarse outcomes ``(Q_i, Q_j)``."""
    fine = fine_joint(spin, angle_from_start, angle_between, delta)
    return CoarseJoint(coarsen(spin, fine))


def unmeasured_marginal(spin: Spin, total_angle: float, delta: float) -> float:
    """``P(Q_3 = +1)`` when no earlier measurement is made.

    One Gaussian kernel of width ``delta`` is centred on the total angle.
    """
    first = first_marginal(spin, total_angle, delta)
    return float(first[grouping(spin).plus].sum())
