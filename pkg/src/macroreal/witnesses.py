"""Leggett-Garg, Wigner-form and no-signalling-in-time witnesses."""
from __future__ import annotations

from dataclasses import dataclass

from .measurement import AngleSchedule, CoarseJoint, pair_joint, unmeasured_marginal
from .spinnum import Spin

FLAG_TOL = 1e-9


@dataclass(frozen=True)
class WitnessReport:
    k_lgi: float
    k_wlgi: float
    k_nsit_signed: float

    @property
    def k_nsit_magnitude(self) -> float:
        return abs(self.k_nsit_signed)

    @property
    def lgi_violated(self) -> bool:
        return self.k_lgi > 1 + FLAG_TOL

    @property
    def wlgi_violated(self) -> bool:
        return self.k_wlgi > FLAG_TOL

    @property
    def nsit_unsatisfied(self) -> bool:
        return self.k_nsit_magnitude > FLAG_TOL

    def as_dict(self) -> dict:
        return {
            "k_lgi": self.k_lgi,
            "k_wlgi": self.k_wlgi,
            "k_nsit_signed": self.k_nsit_signed,
            "k_nsit_magnitude": self.k_nsit_magnitude,
            "lgi_violated": self.lgi_violated,
            "wlgi_violated": self.wlgi_violated,
            "nsit_unsatisfied": self.nsit_unsatisfied,
        }


def pair_tables(
    spin: Spin, schedule: AngleSchedule, delta: float
) -> dict[tuple[int, int], CoarseJoint]:
    """Coarse joint tables for the pairs (1, 2), (2, 3) and (1, 3)."""
    return {
        pair: pair_joint(spin, *schedule.pair_angles(*pair), delta)
        for pair in ((1, 2), (2, 3), (1, 3))
    }


def lgi_from_tables(tables) -> float:
    return tables[1, 2].correlator() + tables[2, 3].correlator() - tables[1, 3].correlator()


def wlgi_from_tables(tables) -> float:
    return tables[2, 3].prob(1, 1) - tables[1, 2].prob(-1, 1) - tables[1, 3].prob(1, 1)


def nsit_from_tables(tables, p3_plus: float) -> float:
    return p3_plus - (tables[2, 3].prob(1, 1) + tables[2, 3].prob(-1, 1))


def k_lgi(spin: Spin, schedule: AngleSchedule, delta: float) -> float:
    """``C12 + C23 - C13``; macrorealism bounds it by 1."""
    return lgi_from_tables(pair_tables(spin, schedule, delta))


def k_wlgi(spin: Spin, schedule: AngleSchedule, delta: float) -> float:
    """``P(Q2+, Q3+) - P(Q1-, Q2+) - P(Q1+, Q3+)``; macrorealism bounds it by 0."""
    return wlgi_from_tables(pair_tables(spin, schedule, delta))


def k_nsit(spin: Spin, schedule: AngleSchedule, delta: float) -> tuple[float, float]:
    """Shift of ``P(Q3+)`` caused by measuring at ``t2``, as ``(signed, magnitude)``."""
    t23 = pair_joint(spin, *schedule.pair_angles(2, 3), delta)
    p3 = unmeasured_marginal(spin, schedule.total, delta)
    signed = nsit_from_tables({(2, 3): t23}, p3)
    return signed, abs(signed)


def evaluate(spin: Spin, schedule: AngleSchedule, delta: float) -> WitnessReport:
    """All three witnesses from one set of pair tables."""
    tables = pair_tables(spin, schedule, delta)
    p3 = unmeasured_marginal(spin, schedule.total, delta)
    return WitnessReport(
        k_lgi=lgi_from_tables(tables),
        k_wlgi=wlgi_from_tables(tables),
        k_nsit_signed=nsit_from_tables(tables, p3),
    )
