"""Macrorealism witnesses for sequential, coarse-grained spin-j measurements.

A spin-j precessing about x is prepared in ``|-j>`` and measured along z at
three mean times; the 2j+1 outcomes are grouped into two coarse values and
the measurement times carry Gaussian jitter of width ``delta``.
"""
from .measurement import (
    DEFAULT_SCHEDULE, AngleSchedule, CoarseJoint, Grouping, first_marginal, grouping,
    pair_joint, unmeasured_marginal,
)
from .smear import TransferMatrix, quadrature_transfer, smeared_transfer
from .spinnum import MagQuantum, Spin, is_integer_spin, outcomes
from .sweep import (
    OptimizeResult, SweepRow, TableReport, optimize_schedule, preset_schedules,
    reproduce_table, sweep_grid,
)
from .tables import TABLES, TableSpec
from .wigner import DMatrixSq, StabilityError, d_matrix_sq, max_stable_spin
from .witnesses import WitnessReport, evaluate, k_lgi, k_nsit, k_wlgi

__all__ = [
    "AngleSchedule", "CoarseJoint", "DEFAULT_SCHEDULE", "DMatrixSq", "Grouping",
    "MagQuantum", "OptimizeResult", "Spin", "StabilityError", "SweepRow", "TABLES",
    "TableReport", "TableSpec", "TransferMatrix", "WitnessReport", "d_matrix_sq",
    "evaluate", "first_marginal", "grouping", "is_integer_spin", "k_lgi", "k_nsit",
    "k_wlgi", "max_stable_spin", "optimize_schedule", "outcomes", "pair_joint",
    "preset_schedules", "quadrature_transfer", "reproduce_table", "smeared_transfer",
    "sweep_grid", "unmeasured_marginal",
]
