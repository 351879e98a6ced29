"""Parameter sweeps, table reproduction and schedule optimisation."""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize

from .measurement import DEFAULT_SCHEDULE, AngleSchedule
from .spinnum import Spin
from .tables import TableSpec
from .witnesses import evaluate

OBJECTIVES = ("k_wlgi", "k_nsit_magnitude", "k_lgi")


class SweepError(RuntimeError):
    pass


@dataclass(frozen=True)
class SweepRow:
    twice_j: int
    delta: float
    schedule: AngleSchedule
    k_lgi: float
    k_wlgi: float
    k_nsit_signed: float
    k_nsit_magnitude: float


def evaluate_row(twice_j: int, delta: float, schedule: AngleSchedule) -> SweepRow:
    try:
        report = evaluate(Spin(twice_j), schedule, delta)
    except Exception as exc:
        raise SweepError(
            f"evaluation failed at 2j={twice_j}, delta={delta}, "
            f"schedule={schedule.as_tuple()}: {exc}"
        ) from exc
    return SweepRow(
        twice_j, float(delta), schedule,
        report.k_lgi, report.k_wlgi, report.k_nsit_signed, report.k_nsit_magnitude,
    )


def _evaluate_point(args):
    return evaluate_row(*args)


def sweep_grid(
    spins: list[Spin],
    deltas: list[float],
    schedule: AngleSchedule = DEFAULT_SCHEDULE,
    workers: int | None = None,
) -> list[SweepRow]:
    """Evaluate every ``(spin, delta)`` pair, ordered by ``(twice_j, delta)``.

    With ``workers`` > 1 the grid points are farmed out to a process pool;
    the rows come back in the same order as a serial run.
    """
    if len(spins) == 0 or len(deltas) == 0:
        raise ValueError("spins and deltas must be nonempty")
    points = [
        (tj, d, schedule)
        for tj in sorted({s.twice_j for s in spins})
        for d in sorted({float(d) for d in deltas})
    ]
    if workers is None or workers <= 1:
        return [_evaluate_point(p) for p in points]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_evaluate_point, points))


@dataclass(frozen=True)
class CellResult:
    witness: str
    twice_j: int
    delta: float
    expected: float
    computed: float

    @property
    def deviation(self) -> float:
        return abs(self.computed - self.expected)


@dataclass(frozen=True)
class TableReport:
    table_id: str
    tolerance: float
    cells: list[CellResult]

    @property
    def worst(self) -> CellResult:
        return max(self.cells, key=lambda c: c.deviation)

    @property
    def max_deviation(self) -> float:
        return self.worst.deviation

    @property
    def failures(self) -> list[CellResult]:
        return [c for c in self.cells if c.deviation > self.tolerance]

    @property
    def passed(self) -> bool:
        return not self.failures


def reproduce_table(
    spec: TableSpec, tolerance: float = 1e-3, workers: int | None = None
) -> TableReport:
    """Recompute every published cell of ``spec`` and compare."""
    if not tolerance > 0:
        raise ValueError(f"tolerance must be positive, got {tolerance}")
    grid = spec.grid()
    rows = sweep_grid(
        [Spin(tj) for tj, _ in grid], sorted({d for _, d in grid}), DEFAULT_SCHEDULE,
        workers=workers,
    )
    by_point = {(r.twice_j, r.delta): r for r in rows}
    cells = [
        CellResult(w, tj, d, expected, getattr(by_point[tj, d], w))
        for w, tj, d, expected in spec.cells()
    ]
    return TableReport(spec.id, tolerance, cells)


def preset_schedules() -> dict[str, AngleSchedule]:
    """The default schedule followed by four alternatives."""
    pi = math.pi
    return {
        "default": DEFAULT_SCHEDULE,
        "pi-pi-pi": AngleSchedule(pi, pi, pi),
        "half-half-pi": AngleSchedule(pi / 2, pi / 2, pi),
        "pi-quarter-quarter": AngleSchedule(pi, pi / 4, pi / 4),
        "pi-3quarter-3quarter": AngleSchedule(pi, 3 * pi / 4, 3 * pi / 4),
    }


@dataclass
class OptimizeResult:
    schedule: AngleSchedule
    value: float
    converged: bool
    evaluations: int
    trace: list[tuple[tuple[float, float, float], float]] = field(repr=False)


class _BudgetExhausted(Exception):
    pass


def _wrap(x) -> AngleSchedule:
    return AngleSchedule(*(float(a) for a in np.mod(x, 2 * np.pi)))


def optimize_schedule(
    spin: Spin,
    delta: float,
    objective: str = "k_wlgi",
    budget: int = 200,
    seed: int = 0,
    restarts: int = 0,
) -> OptimizeResult:
    """Maximise a witness over the three mean precession angles.

    A uniform ``k x k x k`` grid on the torus, shifted so that it contains the
    default schedule, is probed first; Nelder-Mead then refines from the best
    grid point.  ``restarts`` extra local searches start from points drawn
    with ``seed``.  The result is a lower bound on the true maximum.

    ``converged`` is False if the budget ran out before the last local search
    met its stopping criterion.
    """
    if objective not in OBJECTIVES:
        raise ValueError(f"objective must be one of {OBJECTIVES}, got {objective!r}")
    if budget < 27:
        raise ValueError(f"budget must be >= 27, got {budget}")

    trace: list[tuple[tuple[float, float, float], float]] = []
    best: list = [None, -np.inf]

    def f(x) -> float:
        if len(trace) >= budget:
            raise _BudgetExhausted
        sched = _wrap(x)
        value = getattr(evaluate(spin, sched, delta), objective)
        trace.append((sched.as_tuple(), value))
        if value > best[1]:
            best[0], best[1] = sched, value
        return value

    k = max(3, int(round((budget / 2) ** (1 / 3))))
    while k ** 3 > budget:
        k -= 1
    step = 2 * np.pi / k
    anchor = np.array(DEFAULT_SCHEDULE.as_tuple())
    offsets = np.arange(k) * step
    converged = False
    try:
        for da in offsets:
            for db in offsets:
                for dc in offsets:
                    f(anchor + (da, db, dc))
        starts = [np.array(best[0].as_tuple())]
        rng = np.random.default_rng(seed)
        starts += [rng.uniform(0, 2 * np.pi, 3) for _ in range(restarts)]
        for x0 in starts:
            simplex = np.vstack([x0, x0 + np.eye(3) * step / 2])
            res = minimize(
                lambda x: -f(x), x0, method="Nelder-Mead",
                options={"initial_simplex": simplex, "xatol": 1e-8, "fatol": 1e-12,
                         "maxfev": 10 ** 9},
            )
            converged = bool(res.success)
    except _BudgetExhausted:
        converged = False
    return OptimizeResult(best[0], float(best[1]), converged, len(trace), trace)
