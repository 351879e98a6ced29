"""Exit criteria for the build, one test per criterion.

Each test records a PASS/FAIL line that is printed in the pytest summary.
"""
import itertools
import time

import mpmath
import numpy as np
import pytest

from macroreal import (
    DEFAULT_SCHEDULE, TABLES, Spin, d_matrix_sq, evaluate, optimize_schedule,
    quadrature_transfer, reproduce_table, smeared_transfer,
)
from macroreal.measurement import grouping

from conftest import ACCEPTANCE_LINES

TOL = 1e-3


def record(number, title, ok, detail):
    ACCEPTANCE_LINES.append((number, f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {title}: {detail}"))
    assert ok, detail


def table_detail(report):
    w = report.worst
    bad = ", ".join(
        f"{c.witness}@2j={c.twice_j},delta={c.delta:g}: {c.computed:.5f} vs {c.expected:.3f}"
        for c in report.failures
    )
    return (f"{len(report.cells) - len(report.failures)}/{len(report.cells)} cells within "
            f"{report.tolerance:g}, worst deviation {w.deviation:.2e}"
            + (f"; failing {bad}" if bad else ""))


def test_criterion_01_table_i():
    start = time.perf_counter()
    report = reproduce_table(TABLES["I"], TOL)
    elapsed = time.perf_counter() - start
    ok = report.passed and elapsed < 60
    record(1, "Table I", ok, table_detail(report) + f", {elapsed:.1f} s")


def test_criterion_02_table_ii():
    report = reproduce_table(TABLES["II"], TOL)
    assert len(report.cells) == 18
    record(2, "Table II", report.passed, table_detail(report))


def test_criterion_03_table_iii():
    report = reproduce_table(TABLES["III"], TOL)
    assert len(report.cells) == 12
    record(3, "Table III", report.passed, table_detail(report))


def test_criterion_04_table_iv():
    report = reproduce_table(TABLES["IV"], TOL)
    assert len(report.cells) == 24
    record(4, "Table IV", report.passed, table_detail(report))


def test_criterion_05_lgi_not_violated():
    points = sorted({p for t in TABLES.values() for p in t.grid()})
    worst = max(evaluate(Spin(tj), DEFAULT_SCHEDULE, d).k_lgi for tj, d in points)
    record(5, "LGI non-violation", worst <= 1 + 1e-9,
           f"max k_lgi over {len(points)} table points = {worst:.12f}")


def test_criterion_06_oracle_equivalence():
    worst = 0.0
    for tj, angle, delta in itertools.product(
        [1, 3, 6, 24],
        [np.pi / 4, np.pi / 2, np.pi, 3 * np.pi / 2, 2 * np.pi],
        [0.25, 0.55, 0.85],
    ):
        spin = Spin(tj)
        diff = smeared_transfer(spin, angle, delta).t - quadrature_transfer(spin, angle, delta).t
        worst = max(worst, np.abs(diff).max())
    closed = 0.0
    for delta in (0.25, 0.55, 0.85):
        expected = (1 + np.exp(-delta ** 2 / 2)) / 2
        for t in (smeared_transfer(Spin(1), np.pi, delta).t,
                  quadrature_transfer(Spin(1), np.pi, delta).t):
            closed = max(closed, abs(t[0, 1] - expected), abs(t[1, 0] - expected))
    record(6, "Fourier vs quadrature", worst <= 1e-8 and closed <= 1e-9,
           f"max grid deviation {worst:.2e} (<= 1e-8), j=1/2 closed form {closed:.2e} (<= 1e-9)")


def test_criterion_07_spin_half_hand_values():
    r = evaluate(Spin(1), DEFAULT_SCHEDULE, 0.0)
    devs = (abs(r.k_wlgi - 0.25), abs(r.k_nsit_signed + 0.5), abs(r.k_lgi - 1.0))
    record(7, "j=1/2 hand-derived values", max(devs) <= 1e-12,
           f"|dev| wlgi={devs[0]:.1e}, nsit={devs[1]:.1e}, lgi={devs[2]:.1e}")


def test_criterion_08_stability():
    worst = 0.0
    for tj in (1, 2, 3, 6, 24, 199, 400):
        for theta in np.linspace(0, 2 * np.pi, 100, endpoint=False):
            p = d_matrix_sq(Spin(tj), theta).p
            worst = max(worst, np.abs(p.sum(0) - 1).max(), np.abs(p.sum(1) - 1).max())
    record(8, "double stochasticity up to 2j=400", worst <= 1e-10,
           f"max row/column deviation {worst:.2e}")


def _strict(values, increasing):
    pairs = list(zip(values, values[1:]))
    return all((b > a) if increasing else (b < a) for a, b in pairs)


def test_criterion_09_monotonicity():
    problems = []
    for tid in ("II", "IV"):
        table = TABLES[tid]
        for witness, cells in (("k_wlgi", table.wlgi), ("k_nsit_magnitude", table.nsit)):
            spins = sorted({tj for tj, _ in cells})
            deltas = sorted({d for _, d in cells})
            val = {(tj, d): getattr(evaluate(Spin(tj), DEFAULT_SCHEDULE, d), witness)
                   for tj, d in cells}
            for tj in spins:
                if not _strict([val[tj, d] for d in deltas], increasing=False):
                    problems.append(f"{tid}/{witness} not decreasing in delta at 2j={tj}")
            for d in deltas:
                if not _strict([val[tj, d] for tj in spins], increasing=True):
                    problems.append(f"{tid}/{witness} not increasing in j at delta={d}")
    record(9, "monotonicity on table grids", not problems,
           "; ".join(problems) or "strict in delta and in j for both witnesses, Tables II and IV")


def test_criterion_10_optimizer_dominance():
    problems = []
    for (tj, delta), objective in itertools.product(
        [(3, 0.0), (6, 0.55)], ["k_wlgi", "k_nsit_magnitude", "k_lgi"]
    ):
        default = getattr(evaluate(Spin(tj), DEFAULT_SCHEDULE, delta), objective)
        res = optimize_schedule(Spin(tj), delta, objective, budget=200)
        if res.value < default:
            problems.append(f"{objective}@2j={tj},delta={delta}: {res.value} < {default}")
    record(10, "optimizer dominance", not problems, "; ".join(problems) or "6/6 cases")


# The two published cells that miss the 1e-3 gate are cross-checked here by
# routes independent of the production path.

def exact_nsit_sharp(j, a01, a12, a23, dps=40):
    """K_NSIT at sharp times from the explicit Wigner sum in mpmath."""
    mpmath.mp.dps = dps

    def d(mp, m, beta):
        s = mpmath.mpf(0)
        for k in range(0, 2 * j + 1):
            f = (j + m - k, k, j - mp - k, mp - m + k)
            if min(f) < 0:
                continue
            s += ((-1) ** (k + mp - m) * mpmath.cos(beta / 2) ** (2 * j + m - mp - 2 * k)
                  * mpmath.sin(beta / 2) ** (mp - m + 2 * k)
                  / mpmath.fprod(mpmath.factorial(x) for x in f))
        return mpmath.sqrt(mpmath.fprod(mpmath.factorial(x) for x in
                                        (j + mp, j - mp, j + m, j - m))) * s

    ms = range(-j, j + 1)
    p3 = sum(d(m, -j, a01 + a12 + a23) ** 2 for m in ms if m > 0)
    first = {m: d(m, -j, a01 + a12) ** 2 for m in ms}
    measured = sum(first[mi] * d(mj, mi, a23) ** 2 for mi in ms for mj in ms if mj > 0)
    return float(p3 - measured)


def test_table_iii_outlier_confirmed_exactly():
    pi = mpmath.pi
    exact = exact_nsit_sharp(12, pi, pi / 2, pi / 2)
    assert exact == pytest.approx(-0.48701046224820743, abs=1e-15)
    model = evaluate(Spin(24), DEFAULT_SCHEDULE, 0.0).k_nsit_signed
    assert model == pytest.approx(exact, abs=1e-12)
    assert abs(abs(exact) - 0.486) > TOL


def test_table_ii_outlier_confirmed_by_quadrature():
    spin, delta, s = Spin(9), 0.70, DEFAULT_SCHEDULE
    plus = grouping(spin).plus
    first = quadrature_transfer(spin, s.a01 + s.a12, delta).t[:, 0]
    between = quadrature_transfer(spin, s.a23, delta).t
    p3 = quadrature_transfer(spin, s.total, delta).t[plus, 0].sum()
    measured = (between[plus, :] * first).sum()
    magnitude = abs(p3 - measured)
    assert magnitude == pytest.approx(evaluate(spin, s, delta).k_nsit_magnitude, abs=1e-8)
    assert abs(magnitude - 0.457) > 2e-3
