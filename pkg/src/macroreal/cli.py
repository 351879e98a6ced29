"""Command-line front end.

Usage::

    macroreal eval --spin 3/2 --delta 0 --schedule pi,pi/2,pi/2 --format json
    macroreal sweep --spin 3/2,9/2,15/2 --delta 0,0.25,0.55,0.85 -o fig1.csv
    macroreal table --id II --tolerance 1e-3
    macroreal optimize --spin 3 --delta 0.55 --objective k_wlgi --budget 300
    macroreal presets

Exit status is 0 on success, 2 on invalid arguments and 3 when a table is
not reproduced within tolerance.  A relative ``--output`` path is resolved
against ``$MACROREAL_OUTPUT_DIR`` when that variable is set.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import re
import sys
from fractions import Fraction
from pathlib import Path

from .measurement import AngleSchedule
from .spinnum import Spin
from .sweep import (
    OBJECTIVES, SweepRow, optimize_schedule, preset_schedules, reproduce_table, sweep_grid,
)
from .tables import TABLES
from .witnesses import evaluate

OUTPUT_DIR_ENV = "MACROREAL_OUTPUT_DIR"
FIELDS = (
    "twice_j", "delta", "a01", "a12", "a23",
    "k_lgi", "k_wlgi", "k_nsit_signed", "k_nsit_magnitude",
)

EXIT_OK, EXIT_USAGE, EXIT_TABLE_FAILED = 0, 2, 3


class UsageError(ValueError):
    pass


def parse_spin(text: str) -> Spin:
    """Accept ``"3/2"``, ``"1.5"``, ``"3"`` or ``"2j=3"``."""
    s = text.strip().replace(" ", "")
    try:
        if s.lower().startswith("2j="):
            value = Spin(int(s[3:]))
        else:
            value = Spin.from_j(Fraction(s))
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise UsageError(f"invalid --spin {text!r}: {exc}") from None
    return value


_PI_FORM = re.compile(r"^([+-]?\d*\.?\d*)\*?pi(?:/(\d+\.?\d*))?$")


def parse_angle(text: str) -> float:
    """Radians from ``"pi"``, ``"pi/2"``, ``"3pi/4"``, ``"3*pi/4"`` or a decimal."""
    s = text.strip().replace(" ", "").lower()
    match = _PI_FORM.match(s)
    try:
        if match:
            coeff, denom = match.groups()
            num = float(coeff + "1") if coeff in ("", "+", "-") else float(coeff)
            value = num * math.pi / (float(denom) if denom else 1.0)
        else:
            value = float(s)
    except ValueError:
        raise UsageError(f"invalid angle {text!r}") from None
    if not math.isfinite(value):
        raise UsageError(f"angle {text!r} is not finite")
    return value


def parse_schedule(text: str) -> AngleSchedule:
    presets = preset_schedules()
    if text in presets:
        return presets[text]
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError(f"--schedule needs three comma-separated angles, got {text!r}")
    try:
        return AngleSchedule(*(parse_angle(p) for p in parts))
    except ValueError as exc:
        raise UsageError(f"invalid --schedule {text!r}: {exc}") from None


def parse_delta(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise UsageError(f"invalid --delta {text!r}") from None
    if not (math.isfinite(value) and value >= 0):
        raise UsageError(f"--delta must be finite and >= 0, got {text!r}")
    return value


def _split(text: str) -> list[str]:
    return [t for t in text.split(",") if t.strip()]


def fmt(x: float) -> str:
    """12 significant digits, trailing zeros kept."""
    return f"{x:#.12g}"


def row_values(row: SweepRow) -> dict:
    return {
        "twice_j": row.twice_j,
        "delta": row.delta,
        "a01": row.schedule.a01,
        "a12": row.schedule.a12,
        "a23": row.schedule.a23,
        "k_lgi": row.k_lgi,
        "k_wlgi": row.k_wlgi,
        "k_nsit_signed": row.k_nsit_signed,
        "k_nsit_magnitude": row.k_nsit_magnitude,
    }


def serialize(rows: list[SweepRow], fmt_name: str = "csv") -> bytes:
    """Deterministic CSV or JSON encoding of sweep rows."""
    if not rows:
        raise ValueError("nothing to serialize")
    records = [row_values(r) for r in rows]
    if fmt_name == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(FIELDS)
        for rec in records:
            writer.writerow([rec["twice_j"]] + [fmt(rec[k]) for k in FIELDS[1:]])
        return buf.getvalue().encode()
    if fmt_name == "json":
        out = [
            {k: (v if k == "twice_j" else float(fmt(v))) for k, v in rec.items()}
            for rec in records
        ]
        return (json.dumps(out, indent=2) + "\n").encode()
    raise ValueError(f"unknown format {fmt_name!r}")


def parse_rows(data: bytes, fmt_name: str = "csv") -> list[SweepRow]:
    """Inverse of :func:`serialize`."""
    if fmt_name == "csv":
        records = list(csv.DictReader(io.StringIO(data.decode())))
    elif fmt_name == "json":
        records = json.loads(data)
    else:
        raise ValueError(f"unknown format {fmt_name!r}")
    return [
        SweepRow(
            int(r["twice_j"]), float(r["delta"]),
            AngleSchedule(float(r["a01"]), float(r["a12"]), float(r["a23"])),
            float(r["k_lgi"]), float(r["k_wlgi"]),
            float(r["k_nsit_signed"]), float(r["k_nsit_magnitude"]),
        )
        for r in records
    ]


def _write(data: bytes, output: str | None) -> None:
    if output is None or output == "-":
        sys.stdout.write(data.decode())
        sys.stdout.flush()
        return
    path = Path(output)
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not path.is_absolute():
        path = Path(base) / path
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(data)
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="macroreal",
        description="Macrorealism witnesses for coarse-grained spin measurements.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, many=False):
        p.add_argument("--spin", required=True,
                       help="spin j, e.g. 3/2, 1.5 or 2j=3" + (" (comma list)" if many else ""))
        p.add_argument("--delta", default="0",
                       help="coarsening width in radians" + (" (comma list)" if many else ""))
        p.add_argument("--schedule", default="default",
                       help="three angles like pi,pi/2,pi/2, or a preset name")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("-o", "--output", default=None, help="output file (default stdout)")

    common(sub.add_parser("eval", help="evaluate the witnesses at one point"))
    p = sub.add_parser("sweep", help="evaluate a (spin, delta) grid")
    common(p, many=True)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("table", help="reproduce a published table")
    p.add_argument("--id", required=True, choices=sorted(TABLES))
    p.add_argument("--tolerance", default="1e-3")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("optimize", help="maximise a witness over schedules")
    p.add_argument("--spin", required=True)
    p.add_argument("--delta", default="0")
    p.add_argument("--objective", choices=OBJECTIVES, default="k_wlgi")
    p.add_argument("--budget", default="200")
    p.add_argument("--seed", default="0")
    p.add_argument("--restarts", default="0")
    p.add_argument("--format", choices=("csv", "json"), default="json")
    p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("presets", help="list named schedules")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("-o", "--output", default=None)
    return parser


def _int_arg(name: str, text: str, lo: int) -> int:
    try:
        value = int(text)
    except ValueError:
        raise UsageError(f"invalid --{name} {text!r}") from None
    if value < lo:
        raise UsageError(f"--{name} must be >= {lo}, got {value}")
    return value


def _records_bytes(records: list[dict], fmt_name: str) -> bytes:
    if fmt_name == "json":
        return (json.dumps(records, indent=2) + "\n").encode()
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(records[0]), lineterminator="\n")
    writer.writeheader()
    for rec in records:
        writer.writerow({k: fmt(v) if isinstance(v, float) else v for k, v in rec.items()})
    return buf.getvalue().encode()


def _cmd_eval(args) -> int:
    spin, delta, schedule = parse_spin(args.spin), parse_delta(args.delta), parse_schedule(args.schedule)
    report = evaluate(spin, schedule, delta)
    rec = {"twice_j": spin.twice_j, "delta": delta, "a01": schedule.a01,
           "a12": schedule.a12, "a23": schedule.a23, **report.as_dict()}
    if args.format == "json":
        rec = {k: float(fmt(v)) if isinstance(v, float) else v for k, v in rec.items()}
        _write((json.dumps(rec, indent=2) + "\n").encode(), args.output)
    else:
        _write(_records_bytes([rec], "csv"), args.output)
    return EXIT_OK


def _cmd_sweep(args) -> int:
    spins = [parse_spin(s) for s in _split(args.spin)]
    deltas = [parse_delta(d) for d in _split(args.delta)]
    schedule = parse_schedule(args.schedule)
    if not spins or not deltas:
        raise UsageError("--spin and --delta need at least one value")
    rows = sweep_grid(spins, deltas, schedule, workers=args.workers)
    _write(serialize(rows, args.format), args.output)
    return EXIT_OK


def _cmd_table(args) -> int:
    try:
        tolerance = float(args.tolerance)
    except ValueError:
        raise UsageError(f"invalid --tolerance {args.tolerance!r}") from None
    if not (math.isfinite(tolerance) and tolerance > 0):
        raise UsageError(f"--tolerance must be positive, got {args.tolerance!r}")
    report = reproduce_table(TABLES[args.id], tolerance, workers=args.workers)
    records = [
        {"witness": c.witness, "twice_j": c.twice_j, "delta": c.delta,
         "expected": c.expected, "computed": c.computed, "deviation": c.deviation,
         "pass": c.deviation <= tolerance}
        for c in report.cells
    ]
    _write(_records_bytes(records, args.format), args.output)
    worst = report.worst
    status = "PASS" if report.passed else "FAIL"
    print(
        f"table {report.table_id}: {status} ({len(report.cells) - len(report.failures)}"
        f"/{len(report.cells)} cells within {tolerance:g}); worst {worst.witness} at "
        f"2j={worst.twice_j}, delta={worst.delta:g}: deviation {worst.deviation:.2e}",
        file=sys.stderr,
    )
    return EXIT_OK if report.passed else EXIT_TABLE_FAILED


def _cmd_optimize(args) -> int:
    spin, delta = parse_spin(args.spin), parse_delta(args.delta)
    budget = _int_arg("budget", args.budget, 27)
    seed = _int_arg("seed", args.seed, 0)
    restarts = _int_arg("restarts", args.restarts, 0)
    res = optimize_schedule(spin, delta, args.objective, budget, seed=seed, restarts=restarts)
    rec = {"twice_j": spin.twice_j, "delta": delta, "objective": args.objective,
           "a01": res.schedule.a01, "a12": res.schedule.a12, "a23": res.schedule.a23,
           "value": res.value, "converged": res.converged, "evaluations": res.evaluations}
    _write(_records_bytes([rec], args.format), args.output)
    return EXIT_OK


def _cmd_presets(args) -> int:
    records = [
        {"name": name, "a01": s.a01, "a12": s.a12, "a23": s.a23}
        for name, s in preset_schedules().items()
    ]
    _write(_records_bytes(records, args.format), args.output)
    return EXIT_OK


COMMANDS = {
    "eval": _cmd_eval, "sweep": _cmd_sweep, "table": _cmd_table,
    "optimize": _cmd_optimize, "presets": _cmd_presets,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"macroreal {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"macroreal {args.command}: error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
