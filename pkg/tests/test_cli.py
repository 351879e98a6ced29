import json
import math

import pytest

from macroreal import AngleSchedule, Spin, sweep_grid
from macroreal.cli import (
    FIELDS, UsageError, fmt, parse_angle, parse_rows, parse_schedule, parse_spin, run,
    serialize,
)


@pytest.mark.parametrize("text, twice_j", [
    ("3/2", 3), ("1.5", 3), ("2j=3", 3), ("3", 6), ("199/2", 199), ("2J=400", 400),
])
def test_parse_spin(text, twice_j):
    assert parse_spin(text) == Spin(twice_j)


@pytest.mark.parametrize("text", ["0", "1/3", "abc", "-1", "2j=0", "1.25"])
def test_parse_spin_rejects(text):
    with pytest.raises(UsageError):
        parse_spin(text)


@pytest.mark.parametrize("text, value", [
    ("pi", math.pi), ("pi/2", math.pi / 2), ("3pi/4", 3 * math.pi / 4),
    ("3*pi/4", 3 * math.pi / 4), ("2pi", 2 * math.pi), ("0.5", 0.5),
    (repr(math.pi / 2), math.pi / 2),
])
def test_parse_angle(text, value):
    assert parse_angle(text) == value


def test_symbolic_and_decimal_schedules_agree():
    symbolic = parse_schedule("pi,pi/2,pi/2")
    decimal = parse_schedule(",".join(repr(a) for a in (math.pi, math.pi / 2, math.pi / 2)))
    assert symbolic == decimal
    assert parse_schedule("default") == symbolic


@pytest.mark.parametrize("text", ["pi,pi", "pi,x,pi", "-pi,pi,pi", "inf,1,1"])
def test_parse_schedule_rejects(text):
    with pytest.raises(UsageError):
        parse_schedule(text)


def test_fmt_twelve_significant_digits():
    assert fmt(0.25) == "0.250000000000"
    assert fmt(1.0) == "1.00000000000"
    assert fmt(-0.5) == "-0.500000000000"


@pytest.fixture(scope="module")
def rows():
    return sweep_grid([Spin(3), Spin(4)], [0.0, 0.55], AngleSchedule(1.0, 2.0, 0.5))


def test_serialize_csv_structure(rows):
    text = serialize(rows[:1], "csv").decode()
    lines = text.splitlines()
    assert len(lines) == 2
    assert lines[0] == ",".join(FIELDS)


def test_serialize_deterministic(rows):
    assert serialize(rows, "csv") == serialize(rows, "csv")
    assert serialize(rows, "json") == serialize(rows, "json")


def test_serialize_rejects_empty():
    with pytest.raises(ValueError):
        serialize([], "csv")


@pytest.mark.parametrize("fmt_name", ["csv", "json"])
def test_round_trip(rows, fmt_name):
    back = parse_rows(serialize(rows, fmt_name), fmt_name)
    assert len(back) == len(rows)
    for a, b in zip(rows, back):
        assert a.twice_j == b.twice_j
        for name in ("delta", "k_lgi", "k_wlgi", "k_nsit_signed", "k_nsit_magnitude"):
            assert fmt(getattr(a, name)) == fmt(getattr(b, name))
        assert [fmt(x) for x in a.schedule.as_tuple()] == [fmt(x) for x in b.schedule.as_tuple()]


def test_eval_json(capsys):
    code = run(["eval", "--spin", "3/2", "--delta", "0", "--schedule", "pi,pi/2,pi/2",
                "--format", "json"])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["k_wlgi"] == pytest.approx(0.250, abs=1e-3)
    assert out["k_nsit_magnitude"] == pytest.approx(0.500, abs=1e-3)


def test_eval_rejects_zero_spin(capsys):
    code = run(["eval", "--spin", "0", "--delta", "0", "--schedule", "pi,pi/2,pi/2"])
    assert code == 2
    err = capsys.readouterr()
    assert "--spin" in err.err
    assert err.out == ""


@pytest.mark.parametrize("argv", [
    ["eval", "--spin", "3/2", "--delta", "-1"],
    ["eval", "--spin", "3/2", "--schedule", "pi"],
    ["sweep", "--spin", "3/2,0", "--delta", "0"],
    ["table", "--id", "I", "--tolerance", "zero"],
    ["optimize", "--spin", "3/2", "--budget", "10"],
    ["nonsense"],
])
def test_usage_errors_exit_two(argv, capsys):
    assert run(argv) == 2
    assert capsys.readouterr().out == ""


def test_table_i_exit_zero(capsys):
    assert run(["table", "--id", "I", "--tolerance", "1e-3"]) == 0
    captured = capsys.readouterr()
    assert captured.out.count("True") == 14
    assert "PASS" in captured.err


def test_table_ii_exit_three(capsys):
    assert run(["table", "--id", "II"]) == 3
    assert "FAIL" in capsys.readouterr().err


def test_sweep_to_file(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("MACROREAL_OUTPUT_DIR", str(tmp_path))
    code = run(["sweep", "--spin", "3/2,9/2", "--delta", "0,0.25", "-o", "fig/out.csv"])
    assert code == 0
    data = (tmp_path / "fig" / "out.csv").read_bytes()
    assert len(parse_rows(data)) == 4
    assert capsys.readouterr().out == ""


def test_sweep_output_matches_library(capsys):
    run(["sweep", "--spin", "3", "--delta", "0.55", "--schedule", "pi,3pi/4,3pi/4"])
    expected = sweep_grid([Spin(6)], [0.55], parse_schedule("pi,3pi/4,3pi/4"))
    assert capsys.readouterr().out.encode() == serialize(expected, "csv")


def test_optimize_output(capsys):
    assert run(["optimize", "--spin", "1/2", "--objective", "k_wlgi", "--budget", "60"]) == 0
    out = json.loads(capsys.readouterr().out)[0]
    assert out["value"] >= 0.25
    assert out["evaluations"] <= 60
    assert isinstance(out["converged"], bool)


def test_presets_listing(capsys):
    assert run(["presets"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "name,a01,a12,a23"
    assert lines[1].startswith("default,")
    assert len(lines) == 6


def test_write_error_names_path(tmp_path, capsys):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    code = run(["presets", "-o", str(blocker / "sub" / "out.csv")])
    assert code == 1
    assert str(blocker) in capsys.readouterr().err
