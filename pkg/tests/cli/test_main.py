# tests/cli/test_main.py

import csv
import io
import json

import pytest

from qwalk_mub import __version__
from qwalk_mub.cli import commands
from qwalk_mub.cli.main import build_parser, main
from qwalk_mub.core.constants import EXIT_IO, EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, OUTPUT_DIR_ENV_VAR


def _load(path):
    return json.loads(path.read_text(encoding="utf-8"))


def _csv_rows(path):
    lines = [line for line in path.read_text(encoding="utf-8").splitlines() if not line.startswith("#")]
    return list(csv.DictReader(io.StringIO("\n".join(lines))))


# --- Parser ---

def test_parser_defaults():
    args = build_parser().parse_args(["dynamics"])
    assert args.scenario == "left"
    assert args.d == 1063
    assert args.steps == 800
    assert args.switch_step == 100
    assert args.coin == "hadamard"


def test_version(capsys):
    assert main(["--version"]) == EXIT_OK
    assert __version__ in capsys.readouterr().out


def test_missing_required_argument():
    assert main(["spectrum"]) == EXIT_USAGE


def test_bad_list_argument():
    assert main(["sweep", "--d-values", "5,x"]) == EXIT_USAGE


def test_info(capsys):
    assert main(["info"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "middle" in out
    assert "hadamard" in out


# --- spectrum ---

def test_spectrum_prime(tmp_path):
    assert main(["spectrum", "--d", "31", "--q", "1", "--theta", "0.7853981633974483", "--out", str(tmp_path)]) == EXIT_OK
    document = _load(tmp_path / "spectrum.json")
    assert len(document["rows"]) == 62
    assert all(row["passed"] for row in document["rows"])
    assert document["summary"]["regime"] == "GENERIC"
    assert document["summary"]["fallback"] is False
    assert document["config"]["parameters"]["d"] == 31
    assert document["config"]["parameters"]["theta"] == pytest.approx(0.7853981633974483)


def test_spectrum_composite_falls_back(tmp_path):
    assert main(["spectrum", "--d", "9", "--q", "2", "--out", str(tmp_path), "--format", "csv"]) == EXIT_OK
    rows = _csv_rows(tmp_path / "spectrum.csv")
    assert len(rows) == 18
    assert {row["regime"] for row in rows} == {"NUMERICAL"}


def test_spectrum_invalid_q(tmp_path, capsys):
    assert main(["spectrum", "--d", "7", "--q", "9", "--out", str(tmp_path)]) == EXIT_USAGE
    assert "phase index" in capsys.readouterr().err


def test_spectrum_residual_failure(tmp_path, monkeypatch):
    monkeypatch.setattr(commands, "residual", lambda walk, pair: 1.0)
    assert main(["spectrum", "--d", "5", "--out", str(tmp_path)]) == EXIT_VIOLATION
    assert _load(tmp_path / "spectrum.json")["summary"]["all_passed"] is False


def test_output_dir_from_environment(tmp_path, monkeypatch):
    monkeypatch.setenv(OUTPUT_DIR_ENV_VAR, str(tmp_path / "env"))
    assert main(["spectrum", "--d", "5"]) == EXIT_OK
    assert (tmp_path / "env" / "spectrum.json").exists()


def test_unwritable_output(tmp_path):
    blocker = tmp_path / "blocker"
    blocker.write_text("", encoding="utf-8")
    assert main(["spectrum", "--d", "5", "--out", str(blocker / "sub")]) == EXIT_IO


# --- overlaps ---

def test_overlaps_prime(tmp_path):
    assert main(["overlaps", "--d", "31", "--q", "1", "--q-prime", "7", "--out", str(tmp_path)]) == EXIT_OK
    document = _load(tmp_path / "overlaps.json")
    assert len(document["rows"]) == 62 * 62
    assert max(row["squared"] for row in document["rows"]) <= 1 / 31 + 1e-9
    assert document["summary"]["bound_satisfied"] is True
    assert document["summary"]["grid"] == "full"


def test_overlaps_composite_reports_violation(tmp_path):
    assert main(["overlaps", "--d", "33", "--q", "1", "--q-prime", "7", "--out", str(tmp_path)]) == EXIT_OK
    summary = _load(tmp_path / "overlaps.json")["summary"]
    assert summary["bound_satisfied"] is False
    assert summary["analytic"] is False


def test_overlaps_equal_phase_indices(tmp_path):
    assert main(["overlaps", "--d", "7", "--q", "2", "--q-prime", "9", "--out", str(tmp_path)]) == EXIT_USAGE


# --- dynamics ---

def test_dynamics_middle(tmp_path):
    argv = ["dynamics", "--scenario", "middle", "--d", "11", "--steps", "6", "--switch-step", "2",
            "--format", "csv", "--out", str(tmp_path)]
    assert main(argv) == EXIT_OK
    rows = _csv_rows(tmp_path / "dynamics_middle_tv.csv")
    assert [int(row["t"]) for row in rows] == list(range(7))
    assert [int(row["q_applied"]) for row in rows] == [-1, 0, 0, 1, 0, 0, 0]
    # the initial state is uniform and stationary until the kick
    assert [float(row["tv"]) for row in rows[:3]] == pytest.approx([0.0, 0.0, 0.0], abs=1e-12)
    assert float(rows[3]["tv"]) > 1e-3
    distribution = _csv_rows(tmp_path / "dynamics_middle_distribution.csv")
    assert len(distribution) == 7
    assert len(distribution[0]) == 1 + 11


def test_dynamics_custom_needs_schedule(tmp_path):
    assert main(["dynamics", "--scenario", "custom", "--d", "5", "--steps", "3", "--out", str(tmp_path)]) == EXIT_USAGE


def test_dynamics_custom(tmp_path):
    argv = ["dynamics", "--scenario", "custom", "--schedule", "0:0,2:3", "--d", "7", "--steps", "4",
            "--record-every", "2", "--out", str(tmp_path)]
    assert main(argv) == EXIT_OK
    document = _load(tmp_path / "dynamics_custom_tv.json")
    assert [row["t"] for row in document["rows"]] == [0, 2, 4]
    assert document["summary"]["schedule"] == [[0, "0"], [2, "3"]]


# --- dirac ---

def test_dirac(tmp_path):
    argv = ["dirac", "--mu", "1", "--mu-prime", "0", "--k-prime", "1", "--windows", "20,80",
            "--format", "dat", "--out", str(tmp_path)]
    assert main(argv) == EXIT_OK
    text = (tmp_path / "dirac.dat").read_text(encoding="utf-8")
    data = [line.split() for line in text.splitlines() if not line.startswith("#")]
    assert len(data) == 2
    assert float(data[1][-1]) <= 1e-3


def test_dirac_equal_slopes(tmp_path):
    assert main(["dirac", "--mu", "1", "--mu-prime", "1", "--out", str(tmp_path)]) == EXIT_USAGE


# --- sweep ---

def test_sweep_primes(tmp_path):
    argv = ["sweep", "--d-values", "5,7", "--pairs", "1:2,0:3", "--coin", "random", "--seed", "5",
            "--out", str(tmp_path)]
    assert main(argv) == EXIT_OK
    document = _load(tmp_path / "sweep.json")
    assert len(document["rows"]) == 4
    assert document["summary"]["prime_violations"] == 0
    assert {row["seed"] for row in document["rows"]} == {5}


def test_sweep_bad_pairs(tmp_path):
    assert main(["sweep", "--d-values", "5", "--pairs", "1-2", "--out", str(tmp_path)]) == EXIT_USAGE
