# tests/cli/test_writers.py

import csv
import io
import json

import numpy as np
import pytest

from qwalk_mub.cli.config import RunConfig
from qwalk_mub.cli.writers import render_csv, render_dat, render_json, write_table

ROWS = [
    {"m": 0, "tau": 1, "regime": "GENERIC", "residual": 1.5e-15, "passed": True},
    {"m": 0, "tau": -1, "regime": "GENERIC", "residual": np.float64(2.5e-15), "passed": np.bool_(True)},
]
SUMMARY = {"d": 7, "max_residual": 2.5e-15, "tolerance": float("inf")}


@pytest.fixture
def config(tmp_path):
    return RunConfig(command="spectrum", fmt="json", output_dir=str(tmp_path), seed=1, parameters={"d": 7})


def _body(text):
    return [line for line in text.splitlines() if not line.startswith("#")]


def test_json_document(config):
    document = json.loads(render_json(config, ROWS, SUMMARY))
    assert document["config"]["command"] == "spectrum"
    assert document["config"]["parameters"] == {"d": 7}
    assert document["rows"][1]["residual"] == 2.5e-15
    assert document["rows"][1]["passed"] is True
    assert document["summary"]["tolerance"] == "inf"


def test_csv_table(config):
    text = render_csv(config, ROWS, SUMMARY)
    lines = text.splitlines()
    assert lines[0].startswith("# config: ")
    assert json.loads(lines[0][len("# config: "):])["seed"] == 1
    assert lines[1].startswith("# summary: ")
    records = list(csv.DictReader(io.StringIO("\n".join(_body(text)))))
    assert [record["tau"] for record in records] == ["1", "-1"]
    assert records[0]["regime"] == "GENERIC"


def test_csv_union_of_columns(config):
    text = render_csv(config, [{"a": 1}, {"b": 2}], {})
    assert _body(text) == ["a,b", "1,", ",2"]


def test_dat_keeps_numeric_columns(config):
    text = render_dat(config, ROWS, SUMMARY)
    body = [line for line in text.splitlines() if not line.startswith("# config") and not line.startswith("# summary")]
    assert body[0] == "# m tau residual passed"
    assert body[1].split() == ["0", "1", "1.5e-15", "1"]
    assert body[2].split() == ["0", "-1", "2.5e-15", "1"]


def test_output_is_deterministic(config):
    assert render_json(config, ROWS, SUMMARY) == render_json(config, ROWS, SUMMARY)


@pytest.mark.parametrize("fmt", ["json", "csv", "dat"])
def test_write_table(tmp_path, fmt):
    config = RunConfig(command="spectrum", fmt=fmt, output_dir=str(tmp_path))
    path = write_table(tmp_path / "nested", "spectrum", config, ROWS, SUMMARY)
    assert path == tmp_path / "nested" / f"spectrum.{fmt}"
    assert path.read_text(encoding="utf-8").endswith("\n")


def test_write_table_unwritable(tmp_path, config):
    blocker = tmp_path / "blocker"
    blocker.write_text("", encoding="utf-8")
    with pytest.raises(OSError):
        write_table(blocker / "out", "spectrum", config, ROWS)
