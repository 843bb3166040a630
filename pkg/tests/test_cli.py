from __future__ import annotations

import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from tropsign.cli import run

DATA = Path(__file__).resolve().parent.parent / "data"
EXAMPLE = str(DATA / "worked_example.json")


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    return code, json.loads(out.getvalue())


def write(tmp_path, doc, name="p.json"):
    p = tmp_path / name
    p.write_text(doc if isinstance(doc, str) else json.dumps(doc))
    return str(p)


def test_res_sign_example():
    code, out = call("res-sign", "--input", EXAMPLE, "--gamma", "gamma", "--sigma", "sigma")
    assert code == 0
    assert (out["ratio"], out["mv_parity"], out["mv2"]) == ("+1", 0, 0)
    code, out = call("res-sign", "--input", EXAMPLE, "--gamma", "gamma", "--sigma", "delta")
    assert code == 0 and out["ratio"] == "-1" and out["mv2"] == 1


def test_res_sign_defaults_to_first_two_gradings():
    _, out = call("res-sign", "--input", EXAMPLE)
    assert (out["gamma"], out["sigma"], out["ratio"]) == ("gamma", "sigma", "+1")


def test_res_vertices_example():
    code, out = call("res-vertices", "--input", EXAMPLE)
    assert code == 0
    assert sorted(map(tuple, out["vertices"])) == sorted([(2, 0, 0, 0, 1), (0, 2, 1, 0, 0), (1, 1, 0, 1, 0)])
    assert out["seeds_used"] == 200


def test_file_order_is_respected(tmp_path):
    # same support with points listed backwards: vertex coordinates follow the file
    doc = json.loads(Path(EXAMPLE).read_text())
    doc["supports"][0] = [[1], [0]]
    g = doc["gradings"]
    for k in g:
        g[k][0], g[k][1] = g[k][1], g[k][0]
    path = write(tmp_path, doc)
    _, out = call("res-vertices", "--input", path)
    assert (0, 2, 0, 0, 1) in map(tuple, out["vertices"])
    _, out = call("res-sign", "--input", path, "--gamma", "gamma", "--sigma", "delta")
    assert out["ratio"] == "-1"


def test_sylvester_example():
    code, out = call("sylvester", "--input", EXAMPLE)
    assert code == 0
    terms = {t["monomial"]: t["coefficient"] for t in out["polynomial"]}
    assert terms == {"a_0^2*b_2": 1, "a_1^2*b_0": 1, "a_0*a_1*b_1": -1}


def test_mv_unit_segments():
    code, out = call("mv", "--input", str(DATA / "unit_segments.json"))
    assert code == 0 and out["mixed_volume"] == 1


def test_mv2_and_signs():
    seg = str(DATA / "unit_segments.json")
    _, out = call("mv2", "--input", seg)
    assert (out["mv2"], out["sign"]) == (0, "+1")   # zeta = (1, 1) is the sum of the edges
    assert call("vieta-sign", "--input", seg)[1]["sign"] == "-1"
    assert call("binomial-sign", "--input", seg)[1]["sign"] == "-1"
    assert call("check-developed", "--input", seg)[1]["verdict"] == "prickly"


def test_precondition_failure_exit_code():
    squares = str(DATA / "unit_squares.json")
    code, out = call("mv2", "--input", squares)
    assert code == 2
    assert out["error"]["kind"] == "not_2_developed"
    assert out["error"]["witness"] == [1, 0]
    code, out = call("check-developed", "--input", squares)
    assert code == 0 and out == {"verdict": "neither", "witness": [1, 0]}


def test_grading_tie_exit_code(tmp_path):
    doc = json.loads(Path(EXAMPLE).read_text())
    doc["gradings"]["flat"] = [1, 1, 1, 1, 1]
    code, out = call("res-sign", "--input", write(tmp_path, doc), "--gamma", "flat")
    assert code == 2 and out["error"]["kind"] == "grading_tie"


@pytest.mark.parametrize("doc", [
    "{not json",
    {"dimension": 2, "supports": [[[0, 0], [1]]]},
    {"dimension": 1, "supports": [[[0], [0]]]},
    {"dimension": 1, "supports": [[[0], [1]]], "gradings": {"g": [0, 1]}},
    {"dimension": 0, "supports": []},
    {"dimension": 2, "supports": [[[0, 0], [1, 0]], [[0, 0], [0, 1]]]},
])
def test_malformed_input(tmp_path, doc):
    code, out = call("mv2", "--input", write(tmp_path, doc))
    assert code == 1 and out["error"]["kind"] == "malformed_input"


def test_missing_file_and_bad_usage(tmp_path):
    assert call("mv", "--input", str(tmp_path / "nope.json"))[0] == 1
    code, out = call("frobnicate", "--input", EXAMPLE)
    assert code == 1 and "kind" in out["error"]


def test_seed_priority(tmp_path, monkeypatch):
    path = write(tmp_path, {**json.loads((DATA / "unit_segments.json").read_text()), "seed": 11})
    assert call("mv", "--input", path)[1]["seed"] == 11
    monkeypatch.setenv("RES_SIGN_SEED", "5")
    assert call("mv", "--input", path)[1]["seed"] == 5
    assert call("mv", "--input", path, "--seed", "3")[1]["seed"] == 3
    monkeypatch.setenv("RES_SIGN_SEED", "x")
    assert call("mv", "--input", path)[0] == 1


def test_byte_identical_runs():
    cmd = [sys.executable, "-m", "tropsign", "res-sign", "--input", EXAMPLE, "--seed", "4"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and json.loads(first)["seed"] == 4
