"""CLI contract: exit codes, output schemas, determinism."""

import csv
import io
import json

import pytest

from intertwine.cli import main


def run(args, tmp_path, name="out"):
    path = tmp_path / f"{name}"
    code = main(args + ["--output", str(path)])
    return code, path.read_text() if path.exists() else ""


def test_verify_single_model_json(tmp_path):
    code, text = run(["verify", "--model", "hydrogen", "--nmax", "2"], tmp_path)
    assert code == 0
    payload = json.loads(text)
    assert set(payload) == {"run_config", "results", "summary", "timing"}
    assert payload["summary"]["failed"] == 0
    row = payload["results"][0]
    assert {"relation_id", "model", "params", "n", "residuals",
            "tolerances", "pass", "details"} <= set(row)
    ids = {r["relation_id"] for r in payload["results"]}
    assert "hydrogen/coupling-shift" in ids
    assert "hydrogen/mass-rescale" in ids
    assert "hydrogen/scaling-equivalence" in ids


def test_verify_respects_bound_state_truncation(tmp_path):
    code, text = run(["verify", "--model", "rm-hyp", "--g", "9", "--l", "0",
                      "--nmax", "5"], tmp_path)
    assert code == 0
    payload = json.loads(text)
    eig = [r for r in payload["results"] if r["relation_id"] == "rm-hyp/eigenpair"]
    assert eig and eig[0]["n"] == "0..1"
    assert "truncated" in eig[0]["details"].get("note", "")
    maps = [r for r in payload["results"]
            if r["relation_id"] == "rm-hyp/eigenstate-map"]
    assert {r["n"] for r in maps} == {0}


def test_verify_unachievable_tolerance_fails(tmp_path):
    code, _ = run(["verify", "--model", "hydrogen", "--nmax", "1",
                   "--tol-relation", "1e-30"], tmp_path)
    assert code == 1


def test_unknown_model_is_usage_error(tmp_path):
    assert main(["verify", "--model", "helium"]) == 2
    assert main(["oracle", "--model", "helium"]) == 2


def test_param_override_needs_single_model():
    assert main(["verify", "--g", "2.0"]) == 2


def test_invalid_params_rejected():
    assert main(["verify", "--model", "rm-hyp", "--g", "0.5", "--l", "0"]) == 2


def test_spectrum_csv_row_counts(tmp_path):
    code, text = run(["spectrum", "--model", "hydrogen", "--nmax", "5"], tmp_path)
    assert code == 0
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["n", "E_direct", "E_chain", "overlap"]
    assert len(rows) == 7
    assert float(rows[1][1]) == pytest.approx(-0.5)

    code, text = run(["spectrum", "--model", "hydrogen", "--nmax", "0"], tmp_path)
    assert code == 0
    assert len(list(csv.reader(io.StringIO(text)))) == 2  # header + n=0


def test_spectrum_unknown_model():
    assert main(["spectrum", "--model", "positronium"]) == 2


def test_spectrum_clamps_to_bound_count(tmp_path):
    code, text = run(["spectrum", "--model", "rm-hyp", "--g", "9", "--l", "0",
                      "--nmax", "5", "--format", "json"], tmp_path)
    assert code == 0
    payload = json.loads(text)
    assert "truncated" in payload["note"]


def test_oracle_defaults_and_k_zero(tmp_path):
    assert main(["oracle", "--k", "0"]) == 2
    code, text = run(["oracle", "--model", "cs", "--k", "3"], tmp_path)
    assert code == 0
    payload = json.loads(text)
    assert all(r["pass"] for r in payload["results"])
    assert all("fd-oracle" in r["relation_id"] for r in payload["results"])


def test_oracle_explicit_grids_show_order(tmp_path):
    code, text = run(["oracle", "--model", "cs", "--k", "2", "--grid", "64",
                      "--grid", "128", "--grid", "256"], tmp_path)
    assert code == 0
    payload = json.loads(text)
    for row in payload["results"]:
        assert abs(row["details"]["observed_order"] - 2.0) < 0.3


def test_csv_format(tmp_path):
    code, text = run(["verify", "--model", "ho", "--nmax", "1",
                      "--format", "csv"], tmp_path)
    assert code == 0
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["relation_id", "model", "params", "n", "check",
                       "residual", "tolerance", "pass"]
    assert all(len(r) == 8 for r in rows[1:])
    assert any(r[7] == "True" for r in rows[1:])


def test_json_results_byte_identical_across_runs(tmp_path):
    args = ["verify", "--model", "cs", "--nmax", "2", "--seed", "3"]
    _, text1 = run(args, tmp_path, "a")
    _, text2 = run(args, tmp_path, "b")
    r1 = json.dumps(json.loads(text1)["results"], sort_keys=True)
    r2 = json.dumps(json.loads(text2)["results"], sort_keys=True)
    assert r1.encode() == r2.encode()
    # everything outside "timing" is byte-identical
    p1, p2 = json.loads(text1), json.loads(text2)
    p1.pop("timing"), p2.pop("timing")
    assert json.dumps(p1, sort_keys=True) == json.dumps(p2, sort_keys=True)
