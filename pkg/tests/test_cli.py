import io
import json
import os

import pytest

from hurmod import cli


def run_cli(argv):
    out = io.StringIO()
    code = cli.main(argv, out=out)
    return code, out.getvalue()


def test_classnum_csv_example():
    code, output = run_cli(
        ["classnum", "--kind", "hurwitz", "--dmin", "-4", "--dmax", "0", "--format", "csv"]
    )
    assert code == 0
    lines = output.strip().splitlines()
    assert lines[0] == "D,value"
    assert "-4,1/2" in lines and "-3,1/3" in lines and "0,-1/12" in lines


def test_classnum_generalized_requires_level():
    code, _ = run_cli(["classnum", "--kind", "cohen", "--dmin", "-8", "--dmax", "0"])
    assert code == cli.EXIT_USAGE


def test_classnum_json_rationals_as_pairs():
    code, output = run_cli(
        ["classnum", "--kind", "hurwitz", "--dmin", "-4", "--dmax", "0", "--format", "json"]
    )
    assert code == 0
    rows = json.loads(output)
    assert {"D": -4, "value": [1, 2]} in rows


def test_series_json():
    code, output = run_cli(["series", "--kind", "SR", "--level", "3", "--dmax", "8"])
    assert code == 0
    payload = json.loads(output)
    assert payload["kind"] == "Rademacher"
    assert payload["coeffs"][0] == [0, -1, 1]


def test_verify_single_check_exit_zero():
    code, output = run_cli(
        ["verify", "--check", "lemma21", "--level", "11", "--dmax", "300"]
    )
    assert code == 0
    assert output.startswith("PASS lemma21")


def test_verify_unknown_check_is_usage_error():
    code, _ = run_cli(["verify", "--check", "nonsense"])
    assert code == cli.EXIT_USAGE


def test_verify_capacity_error_exit_three():
    code, _ = run_cli(
        ["verify", "--check", "mass-formula", "--level", "53"]
    )
    assert code == cli.EXIT_CAPACITY


def test_supersingular_json():
    code, output = run_cli(["supersingular", "--level", "11", "--prec", "12"])
    assert code == 0
    payload = json.loads(output)
    assert payload["algebra"] == [-1, -11]
    assert payload["class_count"] == 2
    assert sorted(payload["w"]) == [2, 3]
    assert payload["mass"] == [5, 6]
    assert all(theta[0] == 1 for theta in payload["thetas"])


def test_predict_csv_contains_no_prediction_row():
    code, output = run_cli(
        ["predict", "--level", "11", "--dmin", "-50", "--dmax", "-1", "--p", "5"]
    )
    assert code == 0
    rows = output.strip().splitlines()
    assert rows[0] == "D,hD,hD_mod_p,verdict,lvalue,curve_a4,curve_a6"
    no_prediction = [r for r in rows if r.startswith("-47,")]
    assert len(no_prediction) == 1
    assert "NoPrediction" in no_prediction[0]
    assert ",5,0," in no_prediction[0]


def test_predict_rejects_bad_range():
    code, _ = run_cli(["predict", "--level", "11", "--dmin", "-1", "--dmax", "-50", "--p", "5"])
    assert code == cli.EXIT_USAGE


def test_cache_round_trip_and_determinism(tmp_path):
    cache_path = tmp_path / "cache.json"
    args = [
        "--cache",
        str(cache_path),
        "classnum",
        "--kind",
        "hurwitz",
        "--dmin",
        "-40",
        "--dmax",
        "0",
        "--format",
        "csv",
    ]
    code, cold = run_cli(args)
    assert code == 0
    assert cache_path.exists()
    payload = json.loads(cache_path.read_text())
    assert payload["version"]
    assert any(key.startswith("classnum:1:") for key in payload["entries"])
    code, warm = run_cli(args)
    assert code == 0
    assert warm == cold  # byte-identical with and without a warm cache


def test_cache_corruption_is_nonfatal(tmp_path, capsys):
    cache_path = tmp_path / "cache.json"
    cache_path.write_text("{not json")
    code, output = run_cli(
        ["--cache", str(cache_path), "classnum", "--kind", "hurwitz", "--dmin", "-4", "--dmax", "0", "--format", "csv"]
    )
    assert code == 0
    assert "-3,1/3" in output
    err = capsys.readouterr().err
    assert "ignoring unreadable cache" in err


def test_cache_version_mismatch_ignored(tmp_path, capsys):
    cache_path = tmp_path / "cache.json"
    cache_path.write_text(json.dumps({"version": "0.0.0", "entries": {"classnum:1:-3": [999, 1]}}))
    code, output = run_cli(
        ["--cache", str(cache_path), "classnum", "--kind", "hurwitz", "--dmin", "-4", "--dmax", "0", "--format", "csv"]
    )
    assert code == 0
    assert "-3,1/3" in output  # the poisoned value was not trusted
    assert "mismatched version" in capsys.readouterr().err


def test_cache_env_var(tmp_path, monkeypatch):
    cache_path = tmp_path / "envcache.json"
    monkeypatch.setenv(cli.CACHE_ENV_VAR, str(cache_path))
    code, _ = run_cli(["classnum", "--kind", "hurwitz", "--dmin", "-8", "--dmax", "0"])
    assert code == 0
    assert cache_path.exists()
