import json

import numpy as np
import pandas as pd
import pytest

from cli.interface import build_parser, config_from_args, run_cli
from cli.writers import barycentric, scatter_svg, to_csv_text
from core.utils.exceptions import ValidationError


def run(tmp_path, *args, name="out.txt"):
    out = tmp_path / name
    code = run_cli([*args, "--out", str(out)])
    return code, (out.read_text(encoding="utf-8") if out.exists() else None)


def test_counts_csv(tmp_path):
    code, text = run(tmp_path, "counts", "--system", "Prolate", "--params", "2.4", "-D", "6", name="c.csv")
    assert code == 0
    frame = pd.read_csv(tmp_path / "c.csv", dtype={"class": str})
    assert list(frame["class"]) == ["00", "01", "10", "11", "total"]
    assert (frame["predicted"] == frame["computed"]).all()
    assert frame["computed"].iloc[-1] == 49


def test_spectrum_csv_columns(tmp_path):
    code, _ = run(tmp_path, "spectrum", "--system", "Cylindrical", "-D", "4", name="s.csv")
    assert code == 0
    frame = pd.read_csv(tmp_path / "s.csv")
    assert len(frame) == 25
    assert {"m1_raw", "m2_raw", "m1_scaled", "m2_scaled"} <= set(frame.columns)
    np.testing.assert_allclose(frame["m1_scaled"], frame["m1_raw"] / 5.0)


def test_raw_scaling_drops_scaled_columns(tmp_path):
    code, _ = run(tmp_path, "spectrum", "--system", "Cylindrical", "-D", "2", "--scaling", "raw", name="r.csv")
    assert code == 0
    assert not any(c.endswith("_scaled") for c in pd.read_csv(tmp_path / "r.csv").columns)


def test_spectrum_json(tmp_path):
    code, text = run(tmp_path, "spectrum", "--system", "Lame", "--params", "0", "1", "2.4", "-D", "3", "--format", "json")
    assert code == 0
    payload = json.loads(text)
    assert payload["degree"] == 3
    assert payload["hbar"] == pytest.approx(0.25)
    assert len(payload["states"]) == 16
    assert all(s["label"].startswith("E") for s in payload["states"])


def test_output_is_deterministic(tmp_path):
    args = ("spectrum", "--system", "Ellipsoidal", "--params", "1", "2", "5", "8", "-D", "4")
    _, first = run(tmp_path, *args, name="a.csv")
    _, second = run(tmp_path, *args, name="b.csv")
    assert first == second


def test_actions_csv_sum(tmp_path):
    code, _ = run(tmp_path, "actions", "--system", "Oblate", "--params", "2.4", "-D", "5", name="j.csv")
    assert code == 0
    frame = pd.read_csv(tmp_path / "j.csv")
    np.testing.assert_allclose(frame["J_sum"], 1.0, atol=1e-6)


def test_svg_outputs(tmp_path):
    code, text = run(tmp_path, "spectrum", "--system", "Prolate", "--params", "2.4", "-D", "5", "--format", "svg")
    assert code == 0
    assert text.startswith("<svg") and text.count("<circle") == 36
    code, text = run(tmp_path, "actions", "--system", "Spherical23", "-D", "3", "--format", "svg")
    assert code == 0
    assert "<svg" in text


def test_eigenfunction_text(tmp_path):
    code, text = run(tmp_path, "eigenfunction", "--system", "Prolate", "--params", "2.4", "-D", "4", "--state", "m=0,d=2,k=0")
    assert code == 0
    lines = text.splitlines()
    assert lines[0].startswith("# system Prolate")
    assert any(line.startswith("# harmonic_residual") for line in lines)
    body = [line for line in lines if not line.startswith("#")]
    assert all(sum(int(e) for e in line.split()[1:]) == 4 for line in body)


def test_oracle_check_cli(tmp_path):
    code, text = run(tmp_path, "oracle-check", "--system", "Cylindrical", "-D", "4", "--format", "json")
    assert code == 0
    assert json.loads(text)["passed"] is True


def test_monodromy_cli(tmp_path):
    code, text = run(tmp_path, "monodromy", "--system", "Prolate", "--params", "2.4", "-D", "20", "--format", "json")
    assert code == 0
    report = json.loads(text)
    assert report["omega"] == 4
    assert report["matrix"] == [[1, 0], [4, 1]]


def test_config_file_with_overrides(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"system": {"kind": "Prolate", "params": [3.0]}, "degree": 2}), encoding="utf-8")
    args = build_parser().parse_args(["spectrum", "--config", str(path), "-D", "5", "--params", "2.4"])
    config = config_from_args(args)
    assert config.degree == 5
    system = config.system
    params = system["params"] if isinstance(system, dict) else system.params
    assert list(params) == [2.4]


def test_bad_parameters_exit_2(tmp_path):
    assert run(tmp_path, "spectrum", "--system", "Prolate", "--params", "0.5", "-D", "3")[0] == 2
    assert run(tmp_path, "spectrum", "--system", "Prolate", "--params", "2.4")[0] == 2
    assert run(tmp_path, "counts", "--system", "Cylindrical", "-D", "3", "--format", "svg")[0] == 2
    assert run(tmp_path, "oracle-check", "--system", "Cylindrical", "-D", "9")[0] == 2
    assert run(tmp_path, "spectrum", "--system", "Cylindrical", "-D", "3", "--classes", "0a")[0] == 2
    assert run(tmp_path, "eigenfunction", "--system", "Cylindrical", "-D", "3", "--state", "m1")[0] == 2


def test_unknown_system_is_a_usage_error():
    with pytest.raises(SystemExit) as info:
        run_cli(["spectrum", "--system", "Toroidal", "-D", "3"])
    assert info.value.code == 2


def test_state_selector_must_be_unique(tmp_path):
    assert run(tmp_path, "eigenfunction", "--system", "Cylindrical", "-D", "4", "--state", "d=0")[0] == 2


def test_stdout_when_no_out(capsys):
    assert run_cli(["counts", "--system", "S2Spherical", "-D", "2"]) == 0
    assert "total" in capsys.readouterr().out


def test_writers():
    text = to_csv_text([{"a": 1, "b": 0.5}, {"a": 2, "b": None}])
    assert text == "a,b\n1,0.5\n2,\n"
    np.testing.assert_allclose(barycentric(np.array([[0.0, 2.0, 0.0]])), [[1.0, 0.0]])
    svg = scatter_svg(np.array([[0.0, 0.0], [1.0, 1.0]]), ["red", "blue"], "x", "y")
    assert svg.count("<circle") == 2


def test_validation_error_is_value_error():
    assert issubclass(ValidationError, ValueError)


def test_spectrum_svg_draws_the_classical_image(tmp_path):
    code, text = run(tmp_path, "spectrum", "--system", "Oblate", "--params", "2.4", "-D", "4", "--format", "svg")
    assert code == 0
    assert text.count("<polyline") == 1
    code, text = run(tmp_path, "spectrum", "--system", "S2Spherical", "-D", "3", "--format", "svg")
    assert code == 0
    assert "<polyline" not in text


def test_affine_flag_adds_presented_columns(tmp_path):
    code, _ = run(
        tmp_path, "spectrum", "--system", "Cylindrical", "-D", "2", "--affine", "1", "0", "0", "1", "0.5", "0", name="p.csv"
    )
    assert code == 0
    frame = pd.read_csv(tmp_path / "p.csv")
    np.testing.assert_allclose(frame["x_presented"], frame["m1_scaled"] + 0.5)
    np.testing.assert_allclose(frame["y_presented"], frame["m2_scaled"])


def test_permute_flag(tmp_path):
    code, _ = run(tmp_path, "spectrum", "--system", "Spherical23", "-D", "2", "--permute", "1", "0", "2", "3", name="q.csv")
    assert code == 0
    assert run(tmp_path, "spectrum", "--system", "Spherical23", "-D", "2", "--permute", "0", "0", "1", "2")[0] == 2


def test_pair_gaps_cli(tmp_path):
    code, text = run(tmp_path, "pair-gaps", "--system", "Oblate", "--params", "2.4", "-D", "6", "--format", "json")
    assert code == 0
    payload = json.loads(text)
    assert payload["system"] == "Oblate"
    assert {"m", "gap", "ratio", "lower_class", "upper_class"} <= set(payload["gaps"][0])
    assert run(tmp_path, "pair-gaps", "--system", "Cylindrical", "-D", "3")[0] == 2
