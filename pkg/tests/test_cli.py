import json
import subprocess
import sys

import pytest

from monogen.cli import main

BICOMPLEX = '{"m": 2, "n": 2}'
DUAL3 = '{"m": 1, "n": 3, "upsilon": [{"r": 2, "s": 2, "p": 3, "re": 1}]}'
BAD_PROP2 = '{"m": 2, "n": 4, "upsilon": [{"r": 3, "s": 3, "p": 4, "re": 1}], "u_map": {"3": 1, "4": 2}}'
DUAL3_FRAME = '{"vectors": [[[0, 1], 0, [0, 0.5]], [0, 1, 0]]}'
SQUARE = '{"F": [{"terms": [{"poly": [0, 0, 1]}]}]}'
LAP3 = '{"N": 2, "terms": [{"alpha": [2,0,0], "c": 1}, {"alpha": [0,2,0], "c": 1}, {"alpha": [0,0,2], "c": 1}]}'


def run(argv, capsys):
    code = main(argv)
    return code, json.loads(capsys.readouterr().out)


def test_validate_bicomplex(capsys):
    code, out = run(["validate", BICOMPLEX], capsys)
    assert code == 0 and out["valid"] and out["semi_simple"]


def test_validate_prop2_violation(capsys):
    code, out = run(["validate", BAD_PROP2], capsys)
    assert code == 1 and not out["valid"]
    assert out["violations"][0]["indices"] == [1, 3, 3]


def test_check_cr(capsys):
    code, out = run(["check-cr", DUAL3, "--frame", DUAL3_FRAME, "--function", SQUARE, "--x", "0.3", "0.1", "-0.2"], capsys)
    assert code == 0 and out["max_residual"] <= 1e-7


def test_check_cr_grid(capsys):
    code, out = run(["check-cr", DUAL3, "--frame", DUAL3_FRAME, "--function", SQUARE,
                     "--grid", "0:1:2", "--grid", "0:1:2", "--grid", "0:0:1"], capsys)
    assert code == 0 and len(out["points"]) == 4


def test_invert_and_singular(capsys):
    code, out = run(["invert", DUAL3, "--element", "[1, 1, 0]"], capsys)
    assert code == 0 and [z["re"] for z in out["inverse"]] == [1, -1, 1]
    code, out = run(["invert", DUAL3, "--element", "[0, 1, 0]"], capsys)
    assert code == 1 and out["u"] == 1


def test_resolvent_and_pole(capsys):
    frame = '{"vectors": [[0, 1, 0], [0, 0, 1]]}'
    code, out = run(["resolvent", DUAL3, "--frame", frame, "--x", "0", "1", "0", "--t", "1"], capsys)
    assert code == 0 and [z["re"] for z in out["resolvent"]] == [1, 1, 1]
    assert out["Q"]["3,3"]["re"] == 1
    code, out = run(["resolvent", DUAL3, "--frame", frame, "--x", "2", "0", "0", "--t", "2"], capsys)
    assert code == 1


def test_eval_and_contour_agree(capsys):
    args = [DUAL3, "--frame", DUAL3_FRAME, "--function", SQUARE, "--x", "0.3", "0.1", "-0.2"]
    _, a = run(["eval"] + args, capsys)
    _, b = run(["eval-contour", "--assume-convex"] + args, capsys)
    for za, zb in zip(a["points"][0]["value"], b["points"][0]["value"]):
        assert abs(za["re"] - zb["re"]) < 1e-8 and abs(za["im"] - zb["im"]) < 1e-8
    assert b["domain_convexity"] == "asserted by caller"


def test_derive(capsys):
    code, out = run(["derive", DUAL3, "--frame", DUAL3_FRAME, "--function", SQUARE, "--order", "1", "--x", "1", "0", "0"], capsys)
    assert code == 0 and out["value"][0]["re"] == 2


def test_pde_commands(capsys):
    code, out = run(["char-eq", DUAL3, "--frame", DUAL3_FRAME, "--pde", LAP3], capsys)
    assert code == 0 and out["vanishes"]
    code, out = run(["theorem4", DUAL3, "--frame", DUAL3_FRAME, "--pde", LAP3], capsys)
    assert code == 0 and out["hypotheses_hold"]
    code, out = run(["check-pde", DUAL3, "--frame", DUAL3_FRAME, "--function", SQUARE, "--pde", LAP3,
                     "--x", "0.1", "0.2", "0.3"], capsys)
    assert code == 0 and out["max_residual"] <= 1e-5


def test_p_scan(capsys):
    code, out = run(["p-scan", "--pde", LAP3, "--box=-10:10", "--box=-10:10"], capsys)
    assert code == 0 and out["verdict"] == "no_root_found"
    wave = '{"N": 2, "terms": [{"alpha": [2,0], "c": 1}, {"alpha": [0,2], "c": -1}]}'
    code, out = run(["p-scan", "--pde", wave, "--box=-2:2"], capsys)
    assert code == 1 and out["verdict"] == "sign_change_found"


def test_char_eq_failure(capsys):
    frame = '{"vectors": [[[0, 2], 0, 0], [0, 1, 0]]}'
    code, out = run(["char-eq", DUAL3, "--frame", frame, "--pde", LAP3], capsys)
    assert code == 1 and not out["vanishes"]


@pytest.mark.parametrize("argv,path", [
    (["validate", "{nope"], "$"),
    (["validate", '{"m": 1}'], "$.n"),
    (["eval", DUAL3, "--frame", DUAL3_FRAME, "--function", SQUARE, "--x", "1", "2"], "--x"),
    (["char-eq", DUAL3, "--frame", DUAL3_FRAME, "--pde", '{"N": 2, "terms": [{"alpha": [2, 0], "c": 1}]}'], "$.terms"),
])
def test_input_errors(argv, path, capsys):
    code, out = run(argv, capsys)
    assert code == 2 and out["path"] == path and "file" in out


def test_missing_file(tmp_path, capsys):
    code, out = run(["validate", str(tmp_path / "nope.json")], capsys)
    assert code == 2 and out["file"].endswith("nope.json")


def test_emit_schema(capsys):
    code, out = run(["--emit-schema"], capsys)
    assert code == 0 and set(out) >= {"algebra", "frame", "function", "pde"}


def test_subprocess_entry_point():
    proc = subprocess.run([sys.executable, "-m", "monogen", "validate", BICOMPLEX], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["valid"] is True
    proc = subprocess.run([sys.executable, "-m", "monogen", "validate", BAD_PROP2], capture_output=True, text=True)
    assert proc.returncode == 1
