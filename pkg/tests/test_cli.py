"""CLI behavior: wiring, exit codes, determinism, JSON round trips.

Commands run in-process through main(argv) so the tests stay fast; the
console entry point uses the same function.
"""

import json

import pytest

from equik.cli import main
from equik.reports import report_from_json_dict, validate


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_rokhlin_z2_text(capsys):
    code, out, err = run(capsys, "rokhlin", "z2", "2")
    assert code == 0
    assert out == "lower 2 (witness Z_2), upper 6 (join k=7)\n"
    assert err == ""


def test_rokhlin_circle_text(capsys):
    code, out, _ = run(capsys, "rokhlin", "circle", "3")
    assert code == 0
    assert out == "lower 3 (witness Z), upper 3 (join k=4)\n"


def test_join_ktheory_text(capsys):
    code, out, _ = run(capsys, "join", "ktheory", "3", "2")
    assert code == 0
    assert out == "K0 rank 1, K1 rank 4; oracle: consistent\n"


def test_join_ktheory_skips_oracle_when_large(capsys):
    code, out, _ = run(capsys, "join", "ktheory", "9", "6")
    assert code == 0
    assert out.endswith("oracle: skipped\n")


def test_join_homology_text(capsys):
    code, out, _ = run(capsys, "join", "homology", "3", "2")
    assert code == 0
    assert out == "H~0: 0\nH~1: Z^4\n"


def test_group_tensor_text(capsys):
    code, out, _ = run(capsys, "group", "tensor", "Z_4", "Z_6")
    assert code == 0
    assert out == "Z_2\n"


def test_rep_lambda_text(capsys):
    code, out, _ = run(capsys, "rep", "lambda", "3")
    assert code == 0
    assert "coefficients: -3 3" in out
    assert "lambda^3 = -3*lambda^1 + 3*lambda^2" in out


def test_rep_ideal_powers(capsys):
    code, out, _ = run(capsys, "rep", "ideal-powers", "z3", "--max-power", "2")
    assert code == 0
    assert out == "I^0/I^1: Z\nI^1/I^2: Z_3\n"


def test_model_inspection(capsys):
    code, out, _ = run(capsys, "model", "trunc-z2:3")
    assert code == 0
    assert "group: Z ⊕ Z_4" in out
    assert "max nonvanishing ideal power: 2" in out


def test_determinism_byte_identical(capsys):
    _, first, _ = run(capsys, "rokhlin", "z6-collapse", "1")
    _, second, _ = run(capsys, "rokhlin", "z6-collapse", "1")
    assert first == second
    _, third, _ = run(capsys, "join", "homology", "2", "3")
    _, fourth, _ = run(capsys, "join", "homology", "2", "3")
    assert third == fourth


def test_exit_code_for_bad_input(capsys):
    code, out, err = run(capsys, "rokhlin", "product-z2", "2", "z2")
    assert code == 2
    assert out == ""
    assert "error:" in err


def test_exit_code_for_unsupported(capsys):
    code, _, err = run(capsys, "rep", "ring", "q8")
    assert code == 3
    assert "unsupported:" in err
    code, _, err = run(capsys, "rep", "lambda", "4")
    assert code == 3
    code, _, err = run(capsys, "rokhlin", "commutative", "so3", "2")
    assert code == 3


def test_linalg_commands(tmp_path, capsys):
    mfile = tmp_path / "m.json"
    mfile.write_text(json.dumps(
        {"rows": "2", "cols": "2", "entries": ["2", "4", "6", "8"]}
    ))
    code, out, _ = run(capsys, "linalg", "snf", str(mfile))
    assert code == 0
    assert out.splitlines()[0] == "invariant factors: 2 4"
    code, out, _ = run(capsys, "linalg", "hnf", str(mfile), "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["rank"] == "2"
    assert payload["H"]["entries"] == ["2", "0", "0", "4"]


def test_missing_file_is_input_error(capsys):
    code, _, err = run(capsys, "linalg", "snf", "/no/such/file.json")
    assert code == 2
    assert "error:" in err


def test_json_report_revalidates(tmp_path, capsys):
    code, out, _ = run(capsys, "rokhlin", "product-z2", "2", "z5", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["lower"] == "2"
    assert payload["upper"] == "6"
    assert validate(report_from_json_dict(payload))
    rfile = tmp_path / "report.json"
    rfile.write_text(out)
    code, out, _ = run(capsys, "validate", str(rfile))
    assert code == 0
    assert out == "valid\n"


def test_validate_flags_forged_file(tmp_path, capsys):
    code, out, _ = run(capsys, "rokhlin", "z2", "2", "--json")
    payload = json.loads(out)
    payload["lower"] = "5"
    for cert in payload["certificates"]:
        if cert["role"] == "lower":
            cert["power"] = "5"
    rfile = tmp_path / "forged.json"
    rfile.write_text(json.dumps(payload))
    code, out, _ = run(capsys, "validate", str(rfile))
    assert code == 1
    assert out == "invalid\n"


def test_validate_bad_json_is_input_error(tmp_path, capsys):
    rfile = tmp_path / "broken.json"
    rfile.write_text("{not json")
    code, _, err = run(capsys, "validate", str(rfile))
    assert code == 2


def test_meta_goes_to_stderr(capsys):
    code, out, err = run(capsys, "rokhlin", "z2", "1", "--meta")
    assert code == 0
    assert "meta:" not in out
    assert "meta: command=rokhlin" in err


def test_commutative_text(capsys):
    code, out, _ = run(capsys, "rokhlin", "commutative", "z2", "4")
    assert code == 0
    assert out == "dim 3, ind 4\n"


def test_finite_existence_text(capsys):
    code, out, _ = run(capsys, "rokhlin", "finite", "z5", "2")
    assert code == 0
    assert out.startswith("existence-only:")


def test_tensor_rule_cli(capsys):
    code, out, _ = run(capsys, "rokhlin", "tensor-rule", "sum", "1", "4", "2", "6")
    assert code == 0
    assert out == "lower 0, upper 10 (rule sum)\n"
    code, out, _ = run(
        capsys, "rokhlin", "tensor-rule", "min", "0", "infinity", "0", "0"
    )
    assert code == 0
    assert out == "lower 0, upper 0 (rule min)\n"
    code, _, err = run(capsys, "rokhlin", "tensor-rule", "absorb", "0", "4", "0", "1")
    assert code == 2


def test_z6_collapse_text(capsys):
    code, out, _ = run(capsys, "rokhlin", "z6-collapse", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "factor 1: lower 2 (witness Z_2), upper 6 (join k=7)"
    assert lines[1] == "factor 2: lower 2 (witness Z_3), upper infinity"
    assert lines[2] == "product: lower 0, upper 0 (rule min)"
    assert lines[3].startswith("finding:")


def test_mv_delta_text(capsys):
    code, out, _ = run(capsys, "join", "mv-delta", "3", "4")
    assert code == 0
    assert out == "map shape: 7 x 12\nkernel rank: 1\ncokernel: Z^6\n"
