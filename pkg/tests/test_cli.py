import json

import pytest

from ellk3.cli import main
from ellk3.invariants import r96
from ellk3.weierstrass import SurfaceParams

GENERIC = SurfaceParams.make(
    [3, -1, 4, 1, -5, 9, 2, -6, 5], [3, 5, -8, 9, 7, -9, 3, 2, -3, 8, 4, -6, 2]
)
NONMIN = SurfaceParams.make([0, 0, 0, 0, 1, 0, 0, 0, 0], [0] * 6 + [1] + [0] * 6)


def write_surface(tmp_path, u, name="u.json"):
    path = tmp_path / name
    path.write_text(json.dumps(u.to_json_dict()))
    return str(path)


def run(args):
    return main(args)


def test_classify_good_surface(tmp_path, capsys):
    inp = write_surface(tmp_path, GENERIC)
    assert run(["classify", "--input", inp]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["in_U"] and report["euler_sum"] == 24


def test_classify_i2_fixture_exit_0(tmp_path, capsys):
    from test_weierstrass import A1_SURFACE

    inp = write_surface(tmp_path, A1_SURFACE)
    assert run(["classify", "--input", inp]) == 0
    report = json.loads(capsys.readouterr().out)
    assert sum(1 for p in report["places"] if p["kodaira"] == "I2") == 1


def test_classify_not_in_U_exit_1(tmp_path, capsys):
    inp = write_surface(tmp_path, NONMIN)
    assert run(["classify", "--input", inp]) == 1
    assert not json.loads(capsys.readouterr().out)["in_U"]


def test_classify_output_file_deterministic(tmp_path):
    inp = write_surface(tmp_path, GENERIC)
    out1, out2 = str(tmp_path / "a.json"), str(tmp_path / "b.json")
    assert run(["classify", "--input", inp, "--output", out1]) == 0
    assert run(["classify", "--input", inp, "--output", out2]) == 0
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()


def test_classify_corrupt_input_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"g2": ["1", "2"]')  # truncated JSON
    assert run(["classify", "--input", str(bad)]) == 2
    bad.write_text('{"g2": ["1"], "g3": []}')  # wrong shape
    assert run(["classify", "--input", str(bad)]) == 2
    assert run(["classify", "--input", str(tmp_path / "missing.json")]) == 2
    capsys.readouterr()


def test_invariant_values_are_decimal_strings(tmp_path, capsys):
    inp = write_surface(tmp_path, GENERIC)
    assert run(["invariant", "r96", "--input", inp]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["declared_weight"] == 96
    assert data["value"] == str(r96(GENERIC).value)
    assert run(["invariant", "k552", "--input", inp]) == 0
    k = json.loads(capsys.readouterr().out)
    assert int(k["value"]) != 0 and k["declared_weight"] == 552
    assert run(["invariant", "delta264", "--input", inp]) == 0
    d = json.loads(capsys.readouterr().out)
    assert int(k["value"]) == int(d["value"]) * int(data["value"]) ** 3


def test_invariant_degenerate_exit_1(tmp_path, capsys):
    # r96 = 0 here, so delta264 reports an error
    u = SurfaceParams.make([1] + [0] * 8, [1, 0] + [0] * 11)
    inp = write_surface(tmp_path, u)
    assert run(["invariant", "delta264", "--input", inp]) == 1
    assert "error" in json.loads(capsys.readouterr().out)


def test_verify_small_run(tmp_path):
    out = str(tmp_path / "verify.json")
    code = run(["verify", "--seed", "7", "--trials", "3", "--output", out])
    assert code == 0
    rep = json.loads((tmp_path / "verify.json").read_text())
    assert rep["seed"] == 7 and rep["trials"] == 3 and rep["failures"] == []


def test_verify_rejects_bad_options(capsys):
    assert run(["verify", "--trials", "0"]) == 2
    assert run(["verify", "--trials", "1", "--modulus", "91"]) == 2
    capsys.readouterr()


def test_hilbert_json_and_oracle(tmp_path, capsys):
    assert run(["hilbert", "--max-degree", "12", "--oracle"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert rows[8] == {"degree": 8, "dim": 1, "oracle_dim": 1}
    assert rows[12]["dim"] == 2


def test_hilbert_csv_output(tmp_path):
    out = str(tmp_path / "h.csv")
    assert run(["hilbert", "--max-degree", "8", "--output", out]) == 0
    lines = (tmp_path / "h.csv").read_text().strip().splitlines()
    assert lines[0] == "degree,dim"
    assert lines[1] == "0,1" and lines[-1] == "8,1"


def test_hilbert_oracle_feasibility_exit_2(capsys):
    assert run(["hilbert", "--max-degree", "30", "--oracle"]) == 2
    capsys.readouterr()


def test_qseries_terms(capsys):
    assert run(["qseries", "--terms", "4"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["leading_exponent"] == -1
    assert data["coefficients"] == ["1", "264", "8244", "139520"]


def test_unknown_subcommand_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
