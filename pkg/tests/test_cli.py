import json
import subprocess
import sys

import pytest

from trigspline.cli import run

EXAMPLE = "3\n1\n3\n2\n4\n1\n3\n1\n2\n"


@pytest.fixture
def data(tmp_path):
    def write(text=EXAMPLE, name="f.csv"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write


def cli(capsys, *argv):
    code = run([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_coeffs_json(capsys, data):
    code, out, _ = cli(capsys, "coeffs", "-i", data())
    doc = json.loads(out)
    assert code == 0
    assert doc["n"] == 9 and doc["grid_kind"] == 0
    assert doc["a0"] == pytest.approx(40 / 9, abs=1e-14)
    assert len(doc["a"]) == len(doc["b"]) == 4


def test_coeffs_constant_and_csv(capsys, data):
    code, out, _ = cli(capsys, "coeffs", "-i", data("2\n" * 7), "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "k,a,b"
    for line in lines[2:]:
        _, a, b = map(float, line.split(","))
        assert abs(a) < 1e-14 and abs(b) < 1e-14


@pytest.mark.parametrize("payload", ['{"values": [3,1,3,2,4,1,3,1,2]}', "[3,1,3,2,4,1,3,1,2]"])
def test_json_input(capsys, data, payload):
    code, out, _ = cli(capsys, "coeffs", "-i", data(payload, "f.json"))
    assert code == 0 and json.loads(out)["a0"] == pytest.approx(40 / 9)


def test_eval_csv(capsys, data):
    code, out, _ = cli(capsys, "eval", "-i", data(), "--points", 5)
    lines = out.split("\n")
    assert code == 0 and lines[0] == "t,value" and len(lines) == 7 and lines[-1] == ""
    t0, v0 = map(float, lines[1].split(","))
    assert t0 == 0.0 and v0 == pytest.approx(3.0, abs=1e-12)


def test_eval_constant(capsys, data):
    code, out, _ = cli(capsys, "eval", "-i", data("1.5\n" * 9), "-r", 2, "--points", 50)
    vals = [float(line.split(",")[1]) for line in out.splitlines()[1:]]
    assert code == 0 and max(abs(v - 1.5) for v in vals) < 1e-12


def test_eval_zero_points(capsys, data):
    code, out, _ = cli(capsys, "eval", "-i", data(), "--points", 0)
    assert code == 0 and out == "t,value\n"


def test_eval_irregular_vectors(capsys, data):
    for r in (1, 2, 3):
        code, out, _ = cli(capsys, "eval", "-i", data(), "-r", r, "--gamma", -0.5, 1.5, -0.7,
                           "--eta", 0.3, -0.7, -1.5, "--points", 100)
        assert code == 0 and len(out.splitlines()) == 101


def test_power_constant(capsys, data):
    code, out, _ = cli(capsys, "power", "-i", data("2\n" * 9), "-r", 1)
    doc = json.loads(out)
    assert code == 0
    assert doc["closed_form"] == pytest.approx(8.0, rel=1e-14)
    assert doc["quadrature"] == pytest.approx(8.0, rel=1e-12)
    assert doc["relative_gap"] < 1e-12


def test_power_unit_r2(capsys, data):
    code, out, _ = cli(capsys, "power", "-i", data(), "-r", 2)
    assert code == 0 and json.loads(out)["relative_gap"] <= 1e-6


def test_power_r0_warns(capsys, data):
    code, out, err = cli(capsys, "power", "-i", data(), "-r", 0, "--quad-points", 1024)
    doc = json.loads(out)
    assert code == 0 and "warning" in err
    assert doc["closed_form"] is None and doc["quadrature"] > 0


@pytest.mark.parametrize("oracle, r", [("linear", 1), ("cubic", 3)])
def test_compare_polynomial_oracles(capsys, data, oracle, r):
    code, out, _ = cli(capsys, "compare", "-i", data(), "-r", r, "--oracle", oracle, "--tol", 1e-6)
    doc = json.loads(out)
    assert code == 0 and doc["points"] == 1000 and doc["max_abs_dev"] <= 1e-6


def test_compare_trigpoly(capsys, data):
    code, out, _ = cli(capsys, "compare", "-i", data(), "--gamma", 1, 0, 0, "--eta", 1, 0, 0)
    assert code == 0 and json.loads(out)["max_abs_dev"] <= 1e-12


def test_compare_tolerance_exceeded(capsys, data):
    code, _, _ = cli(capsys, "compare", "-i", data(), "-r", 1, "--oracle", "cubic", "--tol", 1e-6)
    assert code == 1


def test_build_then_eval(capsys, data, tmp_path):
    spline = tmp_path / "s.json"
    assert cli(capsys, "build", "-i", data(), "-r", 3, "--I1", 1, "-o", spline)[0] == 0
    _, via_file, _ = cli(capsys, "eval", "--spline", spline, "--points", 64)
    _, direct, _ = cli(capsys, "eval", "-i", data(), "-r", 3, "--I1", 1, "--points", 64)
    assert via_file == direct


@pytest.mark.parametrize(
    "argv, code",
    [
        (["coeffs", "-i", "{short}", "--N", "9"], 2),
        (["coeffs", "-i", "{missing}"], 2),
        (["coeffs", "-i", "{bad}"], 2),
        (["coeffs", "-i", "{nan}"], 2),
        (["coeffs", "-i", "{even}"], 3),
        (["coeffs", "-i", "{example}", "--N", "8"], 3),
        (["eval", "-i", "{example}", "--gamma", "0", "0", "0"], 3),
        (["eval", "-i", "{example}", "--I1", "2"], 3),
        (["eval", "-i", "{example}", "-r", "-1"], 3),
        (["eval", "-i", "{example}", "--alpha", "3.141592653589793", "--gamma", "1", "0", "0",
          "--eta", "1", "0", "0"], 4),
        (["eval", "-i", "{example}", "--alpha", "1.0", "--max-m", "100"], 5),
    ],
)
def test_exit_codes(capsys, data, tmp_path, argv, code):
    files = {
        "short": data("1\n" * 8, "short.csv"),
        "missing": str(tmp_path / "nope.csv"),
        "bad": data("1\nx\n2\n", "bad.csv"),
        "nan": data("1\nnan\n2\n", "nan.csv"),
        "even": data("1\n" * 8, "even.csv"),
        "example": data(),
    }
    argv = [a.format(**files) for a in argv]
    got, _, err = cli(capsys, *argv)
    assert got == code
    assert err


def test_json_config_wins(capsys, data, tmp_path):
    cfg = tmp_path / "job.json"
    cfg.write_text(json.dumps({"r": 3, "I1": 1}))
    _, a, _ = cli(capsys, "eval", "-i", data(), "-r", 1, "--config", cfg, "--points", 20)
    _, b, _ = cli(capsys, "eval", "-i", data(), "-r", 3, "--I1", 1, "--points", 20)
    assert a == b
    cfg.write_text(json.dumps({"bogus": 1}))
    assert cli(capsys, "eval", "-i", data(), "--config", cfg)[0] == 3


def test_env_max_m(capsys, data, monkeypatch):
    argv = ("eval", "-i", data(), "--alpha", 1.0, "--points", 4, "--tail-tol", 1e-4)
    assert cli(capsys, *argv)[0] == 0
    monkeypatch.setenv("TRIGSPLINE_MAX_M", "10")
    assert cli(capsys, *argv)[0] == 5


def test_byte_identical_output(data, tmp_path):
    outs = []
    for i in range(2):
        out = tmp_path / f"o{i}.csv"
        subprocess.run(
            [sys.executable, "-m", "trigspline", "eval", "-i", data(), "-r", "2",
             "--gamma", "-0.5", "1.5", "-0.7", "--points", "257", "-o", str(out)],
            check=True,
        )
        outs.append(out.read_bytes())
    assert outs[0] == outs[1] and b"\r" not in outs[0]
