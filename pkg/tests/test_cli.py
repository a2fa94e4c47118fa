import json
import subprocess
import sys
from pathlib import Path


from growthexp.cli import run

ROOT = Path(__file__).resolve().parent.parent
CUSP = str(ROOT / "instances" / "cusp.json")


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


def write(tmp_path, obj, name="inst.json"):
    p = tmp_path / name
    p.write_text(json.dumps(obj) if not isinstance(obj, str) else obj)
    return str(p)


def test_growth_reports_cusp_exponent(capsys):
    code, out, _ = call(capsys, "growth", CUSP)
    assert code == 0
    first = out["functions"][0]
    assert first["growth_exponent"] == "1/3"
    assert first["le_one_flags"] == [True] * 4
    assert set(first) == {
        "name", "pullback", "growth_exponent", "geometric_degree", "curve_degree",
        "graph_degree", "tw_bound", "tw_bound_holds", "delta_cross_check",
        "le_one_flags", "bezout_equality_holds", "sample_estimate",
    }


def test_delta_from_polynomial(capsys):
    code, out, _ = call(capsys, "delta", "--poly", "t^2 - x^3", "--t", "t", "--x", "x")
    assert code == 0 and out["delta"] == "3/2"


def test_verify_cusp(capsys):
    code, out, _ = call(capsys, "verify", CUSP, "--seed", "7")
    assert code == 0 and out["passed"]
    assert all(c["passed"] for c in out["checks"])
    names = {c["name"] for c in out["checks"]}
    assert {"delta_cross_check", "tw_bound", "curve_equality", "fiber_injectivity",
            "sampling_consistency", "le_one_coherence", "normalization"} <= names


def test_other_subcommands(capsys):
    assert call(capsys, "degree", CUSP)[1]["curve_degree"] == 3
    code, out, _ = call(capsys, "rationalize", CUSP, "--pullback", "t")
    assert (out["functions"][0]["numerator"], out["functions"][0]["denominator"]) == ("y", "x")
    assert call(capsys, "enumerate", CUSP, "--max-degree", "3")[1]["exponents"] == ["1/3", "2/3", "1"]
    code, out, _ = call(capsys, "bezout", CUSP)
    assert code == 0 and out["geometric_degree"] == 2 and out["growth_exponent"] == "2/3"
    code, out, _ = call(capsys, "parse", "--expr", "y*x - 1/2", "--vars", "x,y")
    assert out["expression"] == "x*y - 1/2"
    assert call(capsys, "parse", CUSP)[1]["curve"]["gamma"] == ["t^2", "t^3"]


def test_input_errors_exit_2(capsys, tmp_path):
    assert call(capsys, "parse", "--expr", "2x", "--vars", "x")[0] == 2
    assert call(capsys, "growth", str(tmp_path / "missing.json"))[0] == 2
    assert call(capsys, "growth", write(tmp_path, "{not json"))[0] == 2
    bad = {"variables": ["x", "y"], "parameter": "t", "curve": {"gamma": ["t^2", "x"]},
           "functions": []}
    code, _, err = call(capsys, "growth", write(tmp_path, bad))
    assert code == 2 and "UnknownVariable" in err
    pole = {"variables": ["x", "y"], "parameter": "t", "curve": {"gamma": ["t^2", "t^3"]},
            "functions": [{"name": "f", "numerator": "1", "denominator": "x"}]}
    code, _, err = call(capsys, "growth", write(tmp_path, pole))
    assert code == 2 and "NotCHolomorphic" in err
    twice = {"variables": ["x", "y"], "parameter": "t", "curve": {"gamma": ["t^2", "t^4"]},
             "functions": [{"name": "f", "numerator": "x"}]}
    assert call(capsys, "rationalize", write(tmp_path, twice))[0] == 2


def test_verify_dir_collects_errors(capsys, tmp_path):
    good = json.loads(Path(CUSP).read_text())
    write(tmp_path, good, "a.json")
    write(tmp_path, {"variables": []}, "b.json")
    code, out, _ = call(capsys, "verify", "--dir", str(tmp_path))
    assert code == 2
    assert out["reports"][0]["passed"] and out["reports"][1]["error"] == "InstanceError"


def test_seed_precedence(capsys, tmp_path):
    inst = json.loads(Path(CUSP).read_text())
    inst["seed"] = 5
    path = write(tmp_path, inst)
    assert call(capsys, "delta", path)[1]["seed"] == 5
    assert call(capsys, "delta", path, "--seed", "9")[1]["seed"] == 9


def test_console_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "growthexp", "verify", CUSP, "--seed", "7"]
    a = subprocess.run(cmd, capture_output=True)
    b = subprocess.run(cmd, capture_output=True)
    assert a.returncode == 0 and a.stdout == b.stdout
