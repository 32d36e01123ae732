import io
import json

import pytest

from weighted_motzkin.cli import run

WORKED = {"path": "UDUUDDUDUD", "cuts": [1, 7, 9], "root": 2}


def call(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err, stdin=io.StringIO(stdin))
    return code, out.getvalue(), err.getvalue()


def test_verify_weighted():
    code, out, _ = call("verify", "--identity", "weighted", "--k", "4", "--t", "1", "--rows", "12")
    assert code == 0
    assert sum(1 for line in out.splitlines() if line.startswith("i=") and " pass " in line) == 12


def test_matrix_csv():
    code, out, _ = call("matrix", "--k", "6", "--t", "2", "--rows", "5", "--format", "csv")
    assert code == 0 and out.splitlines()[-1] == "197,156,60,12,1"


def test_matrix_methods_agree():
    base = call("matrix", "--k", "5", "--t", "1", "--rows", "7", "--format", "json")[1]
    assert call("matrix", "--k", "5", "--t", "1", "--rows", "7", "--format", "json", "--method", "riordan")[1] == base
    col = call("matrix", "--t", "2", "--rows", "5", "--method", "colored", "--format", "csv")[1]
    assert col == call("matrix", "--k", "6", "--t", "2", "--rows", "5", "--format", "csv")[1]


def test_biject_phi_from_file(tmp_path):
    f = tmp_path / "worked.json"
    f.write_text(json.dumps(WORKED))
    code, out, _ = call("biject", "--map", "phi", "--input", str(f))
    assert code == 0 and out == "2341\n"


def test_biject_phi_inverse_stdin():
    code, out, _ = call("biject", "--map", "phi-inv", "--format", "json", stdin='"2341"')
    assert code == 0
    doc = json.loads(out)
    assert doc["cuts"] == [1, 7, 9] and doc["root"] == 2


def test_biject_elevation_pair():
    code, out, _ = call("biject", "--map", "elevate", stdin='{"path": "UHUDHUUDDUUUDH", "line": 2}')
    assert (code, out) == (0, "DHUDHUUDDDUUDH\n")
    code, out, _ = call("biject", "--map", "elevate-inv", stdin='"DHUDHUUDDDUUDH"')
    doc = json.loads(out)
    assert doc["line"] == 2


def test_biject_multi_and_sigma():
    assert call("biject", "--map", "multi-elevate", stdin='{"path":"UU","marks":[1],"lines":[0,2]}')[1] == "UH3\n"
    doc = json.loads(call("biject", "--map", "multi-elevate-inv", stdin='"UH3"')[1])
    assert doc["marks"] == [1] and doc["lines"] == [0, 2]
    comp = {"path": "UDUD", "cuts": [1, 3], "root": None, "segment_colors": [1, 2]}
    assert call("biject", "--map", "sigma", "--t", "2", stdin=json.dumps(comp))[1] == "b1\n"
    doc = json.loads(call("biject", "--map", "sigma-inv", "--t", "2", stdin='"b1"')[1])
    assert doc["segment_colors"] == [1, 2]


def test_biject_errors():
    code, out, err = call("biject", "--map", "sigma", stdin=json.dumps(WORKED))
    assert code == 2 and out == "" and "--t" in err
    assert call("biject", "--map", "phi", stdin='{"path": "DU", "cuts": [1]}')[0] == 2
    assert call("biject", "--map", "phi-inv", stdin='"9"')[0] == 2


@pytest.mark.parametrize("name", ["phi", "elevate", "multi-elevate", "sigma"])
def test_roundtrip(name):
    code, out, _ = call("roundtrip", "--map", name, "--max-length", "6", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["passed"]
    assert all(r["mismatches"] == 0 for r in doc["rows"])


def test_roundtrip_phi_counts():
    doc = json.loads(call("roundtrip", "--map", "phi", "--max-length", "8", "--format", "json")[1])
    assert [r["objects"] for r in doc["rows"]] == [1, 4, 16, 64]


def test_count():
    code, out, _ = call("count", "--class", "partial-motzkin", "--length", "4", "--end-level", "2", "--k", "6", "--t", "2", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["weighted"] == 60
    assert call("count", "--class", "dyck", "--length", "4", "--list")[1] == "UUDD\nUDUD\n"
    assert call("count", "--class", "colored-dyck", "--length", "6")[0] == 2


def test_series():
    assert call("series", "--kind", "motzkin", "--alpha", "3", "--beta", "2", "--order", "4", "--format", "csv")[1] == "1,3,11,45,197\n"
    doc = json.loads(call("series", "--kind", "rational", "--denom", "1,-3,2", "--order", "4", "--format", "json")[1])
    assert doc == {"coeffs": ["1/1", "3/1", "7/1", "15/1", "31/1"]}
    assert call("series", "--kind", "rational", "--denom", "0,1")[0] == 2


def test_verify_json_and_failure_codes():
    code, out, _ = call("verify", "--identity", "colored", "--t", "3", "--rows", "4", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["passed"] and [r["rhs"] for r in doc["rows"]] == ["1", "12", "144", "1728"]
    assert call("verify", "--identity", "cameron", "--i", "3")[0] == 2
    assert call("verify", "--identity", "cameron", "--i", "3", "--m", "1", "--k", "4")[0] == 2
    assert call("verify", "--identity", "weighted", "--k", "2", "--t", "2", "--rows", "3")[0] == 2


def test_usage_errors():
    assert call()[0] == 2
    assert call("matrix", "--bogus")[0] == 2
    assert call("matrix", "--t", "1", "--rows", "-1")[0] == 2


def test_cap(monkeypatch):
    code, _, err = call("count", "--class", "free-motzkin", "--length", "5", "--list", "--cap", "10")
    assert code == 3 and "cap" in err
    monkeypatch.setenv("MF_ENUM_CAP", "10")
    assert call("count", "--class", "free-motzkin", "--length", "5", "--list")[0] == 3
    assert call("count", "--class", "free-motzkin", "--length", "2", "--list")[0] == 0
    monkeypatch.setenv("MF_ENUM_CAP", "lots")
    assert call("count", "--class", "dyck", "--length", "2")[0] == 2


def test_deterministic():
    argv = ("verify", "--identity", "cross-check", "--k", "5", "--t", "2", "--rows", "7", "--format", "json")
    assert call(*argv) == call(*argv)


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "weighted_motzkin", "matrix", "--k", "4", "--t", "1", "--rows", "3", "--format", "csv"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "1\n2,1\n5,4,1\n"
