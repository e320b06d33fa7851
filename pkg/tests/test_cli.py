import io
import json
import subprocess
import sys

import pytest

from filiform.action import GroupElement, apply_rho
from filiform.algebra import params_to_record, record_to_params
from filiform.cli import main
from filiform.oracle import orbit_samples
from filiform.scalarfield import make_rng, parse_scalar

from conftest import first

A = {"n": 4, "class": "first", "alpha": ["1", "2"], "theta": "3"}
B = {"n": 4, "class": "first", "alpha": ["2", "0"], "theta": "1"}
C = {"n": 4, "class": "first", "alpha": ["1", "2"], "theta": "4"}
SECOND = {"n": 4, "class": "second", "beta": ["1", "1"], "gamma": "2"}


@pytest.fixture
def write(tmp_path):
    def _write(obj, name="alg.json"):
        path = tmp_path / name
        path.write_text(obj if isinstance(obj, str) else json.dumps(obj))
        return str(path)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_table(capsys, write):
    code, out, _ = run(capsys, "table", write(A))
    lines = out.splitlines()
    assert code == 0 and len(lines) == 9
    assert lines == sorted(lines, key=lambda s: tuple(map(int, s.split()[:3])))
    assert "0 1 4 3" in lines
    zero = {"n": 5, "class": "first", "alpha": ["0"] * 3, "theta": "0"}
    # gamma_00^2 plus gamma_i0^(i+1) for 1 <= i <= n-1
    assert len(run(capsys, "table", write(zero))[1].splitlines()) == 5
    assert "1 1 4 2" in run(capsys, "table", write(SECOND))[1].splitlines()
    code, out, _ = run(capsys, "table", write(A), "--format", "json")
    assert json.loads(out)["dim"] == 5


def test_classify_canon_invariants(capsys, write):
    assert json.loads(run(capsys, "classify", write(A))[1])["stratum"] == "U"
    assert json.loads(run(capsys, "canon", write(A))[1]) == {
        "n": 4, "class": "first", "alpha": ["1", "0"], "theta": "1/4"
    }  # fmt: skip
    assert json.loads(run(capsys, "invariants", write(A))[1])["components"] == ["1/4"]
    fp = {"n": 4, "class": "first", "alpha": ["0", "0"], "theta": "1"}
    code, out, _ = run(capsys, "invariants", write(fp))
    assert code == 2 and json.loads(out)["stratum"] == "Fprime"
    code, out, _ = run(capsys, "classify", write({"n": 4, "alpha": ["1", "-2"], "theta": "0"}))
    assert code == 0 and json.loads(out)["stratum"] == "U1p"


def test_iso_verdicts(capsys, write):
    code, out, _ = run(capsys, "iso", write(A, "a.json"), write(B, "b.json"))
    verdict = json.loads(out)
    assert code == 0 and verdict["verdict"] == "yes"
    g = GroupElement(parse_scalar(verdict["witness"]["A"]), parse_scalar(verdict["witness"]["B"]))
    assert apply_rho(g, record_to_params(A)) == record_to_params(B)

    code, out, _ = run(capsys, "iso", write(A, "a.json"), write(C, "c.json"))
    verdict = json.loads(out)
    assert code == 1 and verdict["index"] == 3 and verdict["values"] == ["1/4", "1/2"]

    f1 = {"n": 4, "alpha": ["0", "0"], "theta": "1"}
    f2 = {"n": 4, "alpha": ["0", "0"], "theta": "2"}
    code, out, _ = run(capsys, "iso", write(f1, "f1.json"), write(f2, "f2.json"))
    verdict = json.loads(out)
    assert code == 2 and verdict["strata"] == ["Fprime", "Fprime"] and verdict["reason"]

    assert run(capsys, "iso", write(A, "a.json"), write(SECOND, "s.json"))[0] == 2


def test_iso_dimension_mismatch(capsys, write):
    d5 = {"n": 5, "alpha": ["1", "2", "3"], "theta": "3"}
    assert run(capsys, "iso", write(A, "a.json"), write(d5, "d.json"))[0] == 65


def test_solve(capsys):
    code, out, _ = run(capsys, "solve", "--n", "4", "--targets", "1/4")
    assert code == 0 and json.loads(out) == {"n": 4, "class": "first", "alpha": ["1", "0"], "theta": "1/4"}
    code, out, _ = run(capsys, "solve", "--n", "6", "--stratum", "U1pp", "--targets", "21,0")
    assert json.loads(out)["alpha"] == ["1", "-2", "0", "21"]
    assert run(capsys, "solve", "--n", "6", "--stratum", "U1pp", "--targets=-14,0")[0] == 65
    assert run(capsys, "solve", "--n", "6", "--targets", "1,x,2")[0] == 65
    assert run(capsys, "solve", "--n", "6", "--targets", "1")[0] == 65


def test_orbit_is_seeded(capsys, write):
    path = write(A)
    code, out, _ = run(capsys, "orbit", path, "--count", "4", "--seed", "11")
    again = run(capsys, "orbit", path, "--count", "4", "--seed", "11")[1]
    assert code == 0 and out == again and len(out.splitlines()) == 4
    for line in out.splitlines():
        row = json.loads(line)
        g = GroupElement(parse_scalar(row["g"]["A"]), parse_scalar(row["g"]["B"]))
        assert apply_rho(g, record_to_params(A)) == record_to_params(row["algebra"])
    assert run(capsys, "orbit", path, "--count", "0")[1] == ""
    assert run(capsys, "orbit", path, "--count", "-1")[0] == 64


def test_catalog(capsys, write):
    p = record_to_params(A)
    orbit = [params_to_record(q) for _, q in orbit_samples(p, 50, make_rng(5))]
    stream = "\n".join(json.dumps(r) for r in orbit) + "\n"
    code, out, err = run(capsys, "catalog", write(stream, "o.jsonl"))
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(rows) == 1 and rows[0]["members"] == 50
    assert json.loads(err) == {"records": 50, "classes": 1, "unsupported": 0}

    stream = json.dumps(A) + "\n" + json.dumps(C) + "\n" + json.dumps({"n": 4, "alpha": ["0", "0"], "theta": "1"}) + "\n"
    code, out, err = run(capsys, "catalog", write(stream, "m.jsonl"))
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 3 and rows[-1]["unsupported"] and rows[-1]["stratum"] == "Fprime"
    assert json.loads(err)["classes"] == 2

    code, out, err = run(capsys, "catalog", write("", "e.jsonl"))
    assert code == 0 and out == "" and json.loads(err)["classes"] == 0

    mixed = json.dumps(A) + "\n" + json.dumps({"n": 5, "alpha": ["1", "2", "3"], "theta": "0"}) + "\n"
    assert run(capsys, "catalog", write(mixed, "x.jsonl"))[0] == 65


def test_stdin_input(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(A)))
    assert json.loads(run(capsys, "classify", "-")[1])["stratum"] == "U"


@pytest.mark.parametrize(
    "argv, code",
    [
        (["frobnicate"], 64),
        (["iso", "only-one"], 64),
        (["classify", "/nonexistent/x.json"], 64),
        (["solve", "--n", "six"], 64),
        (["verify-paper", "--nmax", "5"], 64),
    ],
)
def test_usage_errors(capsys, argv, code):
    try:
        got = main(argv)
    except SystemExit as exc:
        got = exc.code
    assert got == code


@pytest.mark.parametrize("text", ["not json", json.dumps({"n": 4, "alpha": ["1"], "theta": "0"}), "[1, 2]"])
def test_data_errors(capsys, write, text):
    assert run(capsys, "classify", write(text))[0] == 65


def test_classify_needs_first_class(capsys, write):
    assert run(capsys, "classify", write(SECOND))[0] == 65


def test_verify_paper_quick(capsys):
    code, out, _ = run(capsys, "verify-paper", "--seed", "1", "--trials", "2", "--nmax", "7")
    summary = json.loads(out)
    assert code == 0 and summary["ok"]
    assert {c["check"] for c in summary["checks"]} >= {"lowdim_systems", "negative_controls", "tensor_oracle"}
    assert run(capsys, "verify-paper", "--seed", "1", "--trials", "2", "--nmax", "7")[1] == out


def test_text_format(capsys, write):
    code, out, _ = run(capsys, "invariants", write(A), "--format", "text")
    assert code == 0 and "components" in out


def test_console_script(tmp_path):
    path = tmp_path / "a.json"
    path.write_text(json.dumps(A))
    proc = subprocess.run(
        [sys.executable, "-m", "filiform.cli", "canon", str(path)], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["theta"] == "1/4"
