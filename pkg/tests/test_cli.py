from __future__ import annotations

import json
import re
import subprocess
import sys

import pytest

from lcpoly.cli import main
from lcpoly.families import ParamPoint, family_poly
from lcpoly.poly import Poly


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_expand_text(capsys):
    code, out, _ = run(capsys, "expand", "--family", "L", "--n", "2", "--param", "alpha=0", "--normalized",
                       "--format", "text")
    assert code == 0 and out.strip() == "1 - 2x + 1/2 x^2"


def test_recurrence_json(capsys):
    code, out, _ = run(capsys, "recurrence", "--family", "C", "--n", "0", "--param", "a=3", "--format", "json")
    assert code == 0 and json.loads(out) == {"alpha": "-3", "beta": "3", "gamma": "0"}


@pytest.mark.parametrize("fam,n,params", [("qM", 4, ["b=1/3", "c=-22/7", "q=2"]), ("SW", 5, ["q=-3/2"]),
                                          ("M", 3, ["beta=5/2", "c=1/3"])])
def test_expand_json_round_trip(capsys, fam, n, params):
    argv = ["expand", "--family", fam, "--n", str(n), "--format", "json"]
    for p in params:
        argv += ["--param", p]
    code, out, _ = run(capsys, *argv)
    data = json.loads(out)
    th = ParamPoint({k: v for k, v in (p.split("=") for p in params)})
    assert code == 0 and Poly.from_json(data["coeffs"]) == family_poly(fam, n, th)


def test_expand_latex(capsys):
    code, out, _ = run(capsys, "expand", "--family", "C", "--n", "2", "--param", "a=2", "--format", "latex")
    assert code == 0
    line = out.strip()
    assert re.fullmatch(r"[-0-9x^{}\\frac +]+", line)
    assert line.count("{") == line.count("}") and r"\frac" in line


def test_recurrence_latex(capsys):
    code, out, _ = run(capsys, "recurrence", "--family", "L", "--n", "2", "--param", "alpha=1",
                       "--format", "latex")
    assert code == 0 and r"\alpha_{2} = -4" in out


def test_families_and_relations(capsys):
    code, out, _ = run(capsys, "families", "--format", "json")
    assert code == 0 and len(json.loads(out)) == 10
    code, out, _ = run(capsys, "relations", "--format", "json")
    assert code == 0 and set(json.loads(out)["equations"]) == {"4.1", "4.2", "4.3", "4.4"}


def test_check_lc(capsys):
    code, out, _ = run(capsys, "check-lc", "--family", "bqL", "--param", "a=1/3", "--param", "b=1/5",
                       "--param", "q=2", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep[0]["constant"] == "1" and rep[0]["status"] == "pass"


def test_check_lc_sampled_all_branches(capsys):
    code, out, _ = run(capsys, "check-lc", "--family", "M", "--seed", "5", "--format", "json")
    assert code == 0 and [r["branch"] for r in json.loads(out)] == ["c1=0", "c2=-beta"]


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "SW.rainSW", "--n", "1", "--param", "q=2",
                       "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["status"] == "pass" and rep["grid"]["theta"] == {"q": "2"}


def test_verify_quarantined_exits_zero(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "lqL.sodelqL1", "--n", "1", "--param", "a=1/3",
                       "--param", "q=2", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["status"] == "quarantined"
    assert rep["erratum"]["corrected"]["status"] == "pass"


@pytest.mark.parametrize("argv,needle", [
    (["expand", "--family", "Q", "--n", "1"], "unknown family 'Q'"),
    (["verify", "--identity", "L.nope"], "unknown identity"),
    (["expand", "--family", "L", "--n", "1", "--param", "alpha=1/0"], "zero denominator"),
    (["expand", "--family", "L", "--n", "1", "--param", "alpha=0.5"], "invalid rational"),
    (["expand", "--family", "L", "--n", "1", "--param", "alpha=-1"], "alpha"),
    (["expand", "--family", "L", "--n", "1"], "missing alpha"),
    (["expand", "--family", "L", "--n", "1", "--param", "alpha=1", "--param", "q=2"], "unknown q"),
    (["recurrence", "--n", "1"], "--family is required"),
    (["verify"], "--identity is required"),
])
def test_usage_errors(capsys, argv, needle):
    code, _, err = run(capsys, *argv)
    assert code == 2 and needle in err


def test_argparse_error_exit_two():
    with pytest.raises(SystemExit) as exc:
        main(["expand", "--format", "yaml"])
    assert exc.value.code == 2


def test_failure_exit_one(monkeypatch, capsys):
    import lcpoly.cli as cli
    from lcpoly.engine import Identity, Variant
    from lcpoly.families import FamilyId
    from lcpoly.poly import X

    toy = Identity("toy", "toy", "none", "x = x + 1", (Variant("", FamilyId.L, lambda n, k, th: (X, X + 1)),))
    monkeypatch.setattr(cli, "get_identity", lambda key: toy)
    code, out, _ = run(capsys, "verify", "--identity", "toy", "--nmax", "1", "--samples", "1")
    assert code == 1 and "fail" in out


def test_verify_all_small_grid():
    proc = subprocess.run([sys.executable, "-m", "lcpoly.cli", "verify-all", "--nmax", "8", "--samples", "3",
                           "--seed", "42", "--format", "json"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0, proc.stderr
    data = json.loads(proc.stdout)
    assert data["ok"] is True and data["seed"] == 42
    assert sum(data["counts"].values()) == len(data["reports"]) == 72
