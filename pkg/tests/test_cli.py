import json

import pytest

from mzeta.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_examples_check(capsys):
    code, out, _ = run(capsys, "examples", "--check", "p1", "--terms", "50")
    assert code == 0 and out.startswith("PASS p1")
    code, out, _ = run(capsys, "examples", "--check", "p1,p2,elliptic", "--terms", "20", "--json")
    assert code == 0
    assert all(r["holds"] for r in json.loads(out[out.index("["):]))


def test_certify(capsys):
    code, out, _ = run(capsys, "certify", "--surface", "q=0,pg=2", "--nmax", "5", "--mwindow", "1..30", "--out", "json")
    doc = json.loads(out)
    assert code == 0 and doc["valid"] and doc["surface"] == {"q": 0, "r": 2}
    code, _, err = run(capsys, "certify", "--surface", "q=0,pg=1")
    assert code == 2 and "P_g >= 2" in err
    code, out, _ = run(capsys, "certify", "--surface", "q=1,pg=3", "--nmax", "2", "--mwindow", "1..4", "--out", "text")
    assert code == 0 and "certificate" in out


def test_certify_failure_exit_code(capsys, monkeypatch):
    import mzeta.irrationality as irr

    monkeypatch.setattr(irr, "nocancel_check", lambda target, others: False)
    code, _, err = run(capsys, "certify", "--surface", "q=0,pg=2", "--nmax", "1", "--mwindow", "1..2")
    assert code == 1 and "CERTIFICATE FAILURE" in err


def test_factor(capsys):
    code, out, _ = run(capsys, "factor", "--poly", "6+6t")
    assert code == 0 and out.strip() == "{2, 3, (1+t)}"
    code, out, _ = run(capsys, "factor", "--poly", "t^2-1", "--json")
    assert json.loads(out)["irreducible_factors"] == [["-1+t", 1], ["1+t", 1]]
    code, _, err = run(capsys, "factor", "--poly=-t")
    assert code == 2 and "not an element of C" in err


def test_zeta_outputs(capsys):
    code, out, _ = run(capsys, "zeta", "--expr", "curve(2)", "--terms", "4")
    assert code == 0 and json.loads(out)["coefficients"] == ["1", "[1+2t]", "[1+t]^2", "[1+t]^2", "[1+t]^2"]
    code, out, _ = run(capsys, "zeta", "--expr", "E", "--terms", "3", "--out", "csv")
    assert out.splitlines() == ["n,coefficient", "0,1", "1,[1+t]", "2,[1+t]", "3,[1+t]"]
    code, out, _ = run(capsys, "zeta", "--expr", "P(1)", "--measure", "id-symbolic", "--out", "tex", "--terms", "30")
    assert code == 0 and out.strip().startswith(r"\frac{1}")
    code, out, err = run(capsys, "zeta", "--expr", "surface(0,2)", "--terms", "3")
    assert json.loads(out)["provenance"] == "leading-term model" and "leading-term model" in err
    code, _, err = run(capsys, "zeta", "--expr", "surface(0,2)", "--out", "tex")
    assert code == 2


def test_hankel(capsys):
    code, out, _ = run(capsys, "hankel", "--expr", "curve(2)", "--n", "1..2", "--m", "1..10")
    doc = json.loads(out)
    assert code == 0 and doc["series"] == "curve(g=2)"
    assert [s["n0"] for s in doc["scans"]] == [1, 0]
    code, out, _ = run(capsys, "hankel", "--expr", "surface(0,2)", "--n", "1..1", "--m", "1..5", "--exact")
    doc = json.loads(out)
    assert doc["scans"][0]["n0"] is None and doc["provenance"] == "leading-term model"


def test_symhodge(capsys):
    code, out, _ = run(capsys, "symhodge", "--expr", "curve(2)", "--n", "3")
    assert code == 0 and json.loads(out)["h"] == [1, 2, 1, 0]


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "hankel", "--expr", "E", "--n", "3..1", "--m", "1..2")[0] == 2
    code, _, err = run(capsys, "zeta", "--expr", "sym(E*E, 2)")
    assert code == 2 and "line 1, column 5" in err
    assert run(capsys, "examples", "--check", "p7")[0] == 2
    assert run(capsys, "zeta", "--expr", "curve(2)", "--measure", "id-symbolic")[0] == 2


def test_seed_reproducible(capsys, monkeypatch):
    monkeypatch.setenv("MZETA_SEED", "42")
    a = run(capsys, "hankel", "--expr", "surface(0,3)", "--n", "1..2", "--m", "1..4")[1]
    b = run(capsys, "hankel", "--expr", "surface(0,3)", "--n", "1..2", "--m", "1..4")[1]
    assert a == b
