import json

import pytest

from lpmln import cli
from lpmln import equivalence as eq
from lpmln.weights import WExpr

from .conftest import PROGRAMS


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def prog(name):
    return PROGRAMS / f"{name}.lpmln"


def jrun(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_models_text(capsys):
    code, out, _ = run(capsys, "models", prog("F"))
    assert code == 0
    assert out.splitlines() == ["{}\te^{5}\t0.468311", "{a}\te^{3}\t0.0633789",
                                "{a,b}\te^{5}\t0.468311"]


def test_models_json(capsys):
    code, data = jrun(capsys, "models", prog("F"))
    assert code == 0
    assert [m["atoms"] for m in data["models"]] == [[], ["a"], ["a", "b"]]
    assert [WExpr.from_json(m["weight"]) for m in data["models"]] == [WExpr(5), WExpr(3), WExpr(5)]
    assert sum(m["probability"] for m in data["models"]) == pytest.approx(1.0, abs=1e-12)


def test_models_hard_and_empty(capsys, tmp_path):
    (tmp_path / "h.lpmln").write_text("alpha: a.\n")
    (tmp_path / "e.lpmln").write_text("")
    _, out, _ = run(capsys, "models", tmp_path / "h.lpmln")
    assert out.splitlines() == ["{}\te^{0}\t0", "{a}\te^{0+1a}\t1"]
    code, out, _ = run(capsys, "models", tmp_path / "e.lpmln")
    assert code == 0 and out.splitlines() == ["{}\te^{0}\t1"]


def test_prob(capsys):
    code, data = jrun(capsys, "prob", prog("G"), "--interp", "b")
    assert code == 0 and data["distribution"] == [{"atoms": ["b"], "probability": 0.0}]
    _, out, _ = run(capsys, "prob", prog("G"))
    assert out.splitlines()[0] == "P({}) = 0.468310530833"


def test_check_se_sample_pairs(capsys):
    code, out, _ = run(capsys, "check-se", prog("F"), prog("G"))
    assert code == 0 and out.strip() == "equivalent, c = e^{2}"
    code, out, _ = run(capsys, "check-se", prog("Fprime"), prog("G"))
    assert code == 1 and "reduct mismatch at {a}" in out and "also differ at {a,b}" in out
    code, out, _ = run(capsys, "check-se", prog("F"), prog("Gprime"))
    assert code == 1 and out.strip() == "not equivalent: weight ratio e^{1} at {} but e^{2} at {a}"


def test_check_se_json(capsys):
    code, data = jrun(capsys, "check-se", prog("F"), prog("G"))
    assert code == 0 and data["verdict"] == "equivalent"
    assert WExpr.from_json(data["witness"]) == WExpr(2)
    code, data = jrun(capsys, "check-se", prog("F"), prog("Gprime"))
    ce = data["counterexample"]
    assert code == 1 and ce["kind"] == "weight-mismatch"
    assert (ce["x1"], WExpr.from_json(ce["ratio1"])) == ([], WExpr(1))
    assert (ce["x2"], WExpr.from_json(ce["ratio2"])) == (["a"], WExpr(2))
    code, data = jrun(capsys, "check-se", prog("Fprime"), prog("G"))
    ce = data["counterexample"]
    assert ce["kind"] == "reduct-mismatch" and [d["x"] for d in ce["all"]] == [["a"], ["a", "b"]]


@pytest.mark.parametrize("method", ["theorem1", "b", "c", "d", "e", "f", "g", "falsify"])
@pytest.mark.parametrize("left, right, equivalent", [
    ("F", "G", True), ("Fprime", "G", False), ("P1", "P2", False), ("F", "F", True),
])
def test_text_and_json_agree(capsys, method, left, right, equivalent):
    args = ["check-se", prog(left), prog(right), "--method", method, "--trials", "1000", "--seed", "0"]
    code_text, _, _ = run(capsys, *args)
    code_json, data = jrun(capsys, *args)
    assert code_text == code_json == (0 if equivalent else 1)
    assert data["method"] == method
    if method == "d":
        assert "candidate definition" in data["note"]


def test_falsify_with_pool(capsys):
    code, data = jrun(capsys, "check-se", prog("Fprime"), prog("G"), "--method", "falsify",
                      "--pool", prog("H"))
    rep = data["falsifier"]
    assert code == 1 and rep["found"] and rep["trials_used"] == 1 and rep["seed"] == 0
    assert rep["x"] == ["a", "b"] and rep["h"] == ["1: a <- b", "1: b <- a"]
    assert rep["w_left"] is None and WExpr.from_json(rep["w_right"]) == WExpr(5)


def test_reduct(capsys):
    code, out, _ = run(capsys, "reduct", prog("F"), "--interp", "a")
    assert code == 0
    assert "F_X: 3: a <- not not a" in out.splitlines()
    assert "reduct: not bot -> a" in out.splitlines()
    code, data = jrun(capsys, "reduct", prog("F"), "--interp", "")
    assert len(data["satisfied"]) == 3
    code, data = jrun(capsys, "reduct", prog("G"), "--interp", "a,b")
    assert data["reduct"] == "(bot | b) & (a | bot)"


def test_reduct_unknown_atom(capsys):
    code, _, err = run(capsys, "reduct", prog("F"), "--interp", "z")
    assert code == 2 and "unknown atom" in err


def test_delta_and_choice(capsys, tmp_path):
    (tmp_path / "imp.lpmln").write_text("a -> b.\n")
    (tmp_path / "neg.lpmln").write_text("not a.\n")
    (tmp_path / "a.lpmln").write_text("a.\n")
    assert run(capsys, "delta", tmp_path / "imp.lpmln")[1] == "(a_prime -> b_prime) & (a -> b)\n"
    assert run(capsys, "delta", tmp_path / "neg.lpmln")[1] == "not a\n"
    assert run(capsys, "choice", tmp_path / "a.lpmln")[1] == "a | not a\n"
    assert jrun(capsys, "choice", tmp_path / "a.lpmln")[1] == {"choice": ["a | not a"]}


def test_cross_check(capsys):
    code, data = jrun(capsys, "cross-check", prog("F"), prog("G"))
    assert code == 0 and data["agree"] and all(c["holds"] for c in data["conditions"].values())
    assert sorted(data["conditions"]) == list("bcdefg")
    code, data = jrun(capsys, "cross-check", prog("P1"), prog("P2"))
    assert code == 1 and data["agree"] and not any(c["holds"] for c in data["conditions"].values())
    code, _, _ = run(capsys, "cross-check", prog("F"), prog("F"))
    assert code == 0


def test_cross_check_disagreement_exit(capsys, monkeypatch):
    monkeypatch.setitem(eq._CHECKS, eq.ConditionId.D, lambda f, g, sig: (False, None))
    code, data = jrun(capsys, "cross-check", prog("F"), prog("G"))
    assert code == 5 and data["verdict"] == "disagree"


def test_parse_error_exit(capsys, tmp_path):
    bad = tmp_path / "bad.lpmln"
    bad.write_text("1: a &\n")
    code, _, err = run(capsys, "models", bad)
    assert code == 2 and "bad.lpmln:1:7" in err
    assert run(capsys, "models", tmp_path / "missing.lpmln")[0] == 2


def test_cap_exit(capsys, tmp_path):
    big = tmp_path / "big.lpmln"
    big.write_text("1: " + " & ".join(f"p{i}" for i in range(25)) + ".\n")
    assert run(capsys, "models", big)[0] == 3


def test_no_model_exit(capsys, monkeypatch):
    monkeypatch.setattr(cli, "model_weights", lambda p: {})
    code, _, err = run(capsys, "models", prog("F"))
    assert code == 4 and "no soft stable model" in err
