import json

import pytest

import wittsupport as ws

VERMA = {"family": "verma", "n": 2, "G": [[0, 1]], "beta": [1, 0], "X": "trivial", "K": 4, "B": 4}


def test_classify_examples():
    assert ws.classify({"family": "tensor", "lambda": 0, "b": 0, "variant": "quotient_by_trivial", "box": 6})["verdict"] == "Punctured"
    rep = ws.classify(VERMA)
    assert rep["schema"] == ws.REPORT_SCHEMA
    assert rep["verdict"] == "Cut"
    assert rep["certificate"]["a"] == ["1", "0"]
    assert ws.classify({"family": "tensor", "λ": "γ", "b": "1/2", "variant": "full", "box": 5})["verdict"] == "Dense"


def test_report_validation():
    rep = ws.classify(VERMA, checks=["convexity", "mixed"])
    ok, problems = ws.validate_report(rep)
    assert ok and problems == []
    rep["certificate"]["a"] = ["0", "1"]
    ok, problems = ws.validate_report(json.dumps(rep))
    assert not ok


def test_bad_descriptor_raises():
    with pytest.raises(ValueError):
        ws.classify({"family": "bogus"})


def test_verify_suites():
    rep = ws.verify(["jacobi", "verma-partitions"], seed=7)
    assert rep["pass"]
    assert rep["suites"][0]["checked"] == 1000
    assert rep["suites"][1]["details"]["dims_K7"] == [1, 1, 2, 3, 5, 7, 11, 15]
    neg = ws.verify(["convexity"], inject_negative=True)
    assert not neg["pass"]
    assert "(2,0)" in neg["suites"][0]["failures"][0]
    assert "jacobi" in ws.suite_names()


def test_algebra_and_lattice():
    x = [{"alpha": [1, 0], "u": ["0", "1"]}]
    y = [{"alpha": [0, 1], "u": ["1", "0"]}]
    assert ws.bracket(x, y, 2) == [{"alpha": [1, 1], "u": ["1", "-1"]}]
    g = ws.semigroup_generators_for([-2, 1], ["1", "1"])
    assert g["minus"] == [[3, -2], [4, -3]]
    assert ws.generates_monoid([[-1, -1], [1, 0], [0, 1]], 8)["status"] == "generated"
    assert ws.separating_hyperplane([[1, 0], [1, 2]], [0, 0]) == ["1", "0"]
    assert ws.separating_hyperplane([[1, 0], [-1, 0]], [0, 0]) is None
    assert ws.convex_hull_contains([[0, 0], [2, 0], [0, 2]], [1, 1])


def test_dims_csv_and_cli():
    n1 = {"family": "verma", "n": 1, "G": [], "beta": [1], "X": "trivial", "K": 7}
    assert ws.weight_dims(n1, [[-d] for d in range(8)]) == [1, 1, 2, 3, 5, 7, 11, 15]
    assert ws.window_csv(VERMA, box=2).startswith("x1,x2,dim,boundary\n")
    code, text, _ = ws.run_cli(["catalog"])
    assert code == 0 and len(json.loads(text)) >= 12
    code, _, diag = ws.run_cli(["verify", "--suites", "nope"])
    assert code == 1 and "nope" in diag
