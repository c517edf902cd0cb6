import json
import math
import os
import subprocess
from fractions import Fraction

import pytest

import bruhat

TRIVIAL = {"dim": 2, "steps": [{"weight": "0", "basis": [[1, 0], [0, 1]]}]}
JUMP_E1 = {"dim": 2, "steps": [{"weight": "0", "basis": [[1, 0], [0, 1]]}, {"weight": "1", "basis": [[1, 0]]}]}
JUMP_E2 = {"dim": 2, "steps": [{"weight": "0", "basis": [[1, 0], [0, 1]]}, {"weight": "1", "basis": [[0, 1]]}]}
STANDARD = {"p": 2, "basis": [[1, 0], [0, 1]], "weights": ["0", "0"]}
SCALED = {"p": 2, "basis": [[2, 0], [0, 1]], "weights": ["0", "0"]}


def test_filtrations():
    assert bruhat.filtration_type(TRIVIAL) == ["0", "0"]
    assert bruhat.filtration_type(JUMP_E1) == ["0", "1"]
    d = bruhat.distance(JUMP_E1, JUMP_E2)
    assert d["distance_sq"] == "2"
    assert d["vector_distance"] == ["-1", "1"]
    assert d["angle"] == pytest.approx(math.pi / 2)
    assert "angle" not in bruhat.distance(TRIVIAL, JUMP_E1)
    total = bruhat.add_fil(JUMP_E1, JUMP_E2)
    assert bruhat.filtration_type(total) == ["1", "1"]
    flag = {"dim": 2, "chain": [[[1, 0]]]}
    assert bruhat.retract(JUMP_E2, flag) == bruhat.add_fil(JUMP_E2, TRIVIAL)


def test_dominance():
    assert bruhat.dominance_leq(["1", "1", "1"], ["0", "1", "2"])
    assert not bruhat.dominance_leq([0, 1, 2], [1, 1, 1])


def test_norms():
    assert bruhat.cartan(STANDARD, SCALED) == ["0", "1"]
    assert bruhat.fractions(bruhat.cartan(SCALED, STANDARD)) == [Fraction(-1), Fraction(0)]
    adapted = bruhat.adapt_to_filtration(STANDARD, JUMP_E1)
    assert adapted["fil_weights"] == ["1", "0"]
    assert bruhat.add_fil_norm(STANDARD, JUMP_E1)["weights"] == ["1", "0"]
    assert set(bruhat.adapt_norms(STANDARD, SCALED)) == {"basis", "alpha_weights", "beta_weights"}
    assert bruhat.fixes([[1, 2], [0, 1]], STANDARD)
    assert not bruhat.fixes([[2, 0], [0, 1]], STANDARD)
    assert bruhat.loc(STANDARD, STANDARD)["p"] == 2
    gens = bruhat.moy_prasad(STANDARD, "1")
    assert gens[0] == [["2", "0"], ["0", "0"]]
    assert bruhat.valuation("-3/8", 2) == -3
    assert bruhat.valuation("0", 2) is None


def test_symmetric_space():
    a = {"gram": [[1.0, 0.0], [0.0, 1.0]]}
    b = {"gram": [[math.exp(-2), 0.0], [0.0, 1.0]]}
    assert bruhat.fischer_courant(a, b) == pytest.approx([0.0, 1.0])
    assert bruhat.dn(a, b) == pytest.approx(1.0)


def test_errors():
    with pytest.raises(bruhat.DomainError):
        bruhat.valuation("1", 4)
    with pytest.raises(bruhat.FormatError):
        bruhat.filtration_type({"dim": 2})
    with pytest.raises(ValueError):
        bruhat.cartan(STANDARD, {"p": 2, "basis": [[1, 0, 0]], "weights": ["0"]})


def test_axioms():
    reports = bruhat.run_axioms("valnorm", n=2, p=3, trials=20, seed=5)
    assert [r["axiom"] for r in reports] == ["A1_A2", "metric", "A6_A8"]
    assert all(r["passed"] for r in reports)
    broken = bruhat.run_axioms("symspace", control="corrupted", trials=20, seed=5)
    assert not all(r["passed"] for r in broken)


@pytest.mark.skipif("BRUHAT_CLI" not in os.environ, reason="command line tool not located")
def test_cli_agrees(tmp_path):
    f = tmp_path / "f.json"
    f.write_text(json.dumps(JUMP_E1))
    out = subprocess.run([os.environ["BRUHAT_CLI"], "type", str(f)], capture_output=True, text=True, check=True)
    assert json.loads(out.stdout) == {"type": bruhat.filtration_type(JUMP_E1)}
