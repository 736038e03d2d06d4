import pathlib

import numpy as np
import pytest

import lpcodes

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


def toric():
    c = np.array([[1, 1, 0], [0, 1, 1], [1, 0, 1]], dtype=np.uint8)
    return lpcodes.hp(c, c)


def test_toric_parameters():
    q = toric()
    assert q.n == 18
    assert lpcodes.css_dimension(q) == 2
    for side in ("z", "x"):
        d = lpcodes.exact_distance(q, side)
        assert d["weight"] == 3
        assert d["kind"] == "exact"
        w = d["witness"]
        check = q.hx if side == "z" else q.hz
        assert not (check.astype(int) @ w.astype(int) % 2).any()


def test_lp_square_tanner():
    q = lpcodes.lp_square((DATA / "tanner155.qc").read_text())
    assert (q.n, lpcodes.css_dimension(q)) == (1054, 140)
    assert lpcodes.limitedness(q) == 8


def test_factor_and_bound():
    assert [len(f) > 0 for f in lpcodes.factor_cyclic(7)] == [True] * 3
    assert lpcodes.qc_distance_bound([[2, 2]]) == 4
    assert lpcodes.qc_distance_bound([[0, 0, 0]]) is None
    with pytest.raises(lpcodes.Unsupported, match="even"):
        lpcodes.factor_cyclic(4)


def test_parse_error():
    with pytest.raises(lpcodes.ParseError):
        lpcodes.lp_square("group: C5\n1, x^\n")


def test_budget_refusal_reports_requirement():
    q = lpcodes.lp_square((DATA / "tanner155.qc").read_text())
    with pytest.raises(lpcodes.BudgetExceeded) as e:
        lpcodes.exact_distance(q, "z", budget=10)
    assert e.value.args[1] > 10


def test_estimate_is_deterministic():
    q = toric()
    a = lpcodes.distance_upper(q, "z", seed=5, trials=500)
    b = lpcodes.distance_upper(q, "z", seed=5, trials=500, jobs=1)
    assert a["weight"] == b["weight"] == 3
    assert (a["witness"] == b["witness"]).all()


def test_spectrum_k4():
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    eig, lam = lpcodes.spectrum(4, edges)
    assert eig == pytest.approx([3, -1, -1, -1], abs=1e-9)
    assert lam == pytest.approx(1, abs=1e-9)


def test_pipeline():
    r = lpcodes.pipeline(5, 6, 3, 1, 0.5, 1)
    assert r["n"] == 150
    assert r["k_rank"] == r["k_formula"]
    assert r["dx"]["weight"] <= 5
