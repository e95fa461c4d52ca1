"""Smoke tests for the Python bindings: the main operations run end to end
on small documents and agree with known answers."""

import json

import pytest

import oremat

KF_DOC = {
    "ring": {"kind": "skew_poly", "p": 2, "k": 1, "modulus": [0, 1]},
    "rows": 4,
    "cols": 2,
    "orientation": "right",
    "index_base": 1,
    "entries": [
        [[[1]], []],
        [[], [[1]]],
        [[[1]], [[1]]],
        [[[1]], [[0], [1]]],
    ],
}

TORIC_DOC = {
    "ring": {"kind": "integers", "p": 2},
    "rows": 3,
    "cols": 2,
    "orientation": "right",
    "index_base": 1,
    "entries": [["1", "0"], ["0", "1"], ["1", "1"]],
}


def test_matroid_is_u24():
    m = oremat.matroid(KF_DOC)
    assert m["n"] == 4 and m["r"] == 2
    assert len(m["bases"]) == 6
    assert [1, 4] in m["bases"]


def test_valuation_table():
    v = oremat.valuation(KF_DOC)
    assert v["mu"]["1,4"] == 1
    assert v["mu"]["1,2"] == 0
    assert v["mu_normalized"]["1,4"] == 1


def test_accepts_json_strings():
    m = oremat.matroid(json.dumps(KF_DOC))
    assert m["r"] == 2


def test_dual_round_trip():
    d = oremat.dual(KF_DOC)
    assert d["rows"] == 4
    # the dual of the dual realizes the same matroid
    m = oremat.matroid(d)
    assert m["r"] == 2 and len(m["bases"]) == 6


def test_saturate_and_perp():
    s = oremat.saturate(KF_DOC)
    assert s["was_saturated"] is True
    p = oremat.perp(KF_DOC)
    assert p["orientation"] == "left"
    assert p["rows"] == 2


def test_flock_slice_and_check():
    s = oremat.flock_slice(KF_DOC, [0, 0, 0, 1])
    assert s["cols"] == 2 and s["rows"] == 4
    rep = oremat.flock_check(KF_DOC, radius=1)
    assert rep["ok"] is True
    assert rep["points"] == 3**4


def test_full_check_and_sampling():
    rep = oremat.check(KF_DOC, radius=1)
    assert rep["ok"] is True
    sv = oremat.sample_verify(TORIC_DOC, count=25, seed=3)
    assert sv["ok"] is True


def test_examples_registry():
    ids = oremat.examples()
    assert len(ids) == 7
    assert "kf_u24" in ids
    rep = oremat.run_example("kf_u24")
    assert rep["ok"] is True


def test_errors_are_typed():
    with pytest.raises(oremat.SchemaError):
        oremat.matroid({"nope": 1})
    bad = dict(KF_DOC, ring={"kind": "skew_poly", "p": 2, "k": 2, "modulus": [1, 0, 1]})
    with pytest.raises(oremat.InvariantError):
        oremat.matroid(bad)
    ell = {
        "ring": {"kind": "hurwitz", "p": 2},
        "rows": 2,
        "cols": 1,
        "entries": [[[2, 0, 0, 0]], [[0, 2, 0, 0]]],
    }
    with pytest.raises(oremat.UnsupportedRingError):
        oremat.flock_slice(ell, [0, 0])
