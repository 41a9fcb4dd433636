import pytest

import gl3serre


def test_admissible_counts_match_golden():
    counts = gl3serre.golden("adm_counts")
    assert counts["counts"]
    for row in counts["counts"]:
        assert len(gl3serre.admissible(row["lambda"], row["base"])) == row["count"]


def test_admissible_lengths():
    adm = gl3serre.admissible([1, 0, -1])
    assert len(adm) == 25
    top = [x for x in adm if x["length"] == 4]
    assert top and all(gl3serre.length(x["element"]) == 4 for x in top)
    with pytest.raises(ValueError):
        gl3serre.admissible([1, 0, 0], "x")


def test_trns_round_trip():
    p = 31
    mu = [[16, 8, -1]]  # (15, 8, 0) + eta
    vertex = {"omega": [[1, 1]], "a": [0]}
    weight = gl3serre.trns(mu, vertex, p)
    assert weight["base"] == [[17, 9, 0]]
    assert weight["twist"] == 29
    assert gl3serre.trns_inverse(mu, weight, p) == vertex


def test_distance():
    a = {"omega": [[0, 0]], "a": [0]}
    b = {"omega": [[1, 1]], "a": [1]}
    assert gl3serre.distance(a, b) == 3
    assert gl3serre.distance(a, a) == 0


def test_jh_has_nine_weights_for_f1():
    t = {"s": [[1, 2, 3]], "mu": [[60, 31, 2]]}
    ws = gl3serre.jh(t, 101)
    assert len(ws) == 9
    assert len({str(w["weight"]) for w in ws}) == 9


def test_lemmas_hold():
    names = gl3serre.lemma_names()
    assert "lem:ideal" in names
    r = gl3serre.verify_lemma("lem:ideal", 55, 20, 3)
    assert r["holds"]


def test_acceptance_criterion():
    r = gl3serre.acceptance(1)
    assert r["passed"]
