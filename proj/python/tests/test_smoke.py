import pytest

import eqmot


def test_weight0_examples():
    assert eqmot.weight0(-2, 4) == "Z/2"
    assert eqmot.weight0(5, -6) == "Z/2"
    assert eqmot.weight0(0, 0) == "Z"
    assert eqmot.weight0(-3, 3) == "0"
    assert eqmot.weight0(2, -2, "2") == "Z/2"


def test_closed_forms_agree_with_the_complexes():
    for p in range(-4, 5):
        for a in range(-6, 7):
            for coeff in ("Z", "2"):
                computed = eqmot.weight0(a, p, coeff)
                assert computed == eqmot.weight0_closed_form(a, p, coeff)
                assert computed == eqmot.bredon_point(a, p, coeff)


def test_weight1_and_sigma_fixtures():
    assert eqmot.weight1_closed_form(0, 1, "Z", "general") == "Z/2"
    assert eqmot.weight_sigma_closed_form(1, 0, "Z", "freal") == "k*2"
    assert eqmot.weight_sigma_closed_form(2, -3, "2", "euclidean") == "(Z/2)^2"
    with pytest.raises(eqmot.TableRangeError, match="outside theorem range"):
        eqmot.weight1_closed_form(-1, 2, "Z", "freal")


def test_derive_matches_fixtures():
    t = eqmot.derive("1", "euclidean", 6)
    assert t["complete"]
    value, trail = t["cells"][(-1, 2)]
    assert value == "k*"
    assert trail
    assert t["cells"][(1, 2)][0] == eqmot.weight1_closed_form(1, 2, "Z", "euclidean")


def test_reduce_bidegree():
    assert eqmot.reduce_bidegree(0, 0, -1, -1)["kind"] == "zero"
    r = eqmot.reduce_bidegree(1, 7, -2, 2)
    assert (r["table"], r["a"], r["p"]) == ("weight0", 5, 3)
    assert eqmot.reduce_bidegree(2, 4, 0, 1, borel=True)["table"] == "sigma"


def test_grid_schema():
    cells = eqmot.grid("0", 2, 3, "Z")
    assert len(cells) == 5 * 7
    c = cells[0]
    assert set(c) == {"a", "p", "weight", "coeff", "group", "source", "citation"}
    assert set(c["group"]) == {"rank", "torsion", "symbolic", "text"}
    assert c["source"] == "computed"


def test_check_suite():
    (report,) = eqmot.check("fixture-coverage")
    assert report["passed"], report["failures"]
    assert "weight0-integral" in eqmot.suite_ids()
