import pytest

import wittforge as wf


def test_square_classes():
    assert wf.squarefree_part(18) == 2
    assert wf.squarefree_part("-12/5") == -15
    with pytest.raises(wf.DomainError):
        wf.squarefree_part(0)


def test_hilbert_and_brauer():
    assert wf.hilbert_symbol(-1, -1, "real") == -1
    assert wf.hilbert_symbol(-1, -1, 2) == -1
    assert wf.hilbert_symbol(-1, -1, 3) == 1
    assert wf.brauer_class(-1, -1) == ["real", "2"]
    assert wf.brauer_class(1, 7) == []


def test_invariants():
    r = wf.invariants([1, -1])
    assert r["e1"] == "1"
    assert r["witt_index"] == 1
    r8 = wf.invariants([1] * 8)
    assert r8["e3"] == 1


def test_decompose12():
    phi = [1, 1, 1, 1, 1, -1]
    psi = phi + [-2 * x for x in phi]
    r = wf.decompose12(psi)
    assert r["verified"] is True
    assert r["beta_product"] == "1"
    assert wf.hyper_over(psi, 2)["hyperbolic_over"] is True


def test_exists_and_f3():
    r = wf.exists((2, 5), (-1, -1))
    assert r["outcome"] == "witness"
    assert r["trivial_invariants"] is True
    f = wf.f3(r["presentation"])
    assert f["agree"] is True
    assert f["f3_norms"] == f["f3_symbol"]


def test_obstruction():
    r = wf.obstruction([[[1, 0, 0, 0], [0, 1, 0, 0]], [[0, 0, 1, 0], [0, 0, 0, 1]]])
    assert r["obstructed"] is True
    assert r["splittings"] == 560
    with pytest.raises(wf.DomainError):
        wf.obstruction([[[1, 0, 0, 0], [0, 1, 0, 0]], [[1, 0, 0, 0], [0, 0, 0, 1]]])


def test_parse_errors():
    with pytest.raises(wf.ParseError):
        wf.invariants({"diagonal": [1]})
    with pytest.raises(ValueError):
        wf.invariants(["x"])


def test_selftest():
    r = wf.selftest(seed=5, count=3)
    assert r["all_passed"] is True
    assert len(r["suites"]) == 11
