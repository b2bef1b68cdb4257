import pytest

import jacobsthal as jc


def test_terms():
    assert jc.term("J", "2", 6) == "18"
    assert jc.term("J", "sym", 3) == "k^2 - k"
    assert jc.term("J", "2", -2) == "1/2"
    assert jc.term("j", "sym", 2) == "k^2 + 1"


def test_binet_agrees_with_recurrence():
    for k in ("1/2", "1", "2", "7/3", "sym"):
        for n in range(-8, 12):
            assert jc.binet(k, n) == jc.term("J", k, n)


def test_matrix():
    assert jc.matrix("Jn", "sym", -1) == [
        ["0", "1", "0"],
        ["0", "0", "1"],
        ["k^-1", "-1 + k^-1", "-1 + k^-1"],
    ]
    assert jc.matrix("N", "2", 0) == [["1", "4", "4"], ["2", "-1", "2"], ["1", "1", "-2"]]
    assert jc.det_j("2", 0) == "36"
    assert jc.det_J("sym", 3) == "k^3"


def test_classic_values_are_ints():
    assert [jc.jac3_classic(n) for n in range(10)] == [0, 1, 1, 2, 5, 9, 18, 37, 73, 146]
    assert [jc.modified_lucas_classic(n) for n in range(5)] == [3, 1, 3, 10, 15]
    big = jc.jac3_classic(200)
    assert isinstance(big, int)
    assert big == (2 ** 201 - jc.residue_z(200)) // 7
    assert jc.jac3_multi_index(3, 4) == jc.jac3_classic(12)


def test_verify():
    report = jc.verify("square_a1", k=["2", "sym"], n=(1, 5))
    assert report == {"checks": 10, "identity": "square_a1", "status": "pass"}
    reports = jc.verify_all(k=["2", "sym"], n=(1, 3), m=(1, 3))
    assert len(reports) == 20 == len(jc.identity_names())
    assert all(r["status"] == "pass" for r in reports)


def test_errors():
    with pytest.raises(ValueError):
        jc.term("J", "-2", 1)
    with pytest.raises(jc.UsageError):
        jc.verify("nonsense")
    with pytest.raises(jc.DomainError):
        jc.jac3_classic(-1)
    with pytest.raises(ValueError):
        jc.matrix("M", "2", -1)
