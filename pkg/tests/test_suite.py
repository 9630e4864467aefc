import pytest

from sym3lift.suite import oracle_suite


def test_all_checks_pass():
    res = oracle_suite(seed=0, trials=100)
    assert res.passed
    assert [c.name for c in res.checks] == [
        "functoriality",
        "similitude",
        "transfer-functoriality",
        "slope-table",
        "branch-separation",
        "twist-compatibility",
        "sen-factorization",
    ]


def test_fault_reports_reproducer():
    res = oracle_suite(seed=1, trials=20, inject_fault="transfer-T1")
    fail = res.first_failure
    assert fail.name == "transfer-functoriality"
    assert set(fail.reproducer) == {"ell", "a", "c"}
    assert all(c.passed for c in res.checks if c is not fail)


def test_deterministic():
    assert oracle_suite(seed=5, trials=10).as_dict() == oracle_suite(seed=5, trials=10).as_dict()


def test_bad_arguments():
    with pytest.raises(ValueError):
        oracle_suite(trials=0)
    with pytest.raises(ValueError):
        oracle_suite(inject_fault="nope")
