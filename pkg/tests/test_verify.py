import pytest

from asmlab import verify


def test_suite_result_bookkeeping():
    res = verify.SuiteResult("demo", 2)
    res.add("fine", True)
    assert res.passed
    res.add("broken", False, "why")
    assert not res.passed and [c.name for c in res.failures()] == ["broken"]
    data = res.to_json()
    assert data["passed"] is False and data["checks"][1] == {"name": "broken", "passed": False, "detail": "why"}


def test_run_suite():
    assert [r.suite for r in verify.run_suite("wieland", 2)] == ["wieland"]
    assert len(verify.run_suite("all", 2)) == len(verify.SUITES)
    with pytest.raises(KeyError):
        verify.run_suite("nope", 2)


@pytest.mark.parametrize("name", sorted(verify.SUITES))
def test_every_suite_passes_at_three(name):
    (res,) = verify.run_suite(name, 3)
    assert res.passed, [c.name for c in res.failures()]


def test_boundary_label_suite():
    assert verify.boundary_labels(6).passed
