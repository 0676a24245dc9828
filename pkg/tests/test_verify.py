import json

import pytest

from matcomp.verify import CheckResult, Report, run_suite


def test_reports_are_deterministic():
    first = run_suite("orders", max_degree=3, samples=15, seed=2)
    second = run_suite("orders", max_degree=3, samples=15, seed=2)
    assert first.text() == second.text()
    assert first.passed
    data = json.loads(first.json())
    assert data["suite"] == "orders" and all(r["passed"] for r in data["results"])


def test_report_text_counts_failures():
    report = Report("demo", 0, 2, 5, 4, [CheckResult("a", True, 5), CheckResult("b", False, 3, "[1]")])
    lines = report.text().splitlines()
    assert not report.passed
    assert lines[-1] == "1/2 properties passed"
    assert any(line.startswith("FAIL") and "[1]" in line for line in lines)


@pytest.mark.parametrize("kwargs", [{"name": "nope"}, {"name": "hopf", "max_degree": 0},
                                    {"name": "hopf", "samples": 0}])
def test_bad_arguments(kwargs):
    with pytest.raises(ValueError):
        run_suite(**kwargs)
