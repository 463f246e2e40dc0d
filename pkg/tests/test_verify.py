from fractions import Fraction as F

import pytest

from kummer_euler.verify import SUITES, kummer_grid, verify_all
from kummer_euler.weights import e_weight


@pytest.fixture(scope="module")
def default_report():
    return verify_all(12)


def test_default_run_passes(default_report):
    assert default_report.passed, default_report.format_text()
    assert {c.suite for c in default_report.checks} == set(SUITES)


def test_report_shapes(default_report):
    d = default_report.to_dict()
    assert d["passed"] and d["N"] == 12
    assert all(len(c["routes"]) == 2 for c in d["checks"])
    text = default_report.format_text()
    assert text.splitlines()[-1].startswith(f"{len(d['checks'])}/{len(d['checks'])}")


def test_faulty_weight_base_case_is_caught_at_n1():
    def faulty(alpha, cache=None):
        if alpha.mult[alpha.n - 1] == 1:
            return F(alpha.n * alpha.n + 1)
        return e_weight(alpha, {})

    report = verify_all(8, ("weights",), weight=faulty)
    check = report.get("weights.equivalence")
    assert not check.passed
    assert check.first_bad == 1
    assert "partition sum" in check.routes


def test_faulty_macmahon_exponents_caught_at_k2():
    report = verify_all(8, ("partitions",), plane_exponents=lambda k: k + 1 if k >= 2 else k)
    check = report.get("partitions.m3_oracle")
    assert not check.passed
    assert check.first_bad == 2
    assert check.routes == ("macmahon product", "order-ideal enumeration")
    assert report.get("partitions.m2_oracle").passed


def test_suite_selection():
    report = verify_all(6, ("series",))
    assert {c.suite for c in report.checks} == {"series"}
    with pytest.raises(ValueError):
        verify_all(6, ("nope",))


def test_grid_shape():
    grid = kummer_grid(4)
    assert (4, 0) in grid and (1, 3) in grid
    assert all(g >= 1 and 2 <= g + r <= 4 for g, r in grid)
