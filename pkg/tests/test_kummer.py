from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kummer_euler import kummer, partitions
from kummer_euler.errors import ConsistencyError, UsageError
from kummer_euler.kummer import (
    KummerParams,
    KummerTable,
    closed_form_dim3,
    closed_form_g1r1,
    closed_form_g2,
    divisor_sum,
    dt_degree_zero,
    kummer_euler_table,
    kummer_euler_table_via_power,
    kummer_euler_via_w,
    orbifold_euler,
    w_euler_partition_sum,
    w_euler_series,
)
from kummer_euler.series import TruncatedSeries

from oracles import sigma


def test_params_validation():
    with pytest.raises(UsageError):
        KummerParams(0, 1, 1)
    with pytest.raises(UsageError):
        KummerParams(1, -1, 1)
    with pytest.raises(UsageError):
        KummerParams(1, 0, 1.0)
    p = KummerParams(2, 3, -1, 5)
    assert (p.m, p.w_dim) == (5, 4)


def test_table_g2_examples():
    t = kummer_euler_table(KummerParams(2, 0, 1, 5))
    assert t.chi[1:] == (1, 24, 108, 448, 750)
    assert [8 * 3, 27 * 4, 64 * 7, 125 * 6] == list(t.chi[2:])


@pytest.mark.parametrize("g,r", [(1, 1), (2, 3), (3, 0)])
def test_table_zero_chi(g, r):
    assert kummer_euler_table(KummerParams(g, r, 0, 6)).chi[1:] == (0,) * 6


def test_table_dim3_example():
    t = kummer_euler_table(KummerParams(1, 2, 2, 4))
    assert t.chi[1:] == (2, 20, 60, 168)
    assert list(t.chi[1:]) == [2 * n * sigma(n, 2) for n in range(1, 5)]


def test_table_orbifold_column():
    t = kummer_euler_table(KummerParams(2, 0, 1, 6))
    assert t.orbifold[2] == F(3, 2)
    for n, chi, orb in t.rows():
        assert orb * n**4 == chi
        assert orb == orbifold_euler(t.params, n)


def test_table_rejects_inconsistent_orbifold():
    p = KummerParams(1, 0, 1, 2)
    with pytest.raises(ConsistencyError):
        KummerTable(p, (0, 1, 2), (F(0), F(1), F(1)))


def test_non_integral_value_aborts(monkeypatch):
    # a fake partition series whose log has a non-integral n^2-multiple
    fake = lambda m, order, cache=None: TruncatedSeries([1, F(1, 3)] + [0] * (order - 1), order)
    monkeypatch.setattr(partitions, "pm_series", fake)
    with pytest.raises(ConsistencyError):
        kummer_euler_table(KummerParams(1, 1, 1, 3))
    with pytest.raises(ConsistencyError):
        w_euler_series(1, 3)


def test_w_series_examples():
    assert w_euler_series(1, 4)[1:] == [1, 6, 12, 28]
    assert w_euler_series(2, 4)[1:] == [1, 10, 30, 84]
    for m in range(0, 5):
        assert w_euler_series(m, 1)[1] == 1


def test_w_partition_sum_examples():
    assert w_euler_partition_sum(1, 2) == 6 == 2 * sigma(2, 1)
    assert w_euler_partition_sum(2, 2) == 10 == 2 * sigma(2, 2)
    for m in range(0, 5):
        assert w_euler_partition_sum(m, 1) == 1


@pytest.mark.parametrize("m", [1, 2, 3])
def test_w_routes_agree(m):
    ser = w_euler_series(m, 12)
    for n in range(1, 13):
        assert w_euler_partition_sum(m, n) == ser[n]


def test_via_w_examples():
    assert kummer_euler_via_w(KummerParams(2, 0, 1), 2) == 24
    for chi in (-1, 2, 5):
        p = KummerParams(1, 1, chi)
        for n in range(1, 8):
            assert kummer_euler_via_w(p, n) == chi * n * sigma(n, 1)
    assert kummer_euler_via_w(KummerParams(3, 1, 0), 4) == 0


def test_divisor_sum_examples():
    assert divisor_sum(6, 1) == 12
    assert divisor_sum(4, 2) == 21
    for p in (2, 3, 5, 7, 11, 97):
        for s in range(4):
            assert divisor_sum(p, s) == 1 + p**s
    for n in range(1, 200):
        for s in range(3):
            assert divisor_sum(n, s) == sigma(n, s)
    with pytest.raises(UsageError):
        divisor_sum(0, 1)


def test_closed_form_examples():
    assert closed_form_g2(3) == 108
    assert closed_form_g1r1(-2, 4) == -2 * 4 * 7
    assert dt_degree_zero(1) == 1
    assert dt_degree_zero(2) == F(-5, 2)
    assert dt_degree_zero(3) == F(10, 3)
    assert closed_form_dim3(3, 1, 2) == 2**5 * 5 == 160
    assert 2**6 * abs(dt_degree_zero(2)) == 160


def test_dt_against_table():
    t = kummer_euler_table(KummerParams(3, 0, 1, 10))
    for n in range(1, 11):
        assert dt_degree_zero(n) == F((-1) ** (n - 1), n**6) * t.chi[n]
        assert dt_degree_zero(n) * (-1) ** (n - 1) * n == sigma(n, 2)


def test_orbifold_examples():
    assert orbifold_euler(KummerParams(2, 0, 1), 2) == F(3, 2)
    assert orbifold_euler(KummerParams(2, 1, 0), 5) == 0
    # g=1, r=1 has m=2: orbifold value chi * sigma_1(n)/n
    for n in range(1, 9):
        assert orbifold_euler(KummerParams(1, 1, 1), n) == F(sigma(n, 1), n)


def test_g1_r0_edge_routes_agree():
    p = KummerParams(1, 0, 1, 10)
    t = kummer_euler_table(p)
    assert t.chi[1:] == tuple(range(1, 11))
    for n in range(1, 11):
        assert kummer_euler_via_w(p, n) == t.chi[n]


def test_g2_closed_form_through_20():
    t = kummer_euler_table(KummerParams(2, 0, 1, 20))
    assert list(t.chi[1:]) == [n**3 * sigma(n, 1) for n in range(1, 21)]


@pytest.mark.parametrize("g", [1, 2, 3])
@pytest.mark.parametrize("chi", [-2, -1, 1, 2, 3])
def test_dim3_closed_form_through_20(g, chi):
    t = kummer_euler_table(KummerParams(g, 3 - g, chi, 20))
    assert list(t.chi[1:]) == [chi * n ** (2 * g - 1) * sigma(n, 2) for n in range(1, 21)]


@pytest.mark.parametrize("g,r", [(g, m - g) for m in (2, 3, 4) for g in range(1, m + 1)])
@pytest.mark.parametrize("chi", [-2, -1, 0, 1, 2, 3])
def test_route_agreement(g, r, chi):
    p = KummerParams(g, r, chi, 12)
    main = kummer_euler_table(p)
    power = kummer_euler_table_via_power(p)
    assert main == power
    for n in range(1, 13):
        assert kummer_euler_via_w(p, n) == main.chi[n]
        if g == 1 and r == 1:
            assert main.chi[n] == closed_form_g1r1(chi, n)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(0, 3), st.integers(-5, 5))
def test_integrality_property(g, r, chi):
    p = KummerParams(g, r, chi, 9)
    t = kummer_euler_table(p)
    assert all(isinstance(x, int) for x in t.chi)
    for m in range(0, 4):
        assert all(isinstance(x, int) for x in w_euler_series(m, 9))
