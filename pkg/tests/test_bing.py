from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bingdouble.bing import (
    SHADED_REGION,
    alpha,
    alpha_tilde,
    certificate_check,
    conjecture_scan,
    d_table,
    x_coeff,
    x_coeff_dual,
)
from bingdouble.laurent import ONE, exact_div
from bingdouble.qnum import OutOfRange, d_order, qbinom, qfact, qint

mn = st.integers(0, 10)


def test_alpha_corners():
    assert alpha(0, 0) == ONE
    assert alpha(1, 0).is_zero()
    assert alpha(0, 1).is_zero()


@given(st.integers(0, 12))
def test_alpha_at_top_edge(m):
    assert alpha(m, 2 * m) == ONE


@given(st.integers(1, 12))
def test_alpha_one_below_top_edge(m):
    assert alpha(m, 2 * m - 1) == exact_div(qint(4 * m), qint(1))


@given(mn, mn)
def test_alpha_support_window(m, n):
    assert alpha(m, n).is_zero() == (not n <= 2 * m <= 4 * n)


@given(mn, mn)
def test_alpha_symmetry(m, n):
    assert qfact(2 * n + 1) * alpha(m, n) == qfact(2 * m + 1) * alpha(n, m)


@given(mn, mn)
def test_alpha_sum_truncates(m, n):
    # summands with 0 <= 2m+n-2k+1 <= 2n+1 vanish, so the tail past
    # k = (2m-n)//2 contributes nothing
    acc = None
    for k in range(min(m, (2 * m - n) // 2) + 1 if 2 * m >= n else 0):
        term = qbinom(2 * m + 1, k) * qbinom(2 * m + n - 2 * k + 1, 2 * n + 1)
        if k % 2:
            term = -term
        acc = term if acc is None else acc + term
    expected = acc if acc is not None else alpha(m, n) * 0
    assert alpha(m, n) == expected


def test_x_coeff_off_diagonal_vanishes():
    assert x_coeff(1, 2, 3).is_zero()
    assert x_coeff_dual(0, 2, 1).is_zero()


@given(mn, mn)
def test_x_coeff_packaging(m, n):
    sign = -1 if m % 2 else 1
    assert x_coeff(m, m, n) == qfact(n) * alpha(m, n) * sign


@given(st.integers(0, 8))
def test_x_coeff_top_edge(m):
    sign = -1 if m % 2 else 1
    assert x_coeff(m, m, 2 * m) == qfact(2 * m) * sign
    if m >= 1:
        expected = qfact(2 * m - 1) * exact_div(qint(4 * m), qint(1)) * sign
        assert x_coeff(m, m, 2 * m - 1) == expected


@given(st.integers(0, 8), st.integers(0, 8))
def test_dual_route_agrees(m, n):
    assert x_coeff_dual(m, m, n) == x_coeff(m, m, n)


@given(st.integers(0, 10).flatmap(lambda m: st.tuples(st.just(m), st.integers(0, m))))
def test_alpha_tilde_closed_form(pair):
    m, j = pair
    assert alpha_tilde(m, j) == 4**j * comb(m, j)


def test_alpha_tilde_range():
    with pytest.raises(OutOfRange):
        alpha_tilde(3, 4)
    with pytest.raises(OutOfRange):
        alpha_tilde(3, -1)


@given(
    st.integers(1, 8).flatmap(lambda m: st.tuples(st.just(m), st.integers(1, m)))
)
def test_certificate(pair):
    m, j = pair
    report = certificate_check(m, j)
    assert report["pass"]
    assert report["witness"]["en2"]
    assert report["witness"]["en3"]
    assert report["witness"]["telescoped"]


def test_certificate_range():
    with pytest.raises(OutOfRange):
        certificate_check(3, 0)
    with pytest.raises(OutOfRange):
        certificate_check(3, 4)


@given(st.integers(0, 8), st.integers(0, 8), st.integers(1, 6))
def test_d_order_shift_between_alpha_and_x(m, n, l):
    a = alpha(m, n)
    if a.is_zero():
        assert d_order(x_coeff(m, m, n), l) is None
    else:
        assert d_order(x_coeff(m, m, n), l) == n // l + d_order(a, l)


@given(st.integers(0, 10).flatmap(lambda m: st.tuples(st.just(m), st.integers(m, 2 * m))))
def test_white_region_has_no_vanishing_at_one(pair):
    m, n = pair
    assert d_order(alpha(m, n), 1) == 0


def test_d_table_spot_values():
    t = d_table(2, 4, 6)
    assert t.cell(0, 0) == 0
    assert t.cell(1, 1) == 1
    assert t.cell(2, 3) == 1
    assert t.cell(0, 2) is None
    assert t.cell(3, 2) == 2


def test_d_table_matches_d_order():
    t = d_table(3, 5, 8)
    for m in range(6):
        for n in range(9):
            assert t.cell(m, n) == d_order(alpha(m, n), 3)


def test_d_table_workers_deterministic():
    assert d_table(2, 6, 10, workers=4) == d_table(2, 6, 10)


def test_d_table_json():
    t = d_table(2, 1, 2)
    data = t.to_json()
    assert data["l"] == 2
    assert data["m_max"] == 1
    assert data["n_max"] == 2
    assert data["cells"] == [[0, None, None], [None, 1, 0]]
    assert data["shaded"] == SHADED_REGION


def test_d_table_csv():
    lines = d_table(2, 1, 2).to_csv().splitlines()
    assert lines[0] == "m,0,1,2"
    assert lines[1] == "0,0,,"
    assert lines[2] == "1,,1,0"


def test_conjecture_scan_report():
    report = conjecture_scan([2, 3], 6)
    assert report["name"] == "conjecture_scan"
    assert report["pass"] is True
    w = report["witness"]
    assert w["cells_checked"] > 0
    assert w["periodicity_violations"] == []
    assert w["prime_range_violations"] == []
    assert w["confirmed_on_range"] is True
