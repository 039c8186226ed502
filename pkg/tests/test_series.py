from fractions import Fraction as F
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polya_gate.series import (
    PowerSeries,
    ZeroConstantTerm,
    constant,
    format_rat,
    ps_add,
    ps_derivative,
    ps_exp,
    ps_logderiv,
    ps_mul,
    ps_reciprocal,
    ps_scale_arg,
    rat,
)

rats = st.fractions(min_value=-20, max_value=20, max_denominator=50)


def series_st(min_order=0, max_order=8, nonzero_constant=False):
    first = rats.filter(lambda x: x != 0) if nonzero_constant else rats
    return st.integers(min_order, max_order).flatmap(
        lambda n: st.tuples(first, st.lists(rats, min_size=n, max_size=n))
    ).map(lambda t: PowerSeries([t[0], *t[1]]))


def exp_series(order):
    return PowerSeries([F(1, factorial(n)) for n in range(order + 1)])


def test_rat_parsing_and_format():
    assert rat("-5/4") == F(-5, 4)
    assert rat("52.4865") == F(524865, 10000)
    assert format_rat(F(-5, 4)) == "-5/4"
    assert format_rat(F(6, 3)) == "2"
    with pytest.raises(TypeError):
        rat(0.5)


def test_add_examples():
    assert ps_add(PowerSeries([1, 1]), PowerSeries([1, -1])) == PowerSeries([2, 0])
    f = PowerSeries([3, "1/2", -7])
    assert ps_add(f, constant(0, 2)) == f
    assert ps_add(PowerSeries([1, 1, 1]), PowerSeries([0, 0, 1])) == PowerSeries([1, 1, 2])


def test_mismatched_orders_truncate():
    assert ps_add(PowerSeries([1, 2, 3]), PowerSeries([1, 1])).order == 1
    assert ps_mul(PowerSeries([1, 2, 3]), PowerSeries([1])).order == 0


def test_mul_examples():
    assert ps_mul(PowerSeries([1, 1, 0]), PowerSeries([1, -1, 0])) == PowerSeries([1, 0, -1])
    f = PowerSeries([2, -3, "1/7"])
    assert ps_mul(f, constant(1, 2)) == f
    sq = ps_mul(exp_series(4), exp_series(4))
    # e^{2x}: 2^n / n!
    assert sq.coeffs == tuple(F(2**n, factorial(n)) for n in range(5))
    assert sq.coeffs == (1, 2, 2, F(4, 3), F(2, 3))


def test_derivative_examples():
    assert ps_derivative(PowerSeries([1, 1, 1])) == PowerSeries([1, 2])
    assert ps_derivative(PowerSeries([5, 0])) == PowerSeries([0])
    assert ps_derivative(exp_series(5)) == exp_series(4)
    with pytest.raises(ValueError):
        ps_derivative(PowerSeries([1]))


def test_reciprocal_examples():
    assert ps_reciprocal(PowerSeries([1, -1, 0, 0])) == PowerSeries([1, 1, 1, 1])
    assert ps_reciprocal(constant(1, 0)) == constant(1, 0)
    assert ps_reciprocal(exp_series(4)) == PowerSeries([1, -1, F(1, 2), F(-1, 6), F(1, 24)])
    with pytest.raises(ZeroConstantTerm):
        ps_reciprocal(PowerSeries([0, 1]))


def test_logderiv_examples():
    assert ps_logderiv(exp_series(6)) == constant(1, 5)
    a = F(3, 7)
    assert ps_logderiv(PowerSeries([1, a, 0, 0])) == PowerSeries([a, -a * a, a**3])
    with pytest.raises(ZeroConstantTerm):
        ps_logderiv(PowerSeries([0, 1]))


def test_logderiv_of_1f2_leading_term():
    from polya_gate.hyper import HyperParams, pfq_series

    f = pfq_series(HyperParams(["3/2"], [1, 2]), 4)
    assert ps_logderiv(f)[0] == F(3, 4)


def test_scale_and_exp():
    assert ps_scale_arg(exp_series(5), 2).coeffs == tuple(F(2**n, factorial(n)) for n in range(6))
    f = PowerSeries([1, "2/3", -4])
    assert ps_scale_arg(f, 1) == f
    assert ps_scale_arg(f, 0) == PowerSeries([1, 0, 0])
    assert ps_exp(1, 3) == PowerSeries([1, 1, F(1, 2), F(1, 6)])
    assert ps_exp(0, 3) == PowerSeries([1, 0, 0, 0])
    assert ps_exp(-1, 2) == PowerSeries([1, -1, F(1, 2)])


def test_json_roundtrip():
    f = PowerSeries(["-5/4", 3, 0])
    data = f.to_json()
    assert data == {"coeffs": ["-5/4", "3", "0"], "order": 2}
    assert PowerSeries.from_json(data) == f


@settings(max_examples=60, deadline=None)
@given(series_st(nonzero_constant=True))
def test_reciprocal_is_inverse(f):
    assert ps_mul(f, ps_reciprocal(f)) == constant(1, f.order)


@settings(max_examples=60, deadline=None)
@given(series_st(1, 7, True), series_st(1, 7, True))
def test_logderiv_additive(f, g):
    lhs = ps_logderiv(ps_mul(f, g))
    rhs = ps_add(ps_logderiv(f), ps_logderiv(g))
    assert lhs == rhs


@settings(max_examples=60, deadline=None)
@given(series_st(), rats.filter(lambda c: c != 0))
def test_scale_roundtrip(f, c):
    assert ps_scale_arg(ps_scale_arg(f, c), 1 / c) == f


@settings(max_examples=40, deadline=None)
@given(series_st(), series_st())
def test_results_canonical(f, g):
    for c in ps_mul(f, g).coeffs + ps_add(f, g).coeffs:
        assert isinstance(c, F) and c.denominator > 0
