from planebranch.kernel.algebra import (
    BivariatePolynomial,
    UniSeries,
    YPolynomial,
    hasse_derivative,
    partial_derivative,
    poly_ring_ops,
    resultant_y,
    series_inverse,
    series_nth_root,
    substitute,
    y_poly_divide,
)
from tests.helpers import gf, poly


def test_ring_operations():
    f = poly("X+Y", 7)
    assert f * f == poly("X^2+2*X*Y+Y^2", 7)
    assert f.pow(7) == poly("X^7+Y^7", 7)
    assert (f - f).is_zero()


def test_degree_and_order():
    f = poly("Y^2-X^3+X^2*Y^5", 5)
    assert f.order() == 2
    assert f.degree() == 7
    assert f.y_degree() == 5
    assert f.homogeneous_part(2) == poly("Y^2", 5)


def test_derivative_vanishes_in_characteristic():
    assert partial_derivative(poly("X^3+Y", 3), "X").is_zero()
    assert partial_derivative(poly("Y^2-X^3", 7), "X") == poly("-3*X^2", 7)


def test_hasse_derivative_survives_characteristic():
    f = poly("Y^3", 3)
    assert partial_derivative(f, "Y").is_zero()
    assert hasse_derivative(f, "Y", 3) == poly("1", 3)


def test_series_inverse_geometric():
    spec = gf(7)
    u = UniSeries(spec, [1, 6], 10)
    v = series_inverse(u)
    assert v.coeffs == [1] * 10
    assert (u * v).truncate(10) == UniSeries.one(spec, 10)


def test_series_nth_root_squares_back():
    spec = gf(7)
    u = UniSeries(spec, [1, 2, 1], 12)
    v = series_nth_root(u, 2)
    assert v.pow(2).truncate(12) == u


def test_evaluate_on_parametrization():
    spec = gf(7)
    t2 = UniSeries.monomial(spec, 2, 20)
    t3 = UniSeries.monomial(spec, 3, 20)
    assert poly("Y^2-X^3", 7).evaluate(t2, t3, 20).is_zero()
    assert poly("Y", 7).evaluate(t2, t3, 20).order() == 3


def test_y_poly_divide_monic():
    a = YPolynomial(poly("Y^2-X^3", 7))
    b = YPolynomial(poly("Y-X", 7))
    q, r = y_poly_divide(a, b)
    assert q.poly == poly("Y+X", 7)
    assert r.poly == poly("X^2-X^3", 7)
    assert (q * b + r).poly == a.poly


def test_resultant_order_matches_intersection():
    res = resultant_y(poly("Y^2-X^3", 7), poly("Y^3-X^4", 7))
    assert res.order() == 8
    assert resultant_y(poly("Y^2-X^3", 7), poly("Y", 7)).order() == 3


def test_compose_swaps_variables():
    f = poly("Y^2-X^3", 5)
    x = BivariatePolynomial.x(f.spec)
    y = BivariatePolynomial.y(f.spec)
    assert f.compose(y, x) == f.swap()
    assert f.swap() == poly("X^2-Y^3", 5)


def test_poly_ring_ops():
    f = poly("X+Y", 5)
    g = poly("X-Y", 5)
    assert poly_ring_ops(f, g, "mul") == poly("X^2-Y^2", 5)
    assert poly_ring_ops(f, g, "add") == poly("2*X", 5)
    assert poly_ring_ops(f, 5, "pow") == poly("X^5+Y^5", 5)


def test_substitute_is_multiplicative():
    spec = gf(7)
    xs = UniSeries(spec, [0, 1, 3], 12)
    ys = UniSeries(spec, [0, 0, 2, 5], 12)
    f = poly("Y^2-X^3+X*Y", 7)
    g = poly("1+X+Y^3", 7)
    left = substitute(f * g, xs, ys, 12)
    right = substitute(f, xs, ys, 12) * substitute(g, xs, ys, 12)
    assert left == right
