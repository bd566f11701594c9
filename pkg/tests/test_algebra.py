import cmath

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from distpair.algebra import (
    DEGREE_CAP,
    ComplexPolynomial,
    poly,
    poly_derivative,
    poly_eval,
    poly_mul,
    poly_odd_part_over_x,
    poly_reflect,
    poly_shift,
)
from distpair.errors import DegreeCapExceeded

unit = st.floats(-1, 1, allow_nan=False)
cplx = st.builds(complex, unit, unit)
polys = st.lists(cplx, min_size=0, max_size=9).map(poly)
points = st.builds(complex, st.floats(-2, 2), st.floats(-2, 2))


def close_coeffs(p, q, tol=1e-12):
    n = max(len(p.coeffs), len(q.coeffs))
    a = p.coeffs + (0j,) * (n - len(p.coeffs))
    b = q.coeffs + (0j,) * (n - len(q.coeffs))
    return all(abs(u - v) <= tol for u, v in zip(a, b))


@pytest.mark.parametrize(
    "coeffs, x, expected",
    [([0], 5, 0), ([1, 0, -1], 2, -3), ([0, 1], 3 + 4j, 3 + 4j)],
)
def test_poly_eval_examples(coeffs, x, expected):
    assert poly_eval(poly(coeffs), x) == expected


def test_zero_polynomial_normalized():
    assert poly([0]).coeffs == ()
    assert poly([1, 2, 0, 0]).coeffs == (1, 2)
    assert poly([0]).degree == -1
    # absolute threshold: tiny but normal coefficients survive
    assert poly([1, 1e-200]).degree == 1
    assert poly([1, 1e-310]).degree == 0


@pytest.mark.parametrize(
    "coeffs, expected",
    [([1, 0, -1], [0, -2]), ([3.5], []), ([0, 0, 0, 1], [0, 0, 3])],
)
def test_poly_derivative_examples(coeffs, expected):
    assert poly_derivative(poly(coeffs)) == poly(expected)


def test_poly_mul_examples():
    assert poly_mul(poly([0, 1]), poly([0, 1])) == poly([0, 0, 1])
    q = poly([2, 1j, -3])
    assert poly_mul(poly([1]), q) == q
    assert poly_mul(poly([1, 1]), poly([1, -1])) == poly([1, 0, -1])


def test_poly_shift_examples():
    assert poly_shift(poly([0, 1]), 1) == poly([-1, 1])
    assert poly_shift(poly([1]), 2 + 3j) == poly([1])
    assert poly_shift(poly([0, 0, 1]), -1) == poly([1, 2, 1])


def test_degree_cap():
    big = poly([0] * 40 + [1])
    with pytest.raises(DegreeCapExceeded):
        poly_mul(big, big)
    with pytest.raises(DegreeCapExceeded):
        ComplexPolynomial((1,) * (DEGREE_CAP + 2))
    assert poly_mul(poly([0] * 32 + [1]), poly([0] * 32 + [1])).degree == DEGREE_CAP


def test_reflect_and_odd_quotient():
    p = poly([1, 2, 3, 4])
    assert poly_reflect(p) == poly([1, -2, 3, -4])
    # (p(x) - p(-x))/x = 2*(2 + 4x^2)
    assert poly_odd_part_over_x(p) == poly([4, 0, 8])


@settings(max_examples=60, deadline=None)
@given(polys, polys, st.lists(points, min_size=10, max_size=10))
def test_mul_matches_pointwise_product(p, q, xs):
    r = poly_mul(p, q)
    for x in xs:
        ref = poly_eval(p, x) * poly_eval(q, x)
        assert abs(poly_eval(r, x) - ref) <= 1e-12 * (1 + abs(ref))


@settings(max_examples=60, deadline=None)
@given(polys, polys)
def test_leibniz(p, q):
    lhs = poly_derivative(poly_mul(p, q))
    rhs = poly_mul(poly_derivative(p), q) + poly_mul(p, poly_derivative(q))
    assert close_coeffs(lhs, rhs)


@settings(max_examples=60, deadline=None)
@given(polys, cplx)
def test_shift_roundtrip(p, c):
    back = poly_shift(poly_shift(p, c), -c)
    assert close_coeffs(back, p, 1e-12)


def test_shift_is_translation():
    p = poly([1 - 1j, 0.5, -2, 0.25j])
    c = 0.3 - 0.7j
    q = poly_shift(p, c)
    for x in (0.0, 1.5, -2 + 1j):
        assert cmath.isclose(poly_eval(q, x), poly_eval(p, x - c), rel_tol=1e-13, abs_tol=1e-13)
