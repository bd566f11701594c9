import math

import numpy as np
import pytest
from scipy import integrate

from distpair.algebra import poly
from distpair.errors import InvalidInput, InvalidTolerance, ParseError
from distpair.testfn import (
    CANONICAL,
    TestFunction,
    corpus_generate,
    gaussian,
    parse_complex,
    parse_test_function,
    tf_derivative,
    tf_eval,
    tf_fourier,
    tf_multiply_x,
    tf_reflect,
    tf_tail_radius,
    tf_taylor,
)
from oracles import quad_fourier

GRID5 = np.array([-2.0, -1.0, 0.0, 1.0, 2.0])


def test_eval_examples(gauss):
    assert tf_eval(gauss, 0.0) == 1
    assert tf_eval(gauss, 1.0) == pytest.approx(0.36787944117144233, abs=1e-15)
    assert tf_eval(CANONICAL["xgauss"], -2.0) == pytest.approx(-2 * math.exp(-4), abs=1e-15)


def test_eval_is_vectorized():
    phi = TestFunction(poly([1j, 2]), 0.7, 0.3, -1.2)
    xs = np.linspace(-3, 3, 7)
    assert np.allclose(tf_eval(phi, xs), [tf_eval(phi, float(x)) for x in xs], rtol=0, atol=1e-15)


def test_width_must_be_positive():
    with pytest.raises(InvalidInput):
        gaussian(a=0.0)


def test_derivative_examples(gauss):
    assert tf_derivative(gauss, 1).poly == poly([0, -2])
    xg = CANONICAL["xgauss"]
    assert tf_derivative(xg, 2).poly == poly([0, -6, 0, 4])
    assert tf_derivative(xg, 0) == xg


def test_second_derivative_matches_central_differences():
    d2 = tf_derivative(CANONICAL["xgauss"], 2)
    h = 1e-4
    for x in (0.5, 1.0, 2.0):
        fd = (tf_eval(CANONICAL["xgauss"], x + h) - 2 * tf_eval(CANONICAL["xgauss"], x)
              + tf_eval(CANONICAL["xgauss"], x - h)) / h**2
        assert abs(fd - tf_eval(d2, x)) < 1e-6


def test_taylor_examples(gauss):
    assert tf_taylor(gauss, 2) == poly([1, 0, -1])
    assert tf_taylor(CANONICAL["xgauss"], 1) == poly([0, 1])
    phi = TestFunction(poly([0.3 + 1j, -2]), 0.5, 1.2, 2.0)
    assert tf_taylor(phi, 0) == poly([tf_eval(phi, 0.0)])


def test_fourier_base_examples(gauss):
    fg = tf_fourier(gauss)
    assert fg.a == pytest.approx(0.25)
    for x in (0.0, 1.0, 2.0):
        ref = math.sqrt(math.pi) * math.exp(-x * x / 4)
        assert abs(tf_eval(fg, x) - ref) < 1e-15
        assert abs(tf_eval(fg, x) - quad_fourier(gauss, x)) < 1e-12


def test_fourier_multiplication_rule():
    xg = CANONICAL["xgauss"]
    fx = tf_fourier(xg)
    for x in (0.0, 1.0, 2.0):
        ref = -0.5j * math.sqrt(math.pi) * x * math.exp(-x * x / 4)
        assert abs(tf_eval(fx, x) - ref) < 1e-15
        assert abs(tf_eval(fx, x) - quad_fourier(xg, x)) < 1e-12


def test_double_fourier_of_gaussian(gauss):
    ff = tf_fourier(tf_fourier(gauss))
    for x in (-1.5, 0.0, 0.7):
        assert abs(tf_eval(ff, x) - 2 * math.pi * math.exp(-x * x)) < 1e-14


def test_closure_derivative_vs_finite_differences(small_corpus):
    h = 1e-5
    for phi in small_corpus:
        d = tf_derivative(phi, 1)
        exact = tf_eval(d, GRID5)
        fd = (tf_eval(phi, GRID5 + h) - tf_eval(phi, GRID5 - h)) / (2 * h)
        scale = np.max(np.abs(exact))
        assert np.max(np.abs(fd - exact)) <= 1e-6 * scale


def test_closure_fourier_vs_quadrature(small_corpus):
    for phi in small_corpus:
        f = tf_fourier(phi)
        for x in GRID5:
            assert abs(tf_eval(f, x) - quad_fourier(phi, x)) <= 1e-8


def test_fourier_inversion_on_corpus(corpus):
    grid = np.linspace(-5, 5, 11)
    for phi in corpus:
        ff = tf_eval(tf_fourier(tf_fourier(phi)), grid)
        ref = 2 * math.pi * tf_eval(phi, -grid)
        assert np.max(np.abs(ff - ref)) <= 1e-9 * np.max(np.abs(ref))


def test_taylor_remainder_bound(corpus):
    t = np.linspace(-1, 1, 201)
    xs = np.linspace(-1, 1, 41)
    for phi in corpus:
        for n in range(1, 6):
            m_n = np.max(np.abs(tf_eval(tf_derivative(phi, n), t)))
            taylor = tf_taylor(phi, n - 1)
            rem = np.abs(tf_eval(phi, xs) - taylor(xs))
            assert np.all(rem <= m_n * np.abs(xs) ** n / math.factorial(n) + 1e-14)


def test_rapid_decrease(corpus):
    # radius taken for the class member x^k phi^(m) itself
    for phi in corpus[:20]:
        for m in range(5):
            d = tf_derivative(phi, m)
            for k in range(5):
                g = tf_multiply_x(d, k)
                if g.poly.is_zero():
                    continue
                r = tf_tail_radius(g, 1e-16)
                assert abs(tf_eval(g, r)) <= 1e-12
                assert abs(tf_eval(g, -r)) <= 1e-12


def test_tail_radius_examples(gauss):
    r16 = tf_tail_radius(gauss, 1e-16)
    # smallest half-integer with exp(-R^2)/R <= 1e-16 (both tails)
    assert r16 == 6.0
    assert math.exp(-36) / 6 <= 1e-16 < math.exp(-5.5**2) / 5.5
    assert tf_tail_radius(gauss, 1e-4) < r16
    ten = gauss.scaled(10)
    for tol in (1e-4, 1e-9, 1e-16):
        assert tf_tail_radius(ten, tol) == tf_tail_radius(gauss, tol / 10)


def test_tail_radius_bound_is_honest(small_corpus):
    for phi in small_corpus:
        r = tf_tail_radius(phi, 1e-8)
        tail = sum(
            integrate.quad(lambda x: abs(tf_eval(phi, x)), lo, hi, limit=200)[0]
            for lo, hi in ((r, r + 80), (-r - 80, -r))
        )
        assert tail <= 1e-8


def test_tail_radius_monotone(small_corpus):
    tols = [1e-2, 1e-5, 1e-8, 1e-12, 1e-16]
    for phi in small_corpus:
        rs = [tf_tail_radius(phi, t) for t in tols]
        assert rs == sorted(rs)


def test_tail_radius_rejects_bad_tol(gauss):
    with pytest.raises(InvalidTolerance):
        tf_tail_radius(gauss, 0.0)


def test_reflect(small_corpus):
    xs = np.linspace(-3, 3, 13)
    for phi in small_corpus:
        assert np.allclose(tf_eval(tf_reflect(phi), xs), tf_eval(phi, -xs), rtol=1e-13, atol=1e-15)


def test_corpus_examples():
    assert len(corpus_generate(42, 0)) == 0
    a, b = corpus_generate(42, 10), corpus_generate(42, 10)
    assert a.members == b.members
    assert corpus_generate(42, 10).members != corpus_generate(43, 10).members


def test_corpus_canonical_prefix_and_ranges(corpus):
    assert corpus.members[:4] == tuple(CANONICAL.values())
    for phi in corpus.members[4:]:
        assert phi.poly.degree <= 4
        assert 0.2 <= phi.a <= 2 and -2 <= phi.mu <= 2 and -3 <= phi.omega <= 3
        assert all(abs(c.real) <= 1 and abs(c.imag) <= 1 for c in phi.poly.coeffs)
    assert corpus_generate(42, 20).members == corpus.members[:20]


@pytest.mark.parametrize(
    "text, value",
    [("1", 1), ("-2.5", -2.5), ("1+2i", 1 + 2j), ("0.5-1e-3i", 0.5 - 1e-3j), ("3i", 3j), ("-i", -1j)],
)
def test_parse_complex(text, value):
    assert parse_complex(text) == value


def test_parse_test_function():
    assert parse_test_function("gauss@1") == CANONICAL["gauss@1"]
    phi = parse_test_function("hg:poly=[1,0.5-2i];a=0.7;mu=-1;omega=2.5")
    assert phi == TestFunction(poly([1, 0.5 - 2j]), 0.7, -1.0, 2.5)
    for bad in ("bogus", "hg:a=1", "hg:poly=[1];a=-1", "hg:poly=1,2"):
        with pytest.raises(ParseError):
            parse_test_function(bad)
