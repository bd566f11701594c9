"""Acceptance criteria AC1-AC11; each records one PASS/FAIL line in the run summary."""

import json
import math
import subprocess
import sys

import numpy as np
import pytest

from distpair.dist import H, ONE, SGN, Fourier, pair
from distpair.testfn import CANONICAL, corpus_generate, tf_eval, tf_fourier
from distpair.verify import (
    check_delta_ramp,
    check_fourier_heaviside,
    check_fourier_one,
    check_fourier_sgn,
    check_prop1,
    check_pv_step,
    check_pvn,
    check_remark_csl,
    riemann_lebesgue_values,
)
from distpair.quad import integrate_line
from distpair.testfn import tf_tail_bound, tf_tail_radius
from oracles import CALIBRATION, quad_fourier

SQRT_PI = math.sqrt(math.pi)
ANCHOR_TOL = 1e-12


@pytest.fixture(scope="module")
def corpus():
    return corpus_generate(42, 50)


def describe(rep):
    return f"max residual {rep.max_residual:.3e} (tol {rep.tolerance:g}), {rep.wall_ms / 1e3:.2f} s"


def anchor(dist, name):
    return pair(dist, CANONICAL[name], ANCHOR_TOL).value


def test_ac1_prop1_tri_route(corpus, criterion):
    rep = check_prop1(corpus, 1e-8)
    ok = rep.passed and rep.wall_ms < 30e3
    assert criterion("AC1", ok, "p.v. 1/x definition/odd/centered routes: " + describe(rep))


def test_ac2_taylor_vs_recursion(corpus, criterion):
    rep = check_pvn(corpus, 1e-6)
    ok = rep.passed and rep.wall_ms < 60e3
    assert criterion("AC2", ok, "p.v. 1/x^n Taylor vs recursion, n=1..5: " + describe(rep))


def test_ac3_recursion_step(corpus, criterion):
    rep = check_pv_step(corpus, 1e-8)
    assert criterion("AC3", rep.passed, "pv(n+1, phi) = pv(n, phi')/n, n=1..4: " + describe(rep))


def test_ac4_fourier_sgn(corpus, criterion):
    rep = check_fourier_sgn(corpus, 1e-7)
    a = abs(anchor(Fourier(SGN), "xgauss") - (-2j * SQRT_PI))
    ok = rep.passed and a <= 1e-8
    assert criterion("AC4", ok, f"F(sgn) = -2i p.v. 1/x: {describe(rep)}; anchor err {a:.1e}")


def test_ac5_fourier_heaviside(corpus, criterion):
    rep = check_fourier_heaviside(corpus, 1e-7)
    a0 = abs(anchor(Fourier(H), "gauss") - math.pi)
    a1 = abs(anchor(Fourier(H), "xgauss") - (-1j * SQRT_PI))
    ok = rep.passed and a0 <= 1e-8 and a1 <= 1e-8
    assert criterion("AC5", ok, f"F(H) = -i p.v. 1/x + pi delta: {describe(rep)}; "
                                f"anchor errs {a0:.1e}, {a1:.1e}")


def test_ac6_fourier_one(corpus, criterion):
    rep = check_fourier_one(corpus, 1e-8)
    a = abs(anchor(Fourier(ONE), "gauss") - 2 * math.pi)
    ok = rep.passed and a <= 1e-9
    assert criterion("AC6", ok, f"F(1) = 2 pi delta: {describe(rep)}; anchor err {a:.1e}")


def test_ac7_csl_representations(corpus, criterion):
    remark = check_remark_csl(corpus, 1e-6)
    delta = check_delta_ramp(corpus, 1e-9)
    ok = remark.passed and delta.passed
    assert criterion("AC7", ok, f"F(H) as CslRep: {describe(remark)}; "
                                f"delta = ramp'': {describe(delta)}")


def test_ac8_quadrature_calibration(criterion):
    gauss = CANONICAL["gauss"]
    r = tf_tail_radius(gauss, 5e-11)
    g = integrate_line(lambda x: tf_eval(gauss, x), r, tf_tail_bound(gauss, r), 1e-10)
    g_err = abs(g.value - SQRT_PI)
    worst = 0.0
    for phi, exact in CALIBRATION:
        r = tf_tail_radius(phi, 5e-11)
        res = integrate_line(lambda x, phi=phi: tf_eval(phi, x), r, tf_tail_bound(phi, r), 1e-10)
        worst = max(worst, abs(res.value - exact) / max(3 * res.error_estimate, 1e-300))
    ok = g_err <= 1e-10 and worst <= 1.0 and len(CALIBRATION) == 20
    assert criterion("AC8", ok, f"|int e^-x^2 - sqrt(pi)| = {g_err:.1e}; "
                                f"worst true/(3 x estimate) = {worst:.2f} over 20 integrals")


def test_ac9_class_closure(corpus, criterion):
    grid = np.linspace(-5, 5, 11)
    worst_fourier = worst_double = 0.0
    for phi in corpus:
        f = tf_fourier(phi)
        for x in grid:
            worst_fourier = max(worst_fourier, abs(complex(tf_eval(f, x)) - quad_fourier(phi, x)))
        ff = tf_eval(tf_fourier(f), grid)
        ref = 2 * math.pi * tf_eval(phi, -grid)
        worst_double = max(worst_double, np.max(np.abs(ff - ref)) / np.max(np.abs(ref)))
    ok = worst_fourier <= 1e-8 and worst_double <= 1e-9
    assert criterion("AC9", ok, f"closed-form transform vs quadrature {worst_fourier:.1e}; "
                                f"double transform relative {worst_double:.1e}")


def test_ac10_riemann_lebesgue(criterion):
    vals = riemann_lebesgue_values(CANONICAL["xgauss"])
    expected = 2 * SQRT_PI * math.exp(-25)
    ok = (vals[-1] <= 1e-10 and math.isclose(vals[-1], expected, rel_tol=1e-9)
          and vals[0] > vals[1] > vals[2])
    assert criterion("AC10", ok, "|F psi(N)| at N=2,5,10: " + ", ".join(f"{v:.3e}" for v in vals))


def test_ac11_determinism(criterion):
    runs = [
        subprocess.run([sys.executable, "-m", "distpair", "verify", "--suite", "all", "--seed", "42"],
                       capture_output=True, text=True)
        for _ in range(2)
    ]

    def without_wall(text):
        data = json.loads(text)
        for check in data["checks"]:
            check.pop("wall_ms")
        return json.dumps(data, sort_keys=True)

    codes = [r.returncode for r in runs]
    same = without_wall(runs[0].stdout) == without_wall(runs[1].stdout)
    # byte-level comparison: only the wall_ms lines may differ
    lines = [[ln for ln in r.stdout.splitlines() if '"wall_ms"' not in ln] for r in runs]
    ok = codes == [0, 0] and same and lines[0] == lines[1]
    assert criterion("AC11", ok, f"verify --suite all --seed 42 twice: exit codes {codes}, "
                                 f"identical apart from wall_ms: {same and lines[0] == lines[1]}")
