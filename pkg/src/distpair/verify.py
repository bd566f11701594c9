"""Pass/fail checks of the principal-value and Fourier identities over a corpus.

Each check computes a per-member residual ``|LHS - RHS|`` and an allowance of
``tol`` plus every quadrature error estimate that went into that member.
A member that raises is recorded as a failure with an infinite residual; a
member outside a check's domain is recorded as skipped (residual ``None``).
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .algebra import poly_odd_part_over_x
from .dist import (
    ONE,
    SGN,
    CslRep,
    H,
    Pv,
    csl_combo,
    fourier,
    hfun,
    pair,
    ramp,
)
from .errors import DistPairError, InvalidInput
from .pv import PvRoute, pv_pair
from .quad import PairingResult
from .testfn import Corpus, TestFunction, tf_derivative, tf_eval, tf_fourier

DEFAULT_QUAD_TOL = 1e-10
RL_THRESHOLD = 1e-10
RL_FREQUENCIES = (2.0, 5.0, 10.0)


@dataclass
class CheckReport:
    name: str
    seed: Optional[int]
    residuals: list[Optional[float]]
    allowances: list[Optional[float]]
    tolerance: float
    wall_ms: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def max_residual(self) -> Optional[float]:
        vals = [r for r in self.residuals if r is not None]
        return max(vals) if vals else None

    @property
    def passed(self) -> bool:
        return all(
            r is None or (a is not None and r <= a)
            for r, a in zip(self.residuals, self.allowances)
        )

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        mr = self.max_residual
        mr_txt = "n/a" if mr is None else f"{mr:.3e}"
        return f"{status} {self.name}: max residual {mr_txt} (tol {self.tolerance:.1e})"


def _quad_tol(phi: TestFunction, quad_tol: float) -> float:
    # relative to the size of phi so residuals scale linearly with phi
    return quad_tol * max(phi.scale, 1e-300)


def _allowance(tol: float, *results: PairingResult) -> float:
    if tol <= 0:
        # zero tolerance asks for exact agreement
        return 0.0
    return tol + math.fsum(r.error_estimate for r in results)


def _run(name: str, corpus: Corpus, tol: float,
         member: Callable[[TestFunction], tuple[float, float]]) -> CheckReport:
    if len(corpus) == 0:
        raise InvalidInput(f"{name}: corpus is empty")
    start = time.perf_counter()
    residuals, allowances, notes = [], [], []
    for i, phi in enumerate(corpus):
        try:
            r, a = member(phi)
        except DistPairError as exc:
            r, a = math.inf, None
            notes.append(f"member {i}: {type(exc).__name__}: {exc}")
        residuals.append(r)
        allowances.append(a)
    wall = (time.perf_counter() - start) * 1e3
    return CheckReport(name, corpus.seed, residuals, allowances, tol, wall, notes)


def check_prop1(corpus: Corpus, tol: float, quad_tol: float = DEFAULT_QUAD_TOL) -> CheckReport:
    """Three routes for ``p.v. 1/x`` agree: definition, odd reflection, centered."""

    def member(phi):
        qt = _quad_tol(phi, quad_tol)
        d = pv_pair(1, phi, PvRoute.DEFINITION, qt)
        o = pv_pair(1, phi, PvRoute.ODD_REFLECTION, qt)
        c = pv_pair(1, phi, PvRoute.CENTERED, qt)
        r = max(abs(d.value - o.value), abs(o.value - c.value), abs(d.value - c.value))
        return r, _allowance(tol, d, o, c)

    return _run("prop1", corpus, tol, member)


def check_pvn(corpus: Corpus, tol: float, n_max: int = 5,
              quad_tol: float = DEFAULT_QUAD_TOL) -> CheckReport:
    """Taylor-subtraction and derivative-recursion routes agree for n <= n_max."""

    def member(phi):
        qt = _quad_tol(phi, quad_tol)
        worst, used = 0.0, []
        for n in range(1, n_max + 1):
            t = pv_pair(n, phi, PvRoute.TAYLOR, qt)
            rec = pv_pair(n, phi, PvRoute.RECURSION, qt)
            worst = max(worst, abs(t.value - rec.value))
            used += [t, rec]
        return worst, _allowance(tol, *used)

    return _run("pvn", corpus, tol, member)


def check_pv_step(corpus: Corpus, tol: float, n_max: int = 4,
                  quad_tol: float = DEFAULT_QUAD_TOL) -> CheckReport:
    """``<p.v. 1/x^(n+1), phi> = (1/n) <p.v. 1/x^n, phi'>`` along the Taylor route.

    Both sides use subtracted-Taylor integrands, which differ by one
    integration by parts; the default recursion route would make the two
    sides the same computation.
    """

    def member(phi):
        qt = _quad_tol(phi, quad_tol)
        d = tf_derivative(phi, 1)
        worst, used = 0.0, []
        for n in range(1, n_max + 1):
            lhs = pv_pair(n + 1, phi, PvRoute.TAYLOR, qt)
            rhs = pv_pair(n, d, PvRoute.TAYLOR, qt * n).scaled(1.0 / n)
            worst = max(worst, abs(lhs.value - rhs.value))
            used += [lhs, rhs]
        return worst, _allowance(tol, *used)

    return _run("pv-step", corpus, tol, member)


def check_fourier_sgn(corpus: Corpus, tol: float, quad_tol: float = DEFAULT_QUAD_TOL) -> CheckReport:
    """``F(sgn) = -2i p.v. 1/x``."""
    fs = fourier(SGN)

    def member(phi):
        qt = _quad_tol(phi, quad_tol)
        lhs = pair(fs, phi, qt)
        pv = pair(Pv(1), phi, qt)
        return abs(lhs.value + 2j * pv.value), _allowance(tol, lhs, pv.scaled(2))

    return _run("fsgn", corpus, tol, member)


def check_fourier_heaviside(corpus: Corpus, tol: float,
                            quad_tol: float = DEFAULT_QUAD_TOL) -> CheckReport:
    """``F(H) = -i p.v. 1/x + pi delta``."""
    fh = fourier(H)

    def member(phi):
        qt = _quad_tol(phi, quad_tol)
        lhs = pair(fh, phi, qt)
        pv = pair(Pv(1), phi, qt)
        rhs = -1j * pv.value + math.pi * complex(tf_eval(phi, 0.0))
        return abs(lhs.value - rhs), _allowance(tol, lhs, pv)

    return _run("fheaviside", corpus, tol, member)


def check_fourier_one(corpus: Corpus, tol: float, quad_tol: float = DEFAULT_QUAD_TOL) -> CheckReport:
    """``F(1) = 2 pi delta``."""
    f1 = fourier(ONE)

    def member(phi):
        lhs = pair(f1, phi, _quad_tol(phi, quad_tol))
        return abs(lhs.value - 2 * math.pi * complex(tf_eval(phi, 0.0))), _allowance(tol, lhs)

    return _run("fone", corpus, tol, member)


# F(H) written in CSL form with two derivatives
REMARK_FH = CslRep(csl_combo([(-1j, hfun), (math.pi, ramp)]), 2)


def check_remark_csl(corpus: Corpus, tol: float, quad_tol: float = DEFAULT_QUAD_TOL) -> CheckReport:
    """``F(H)`` equals the second derivative of ``-i h + pi max(x, 0)``."""
    fh = fourier(H)

    def member(phi):
        qt = _quad_tol(phi, quad_tol)
        lhs = pair(REMARK_FH, phi, qt)
        rhs = pair(fh, phi, qt)
        return abs(lhs.value - rhs.value), _allowance(tol, lhs, rhs)

    return _run("remark", corpus, tol, member)


def check_delta_ramp(corpus: Corpus, tol: float, quad_tol: float = DEFAULT_QUAD_TOL) -> CheckReport:
    """``delta`` is the second derivative of the ramp."""
    rep = CslRep(ramp, 2)

    def member(phi):
        lhs = pair(rep, phi, _quad_tol(phi, quad_tol))
        return abs(lhs.value - complex(tf_eval(phi, 0.0))), _allowance(tol, lhs)

    return _run("delta-ramp", corpus, tol, member)


def odd_quotient_member(phi: TestFunction) -> TestFunction:
    """``psi(y) = (phi(y) - phi(-y)) / y`` as class data.

    Exact when the envelope is symmetric (``mu = 0`` and ``omega = 0``);
    otherwise ``psi`` is not a single class member.
    """
    if phi.poly.is_zero():
        return phi
    if phi.mu != 0 or phi.omega != 0:
        raise InvalidInput("odd quotient leaves the class unless mu = omega = 0")
    return TestFunction(poly_odd_part_over_x(phi.poly), phi.a, 0.0, 0.0)


def riemann_lebesgue_values(phi: TestFunction,
                            frequencies: Sequence[float] = RL_FREQUENCIES) -> list[float]:
    psi_hat = tf_fourier(odd_quotient_member(phi))
    return [abs(complex(tf_eval(psi_hat, n))) for n in frequencies]


def _rl_ok(values: Sequence[float]) -> bool:
    shrinking = all(b < a or b == 0 for a, b in zip(values[:-1], values[1:]))
    return shrinking and values[-1] <= RL_THRESHOLD


def check_riemann_lebesgue(phi: TestFunction,
                           frequencies: Sequence[float] = RL_FREQUENCIES) -> CheckReport:
    """``|F psi(N)|`` decreases along ``frequencies`` and ends below 1e-10."""
    start = time.perf_counter()
    vals = riemann_lebesgue_values(phi, frequencies)
    wall = (time.perf_counter() - start) * 1e3
    res = vals[-1]
    allow = RL_THRESHOLD if _rl_ok(vals) else -math.inf
    notes = [f"|F psi(N)| at N={list(frequencies)}: {vals}"]
    return CheckReport("rl", None, [res], [allow], RL_THRESHOLD, wall, notes)


def check_riemann_lebesgue_corpus(corpus: Corpus,
                                  frequencies: Sequence[float] = RL_FREQUENCIES) -> CheckReport:
    start = time.perf_counter()
    residuals, allowances, skipped = [], [], []
    for i, phi in enumerate(corpus):
        try:
            vals = riemann_lebesgue_values(phi, frequencies)
        except InvalidInput:
            residuals.append(None)
            allowances.append(None)
            skipped.append(i)
            continue
        residuals.append(vals[-1])
        allowances.append(RL_THRESHOLD if _rl_ok(vals) else -math.inf)
    wall = (time.perf_counter() - start) * 1e3
    notes = []
    if skipped:
        notes.append(f"{len(skipped)} members skipped (psi not a class member): {skipped}")
    return CheckReport("rl", corpus.seed, residuals, allowances, RL_THRESHOLD, wall, notes)


SUITES = {
    "prop1": check_prop1,
    "pvn": check_pvn,
    "fsgn": check_fourier_sgn,
    "fheaviside": check_fourier_heaviside,
    "fone": check_fourier_one,
    "remark": check_remark_csl,
    "rl": lambda corpus, tol: check_riemann_lebesgue_corpus(corpus),
    "delta-ramp": check_delta_ramp,
}


def run_suites(names: Sequence[str], corpus: Corpus, tol: float) -> list[CheckReport]:
    return [SUITES[name](corpus, tol) for name in names]
