"""Deterministic adaptive Gauss-Kronrod (7/15) quadrature.

Integrands are vectorized: the evaluator receives a float ndarray of nodes
and returns a complex ndarray of the same shape.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import BudgetExhausted, InvalidTolerance, NoConvergence

WORK_BUDGET = 2_000_000
SINGULARITY_WINDOW = 1e-14
SYMMETRIC_RADII = (8.0, 16.0, 32.0, 64.0, 128.0)

_EPS = np.finfo(float).eps

# Kronrod abscissae (positive half, descending) and weights; odd indices are
# the embedded Gauss nodes.
_XK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
])
_WK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

NODES = np.concatenate([-_XK[:-1], _XK[::-1]])
KRONROD_WEIGHTS = np.concatenate([_WK[:-1], _WK[::-1]])
GAUSS_WEIGHTS = np.zeros(15)
GAUSS_WEIGHTS[[1, 3, 5]] = _WG[:3]
GAUSS_WEIGHTS[7] = _WG[3]
GAUSS_WEIGHTS[[9, 11, 13]] = _WG[2::-1]


@dataclass(frozen=True)
class Integrand:
    evaluator: Callable[[np.ndarray], np.ndarray]
    singularities: tuple[tuple[float, complex], ...] = ()

    def __call__(self, x: np.ndarray) -> np.ndarray:
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            y = np.asarray(self.evaluator(x), dtype=complex)
        if y.shape != np.shape(x):
            y = np.broadcast_to(y, np.shape(x)).copy()
        for loc, val in self.singularities:
            mask = np.abs(x - loc) < SINGULARITY_WINDOW
            if mask.any():
                y = np.where(mask, complex(val), y)
        return y


def as_integrand(f) -> Integrand:
    return f if isinstance(f, Integrand) else Integrand(f)


@dataclass(frozen=True)
class PairingResult:
    value: complex
    error_estimate: float
    evaluations: int = 0

    def __add__(self, other: PairingResult) -> PairingResult:
        return PairingResult(
            self.value + other.value,
            self.error_estimate + other.error_estimate,
            self.evaluations + other.evaluations,
        )

    def scaled(self, c: complex) -> PairingResult:
        return PairingResult(c * self.value, abs(c) * self.error_estimate, self.evaluations)


@dataclass(order=True)
class _Panel:
    sort_key: tuple[float, int]
    lo: float = field(compare=False)
    hi: float = field(compare=False)
    value: complex = field(compare=False)
    error: float = field(compare=False)
    # |K15 - G7| did not exceed the roundoff floor
    roundoff_limited: bool = field(compare=False)


def _panel(f: Integrand, lo: float, hi: float):
    c = 0.5 * (lo + hi)
    h = 0.5 * (hi - lo)
    y = f(c + h * NODES)
    k = h * np.dot(KRONROD_WEIGHTS, y)
    g = h * np.dot(GAUSS_WEIGHTS, y)
    diff = abs(k - g)
    floor = 50 * _EPS * abs(h) * float(np.dot(KRONROD_WEIGHTS, np.abs(y)))
    if not np.isfinite(k):
        raise BudgetExhausted(f"integrand not finite on [{lo}, {hi}]")
    return complex(k), max(diff, floor), diff <= floor


def _check_tol(tol: float):
    if not tol > 0 or not math.isfinite(tol):
        raise InvalidTolerance(f"tolerance must be positive and finite, got {tol}")


def integrate_interval(f, lo: float, hi: float, tol: float,
                       breakpoints: Sequence[float] = ()) -> PairingResult:
    """Adaptive bisection until the summed panel error is at most ``tol``.

    The worst panel is split first; ties go to the panel created earliest,
    so the subdivision sequence is a pure function of the inputs.
    """
    _check_tol(tol)
    if lo > hi:
        raise ValueError("integrate_interval needs lo <= hi")
    if lo == hi:
        return PairingResult(0j, 0.0, 0)
    f = as_integrand(f)
    cuts = [lo] + sorted(b for b in set(breakpoints) if lo < b < hi) + [hi]
    heap: list[_Panel] = []
    counter = 0
    evals = 0
    total_err = 0.0
    for a, b in zip(cuts[:-1], cuts[1:]):
        v, e, r = _panel(f, a, b)
        evals += 15
        heapq.heappush(heap, _Panel((-e, counter), a, b, v, e, r))
        counter += 1
        total_err += e
    while total_err > tol:
        worst = heap[0]
        if worst.roundoff_limited or worst.hi - worst.lo <= 64 * _EPS * max(abs(worst.lo), abs(worst.hi), 1e-300):
            break
        if evals + 30 > WORK_BUDGET:
            raise BudgetExhausted(
                f"quadrature needs more than {WORK_BUDGET} evaluations "
                f"(error {total_err:.3g} > tol {tol:.3g})"
            )
        heapq.heappop(heap)
        mid = 0.5 * (worst.lo + worst.hi)
        total_err -= worst.error
        for a, b in ((worst.lo, mid), (mid, worst.hi)):
            v, e, r = _panel(f, a, b)
            heapq.heappush(heap, _Panel((-e, counter), a, b, v, e, r))
            counter += 1
            total_err += e
        evals += 30
    panels = sorted(heap, key=lambda p: p.lo)
    value = complex(
        math.fsum(p.value.real for p in panels), math.fsum(p.value.imag for p in panels)
    )
    err = math.fsum(p.error for p in panels)
    return PairingResult(value, err, evals)


def integrate_line(f, radius: float, tail_bound: float, tol: float,
                   breakpoints: Sequence[float] = ()) -> PairingResult:
    """Whole-line integral for a caller-certified tail beyond ``radius``."""
    _check_tol(tol)
    if not radius > 0:
        raise ValueError("radius must be positive")
    inner_tol = max(tol - tail_bound, tol / 2)
    res = integrate_interval(f, -radius, radius, inner_tol, breakpoints)
    return PairingResult(res.value, res.error_estimate + tail_bound, res.evaluations)


# symmetric truncation of inverse-power tails leaves only odd powers of 1/M
_RICHARDSON_EXPONENTS = (1, 3, 5)


def integrate_symmetric_limit(f, tol: float,
                              breakpoints: Sequence[float] = ()) -> PairingResult:
    """``lim_{M -> inf} int_{-M}^{M} f`` sampled at M = 8, 16, ..., 128.

    The truncated integrals are built by adding the annuli
    ``[-2M, -M] + [M, 2M]``, then extrapolated with a Richardson table in odd
    powers of ``1/M``. The column whose last two entries agree best supplies
    the value; their gap (plus the quadrature error) is the error estimate.
    """
    _check_tol(tol)
    f = as_integrand(f)
    radii = SYMMETRIC_RADII
    first = integrate_interval(f, -radii[0], radii[0], tol / 4, breakpoints)
    sums = [first.value]
    quad_err = first.error_estimate
    evals = first.evaluations
    piece_tol = tol / (8 * (len(radii) - 1))
    for m_lo, m_hi in zip(radii[:-1], radii[1:]):
        right = integrate_interval(f, m_lo, m_hi, piece_tol, breakpoints)
        left = integrate_interval(f, -m_hi, -m_lo, piece_tol, breakpoints)
        quad_err += right.error_estimate + left.error_estimate
        evals += right.evaluations + left.evaluations
        sums.append(sums[-1] + right.value + left.value)

    table = [[s] for s in sums]
    for k, p in enumerate(_RICHARDSON_EXPONENTS, start=1):
        factor = 2.0**p - 1.0
        for j in range(k, len(sums)):
            prev, cur = table[j - 1][k - 1], table[j][k - 1]
            table[j].append(cur + (cur - prev) / factor)

    best_value, best_gap = None, math.inf
    last = len(sums) - 1
    for k in range(len(table[last])):
        if k < len(table[last - 1]):
            gap = abs(table[last][k] - table[last - 1][k])
            if gap < best_gap:
                best_value, best_gap = table[last][k], gap

    raw = [abs(b - a) for a, b in zip(sums[:-1], sums[1:])]
    decreasing = raw[-1] < raw[-2]
    if best_gap > tol and not decreasing:
        raise NoConvergence(
            f"symmetric truncation did not settle by M = {radii[-1]:g} "
            f"(last differences {raw[-2]:.3g}, {raw[-1]:.3g})"
        )
    return PairingResult(complex(best_value), best_gap + quad_err, evals)
