"""Principal values ``p.v. 1/x^n`` and their evaluation routes.

For even ``n >= 2`` the same object is often called the Hadamard finite part
of ``1/x^n``. Routes:

``def``        ``(1/(n-1)!) int h phi^(n+1)`` with ``h(x) = x ln|x| - x``
``odd``        ``int_0^inf (phi(x) - phi(-x))/x``            (n = 1)
``centered``   ``lim_M int_{-M}^{M} (phi(x) - phi(0))/x``      (n = 1)
``taylor``     ``lim_M int_{-M}^{M} (phi(x) - T_{n-1}phi(x))/x^n``
``recursion``  ``(1/(n-1)!) <p.v. 1/x, phi^(n-1)>`` via ``odd``

``def``, ``odd`` and ``recursion`` are absolutely convergent; the two
symmetric-limit routes serve as cross-checks.
"""
from __future__ import annotations

import enum
import math

import numpy as np

from .algebra import DEGREE_CAP, poly, poly_eval
from .dist import Distribution, Pv, hfun, pair_csl
from .errors import InvalidOrder, InvalidRoute, InvalidTolerance
from .quad import (
    Integrand,
    PairingResult,
    integrate_interval,
    integrate_symmetric_limit,
)
from .testfn import (
    TestFunction,
    tf_derivative,
    tf_eval,
    tf_tail_bound,
    tf_tail_radius,
    tf_taylor,
    tf_taylor_coeffs,
)

MAX_ORDER = 5
# series terms kept beyond phi^(n)(0)/n! in the near-zero form
SERIES_TERMS = 16
SINGULARITY_LIMIT_WINDOW = 1e-14


class PvRoute(str, enum.Enum):
    DEFINITION = "def"
    ODD_REFLECTION = "odd"
    CENTERED = "centered"
    TAYLOR = "taylor"
    RECURSION = "recursion"


def default_route(n: int) -> PvRoute:
    return PvRoute.ODD_REFLECTION if n == 1 else PvRoute.RECURSION


def h_eval(x: float) -> float:
    if x == 0:
        return 0.0
    return x * math.log(abs(x)) - x


def series_radius(n: int) -> float:
    """Below this |x| the subtracted quotient is summed from its Taylor series.

    Direct subtraction loses about ``eps / |x|^n`` relative accuracy, so the
    switch sits where that loss reaches 1e-12 relative to the value scale.
    """
    return 1e-4 ** (1.0 / n)


def _series_terms(phi: TestFunction, n: int) -> int:
    return max(0, min(SERIES_TERMS, DEGREE_CAP - phi.poly.degree - n))


def taylor_quotient(phi: TestFunction, n: int) -> Integrand:
    """Integrand ``(phi(x) - T_{n-1}phi(x)) / x^n``, continuous through 0."""
    taylor = tf_taylor(phi, n - 1)
    tail = poly(tf_taylor_coeffs(phi, n + _series_terms(phi, n), first=n))
    r = series_radius(n)

    def ev(x):
        x = np.asarray(x, dtype=float)
        direct = (tf_eval(phi, x) - poly_eval(taylor, x)) / x**n
        return np.where(np.abs(x) < r, poly_eval(tail, x), direct)

    limit = tail.coeffs[0] if tail.coeffs else 0j
    return Integrand(ev, ((0.0, limit),))


def odd_quotient(phi: TestFunction) -> Integrand:
    """Integrand ``(phi(x) - phi(-x)) / x`` with limit ``2 phi'(0)`` at 0."""
    k = 1 + _series_terms(phi, 1)
    c = tf_taylor_coeffs(phi, k)
    # (phi(x) - phi(-x))/x = 2 * sum over odd j of c_j x^(j-1)
    series = poly([2 * c[j + 1] if (j + 1) % 2 else 0j for j in range(k)])
    r = series_radius(1)

    def ev(x):
        x = np.asarray(x, dtype=float)
        direct = (tf_eval(phi, x) - tf_eval(phi, -x)) / x
        return np.where(np.abs(x) < r, poly_eval(series, x), direct)

    return Integrand(ev, ((0.0, 2 * c[1] if len(c) > 1 else 0j),))


def _odd_reflection(phi: TestFunction, tol: float) -> PairingResult:
    radius = max(1.0, tf_tail_radius(phi, tol / 2))
    # for x >= radius >= 1: |phi(x) - phi(-x)|/x <= |phi(x)| + |phi(-x)|
    tail = tf_tail_bound(phi, radius)
    res = integrate_interval(odd_quotient(phi), 0.0, radius, max(tol - tail, tol / 2))
    return PairingResult(res.value, res.error_estimate + tail, res.evaluations)


def _definition(n: int, phi: TestFunction, tol: float) -> PairingResult:
    scale = 1.0 / math.factorial(n - 1)
    # (-1)^(n+1) from pair_csl cancels the (-1)^(n-1) of the definition
    res = pair_csl(hfun, n + 1, phi, tol / scale)
    sign = -1 if (n + 1) % 2 else 1
    return res.scaled(sign * scale)


def pv_pair(n: int, phi: TestFunction, route=None, tol: float = 1e-10) -> PairingResult:
    """``<p.v. 1/x^n, phi>`` along the chosen route."""
    if not 1 <= n <= MAX_ORDER:
        raise InvalidOrder(f"p.v. order must be in 1..{MAX_ORDER}, got {n}")
    if not tol > 0:
        raise InvalidTolerance(f"tolerance must be positive, got {tol}")
    try:
        route = PvRoute(route) if route is not None else default_route(n)
    except ValueError as exc:
        raise InvalidRoute(f"unknown route {route!r}") from exc
    if route in (PvRoute.ODD_REFLECTION, PvRoute.CENTERED) and n != 1:
        raise InvalidRoute(f"route {route.value!r} is only defined for n = 1")

    if route is PvRoute.DEFINITION:
        return _definition(n, phi, tol)
    if route is PvRoute.ODD_REFLECTION:
        return _odd_reflection(phi, tol)
    if route is PvRoute.RECURSION:
        scale = 1.0 / math.factorial(n - 1)
        d = tf_derivative(phi, n - 1) if n > 1 else phi
        return _odd_reflection(d, tol / scale).scaled(scale)
    # CENTERED is TAYLOR with n = 1
    r = series_radius(n)
    return integrate_symmetric_limit(taylor_quotient(phi, n), tol, breakpoints=(-r, r))


def pv1_log_form(phi: TestFunction, tol: float = 1e-10) -> PairingResult:
    """``-int_0^inf ln(x) [phi'(x) + phi'(-x)] dx``, one integration by parts
    away from the defining form of ``p.v. 1/x``."""
    d = tf_derivative(phi, 1)
    # |ln x| <= 1 + |x| away from the origin; near it the panel split handles ln
    radius = max(1.0, tf_tail_radius(d, tol / 2, (1.0, 1)))
    tail = tf_tail_bound(d, radius, (1.0, 1))

    def ev(x):
        x = np.asarray(x, dtype=float)
        with np.errstate(divide="ignore"):
            return -np.log(x) * (tf_eval(d, x) + tf_eval(d, -x))

    res = integrate_interval(Integrand(ev, ((0.0, 0j),)), 0.0, radius, max(tol - tail, tol / 2))
    return PairingResult(res.value, res.error_estimate + tail, res.evaluations)


def pv_distribution(n: int) -> Distribution:
    if not 1 <= n <= MAX_ORDER:
        raise InvalidOrder(f"p.v. order must be in 1..{MAX_ORDER}, got {n}")
    return Pv(n)
