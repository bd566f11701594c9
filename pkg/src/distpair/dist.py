"""Tempered distributions as immutable expression trees, and the pairing engine.

Every variant is represented in the form ``(-1)^n int f phi^(n)`` with a
continuous slowly growing ``f``, or reduces to one by recursion on the test
function (derivative, Fourier transform) or by linearity.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import DepthExceeded, InvalidOrder
from .quad import PairingResult, integrate_line
from .testfn import TestFunction, tf_derivative, tf_eval, tf_fourier, tf_tail_bound, tf_tail_radius

MAX_DEPTH = 16
AUDIT_GRID = np.linspace(-100.0, 100.0, 1001)


@dataclass(frozen=True, eq=False)
class CslFunction:
    """Continuous slowly growing function with ``|f(x)| <= C (1 + |x|^n0)``.

    ``breakpoints`` lists points where ``f`` has a jump or kink; quadrature
    panels are split there.
    """

    evaluator: Callable[[np.ndarray], np.ndarray]
    growth: int
    bound_const: float = 1.0
    breakpoints: tuple[float, ...] = ()
    name: str = "f"

    def __call__(self, x):
        return self.evaluator(x)

    def __add__(self, other: CslFunction) -> CslFunction:
        return csl_combo([(1, self), (1, other)])

    def __rmul__(self, c: complex) -> CslFunction:
        return csl_combo([(c, self)])

    def __repr__(self):
        return f"CslFunction({self.name})"


def csl_combo(terms: Sequence[tuple[complex, CslFunction]]) -> CslFunction:
    terms = [(complex(c), f) for c, f in terms]

    def ev(x):
        return sum(c * np.asarray(f(x), dtype=complex) for c, f in terms)

    return CslFunction(
        ev,
        growth=max(f.growth for _, f in terms),
        bound_const=sum(abs(c) * f.bound_const for c, f in terms),
        breakpoints=tuple(sorted({b for _, f in terms for b in f.breakpoints})),
        name=" + ".join(f"({c:g})*{f.name}" for c, f in terms),
    )


def _heaviside(x):
    return np.where(np.asarray(x) >= 0, 1.0, 0.0)


def _sgn(x):
    return np.where(np.asarray(x) >= 0, 1.0, -1.0)


def _one(x):
    return np.ones_like(np.asarray(x, dtype=float))


def _ramp(x):
    return np.maximum(np.asarray(x, dtype=float), 0.0)


def hfun_eval(x):
    """``x ln|x| - x`` with value 0 at 0."""
    x = np.asarray(x, dtype=float)
    ax = np.where(x == 0, 1.0, np.abs(x))
    return np.where(x == 0, 0.0, x * np.log(ax) - x)


heaviside = CslFunction(_heaviside, growth=1, breakpoints=(0.0,), name="H")
sgn = CslFunction(_sgn, growth=1, breakpoints=(0.0,), name="sgn")
one = CslFunction(_one, growth=1, name="one")
ramp = CslFunction(_ramp, growth=2, breakpoints=(0.0,), name="ramp")
# |x ln|x| - x| <= 1 + x^2 everywhere
hfun = CslFunction(hfun_eval, growth=2, breakpoints=(0.0,), name="h")


def csl_from_testfn(g: TestFunction) -> CslFunction:
    """View a class member as a bounded CSL function."""
    t = np.linspace(-30, 30, 60001) / math.sqrt(g.a) + g.mu
    sup = float(np.max(np.abs(tf_eval(g, t))))
    return CslFunction(lambda x: tf_eval(g, x), growth=1, bound_const=1.01 * sup + 1e-300, name="g")


def csl_audit(f: CslFunction) -> bool:
    """Check ``|f(x)| <= C (1 + |x|^n0)`` on a 1001-point grid over [-100, 100]."""
    with np.errstate(over="ignore", invalid="ignore"):
        vals = np.abs(np.asarray(f(AUDIT_GRID), dtype=complex))
        bound = f.bound_const * (1 + np.abs(AUDIT_GRID) ** f.growth)
    return bool(np.all(np.isfinite(vals)) and np.all(vals <= bound))


# -- distribution variants -----------------------------------------------------


class Distribution:
    """Base class; see the concrete variants below."""

    @property
    def depth(self) -> int:
        return 1

    def __add__(self, other):
        return combo([(1, self), (1, other)])

    def __sub__(self, other):
        return combo([(1, self), (-1, other)])

    def __rmul__(self, c):
        return combo([(c, self)])

    def __neg__(self):
        return combo([(-1, self)])


def _check_depth(d: int):
    if d > MAX_DEPTH:
        raise DepthExceeded(f"distribution nesting depth {d} exceeds {MAX_DEPTH}")


@dataclass(frozen=True)
class Regular(Distribution):
    f: CslFunction


@dataclass(frozen=True)
class Delta(Distribution):
    pass


@dataclass(frozen=True)
class Pv(Distribution):
    n: int = 1
    route: Optional[str] = None

    def __post_init__(self):
        if self.n < 1:
            raise InvalidOrder(f"p.v. order must be >= 1, got {self.n}")


@dataclass(frozen=True)
class CslRep(Distribution):
    f: CslFunction
    n: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise InvalidOrder("derivative order must be nonnegative")


@dataclass(frozen=True)
class Derivative(Distribution):
    inner: Distribution

    def __post_init__(self):
        _check_depth(self.depth)

    @property
    def depth(self):
        return 1 + self.inner.depth


@dataclass(frozen=True)
class Fourier(Distribution):
    inner: Distribution

    def __post_init__(self):
        _check_depth(self.depth)

    @property
    def depth(self):
        return 1 + self.inner.depth


@dataclass(frozen=True)
class Combo(Distribution):
    terms: tuple[tuple[complex, Distribution], ...] = field(default_factory=tuple)

    def __post_init__(self):
        if not self.terms:
            raise ValueError("Combo needs at least one term")
        object.__setattr__(self, "terms", tuple((complex(c), t) for c, t in self.terms))
        _check_depth(self.depth)

    @property
    def depth(self):
        return 1 + max(t.depth for _, t in self.terms)


def derivative(T: Distribution, k: int = 1) -> Distribution:
    for _ in range(k):
        T = Derivative(T)
    return T


def fourier(T: Distribution) -> Distribution:
    return Fourier(T)


def combo(terms: Sequence[tuple[complex, Distribution]]) -> Distribution:
    return Combo(tuple(terms))


def with_route(T: Distribution, route: str) -> Distribution:
    """Copy of ``T`` with every p.v. node forced onto ``route``."""
    if isinstance(T, Pv):
        return Pv(T.n, route)
    if isinstance(T, Derivative):
        return Derivative(with_route(T.inner, route))
    if isinstance(T, Fourier):
        return Fourier(with_route(T.inner, route))
    if isinstance(T, Combo):
        return Combo(tuple((c, with_route(t, route)) for c, t in T.terms))
    return T


# -- pairing -------------------------------------------------------------------


def pair_csl(f: CslFunction, n: int, phi: TestFunction, tol: float) -> PairingResult:
    """``(-1)^n int f phi^(n)`` over the line."""
    d = tf_derivative(phi, n) if n else phi
    if d.poly.is_zero():
        return PairingResult(0j, 0.0, 0)
    growth = (f.bound_const, f.growth)
    radius = tf_tail_radius(d, tol / 2, growth)
    tail = tf_tail_bound(d, radius, growth)

    def integrand(x):
        return np.asarray(f(x), dtype=complex) * tf_eval(d, x)

    res = integrate_line(integrand, radius, tail, tol, breakpoints=f.breakpoints)
    return res.scaled(-1) if n % 2 else res


def pair(T: Distribution, phi: TestFunction, tol: float = 1e-10) -> PairingResult:
    """Evaluate ``<T, phi>``."""
    _check_depth(T.depth)
    if isinstance(T, Regular):
        return pair_csl(T.f, 0, phi, tol)
    if isinstance(T, CslRep):
        return pair_csl(T.f, T.n, phi, tol)
    if isinstance(T, Delta):
        return PairingResult(complex(tf_eval(phi, 0.0)), 0.0, 1)
    if isinstance(T, Pv):
        from .pv import default_route, pv_pair

        return pv_pair(T.n, phi, T.route or default_route(T.n), tol)
    if isinstance(T, Derivative):
        return pair(T.inner, tf_derivative(phi, 1), tol).scaled(-1)
    if isinstance(T, Fourier):
        return pair(T.inner, tf_fourier(phi), tol)
    if isinstance(T, Combo):
        total = PairingResult(0j, 0.0, 0)
        for c, t in T.terms:
            total = total + pair(t, phi, tol).scaled(c)
        return total
    raise TypeError(f"not a distribution: {T!r}")


H = Regular(heaviside)
SGN = Regular(sgn)
ONE = Regular(one)
RAMP = Regular(ramp)
DELTA = Delta()
HFUN = Regular(hfun)
