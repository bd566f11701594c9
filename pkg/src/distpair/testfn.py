"""Hermite-Gaussian test functions ``p(x) * exp(i*omega*x) * exp(-a*(x - mu)**2)``.

The class is closed under differentiation and Fourier transform, so every
derivative and transform needed by a pairing is again exact class data.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .algebra import (
    DEGREE_CAP,
    ComplexPolynomial,
    poly,
    poly_derivative,
    poly_eval,
    poly_mul,
    poly_reflect,
    poly_scale,
    poly_shift,
)
from .errors import DegreeCapExceeded, InvalidInput, InvalidTolerance, ParseError


@dataclass(frozen=True)
class TestFunction:
    poly: ComplexPolynomial
    a: float = 1.0
    mu: float = 0.0
    omega: float = 0.0

    __test__ = False  # keep pytest from collecting this class

    def __post_init__(self):
        if not isinstance(self.poly, ComplexPolynomial):
            object.__setattr__(self, "poly", poly(self.poly))
        if not self.a > 0:
            raise InvalidInput(f"Gaussian width a must be positive, got {self.a}")
        for name in ("a", "mu", "omega"):
            object.__setattr__(self, name, float(getattr(self, name)))

    def __call__(self, x):
        return tf_eval(self, x)

    def scaled(self, c: complex) -> TestFunction:
        return replace(self, poly=poly_scale(self.poly, c))

    @property
    def scale(self) -> float:
        """Sum of coefficient magnitudes; the constant in ``|p(x)| <= C(1 + |x|^d)``."""
        return math.fsum(abs(c) for c in self.poly.coeffs)


def gaussian(a: float = 1.0, mu: float = 0.0, omega: float = 0.0, coeffs=(1,)) -> TestFunction:
    return TestFunction(poly(coeffs), a, mu, omega)


CANONICAL = {
    "gauss": gaussian(),
    "xgauss": gaussian(coeffs=(0, 1)),
    "gauss@1": gaussian(mu=1.0),
    "x2gauss": gaussian(a=0.5, coeffs=(0, 0, 1)),
}


def tf_eval(phi: TestFunction, x):
    x = np.asarray(x, dtype=float) if not np.isscalar(x) else float(x)
    env = np.exp(1j * phi.omega * x - phi.a * (x - phi.mu) ** 2)
    return poly_eval(phi.poly, x) * env


def _derivative_once(phi: TestFunction) -> TestFunction:
    # d/dx [p e^{g}] = (p' + p g') e^{g},  g'(x) = i*omega + 2*a*mu - 2*a*x
    dg = ComplexPolynomial((1j * phi.omega + 2 * phi.a * phi.mu, -2 * phi.a))
    new = poly_derivative(phi.poly) + poly_mul(phi.poly, dg)
    return replace(phi, poly=new)


def tf_derivative(phi: TestFunction, k: int = 1) -> TestFunction:
    if k < 0:
        raise InvalidInput("derivative order must be nonnegative")
    if phi.poly.degree + k > DEGREE_CAP:
        raise DegreeCapExceeded(f"order-{k} derivative exceeds degree cap")
    for _ in range(k):
        phi = _derivative_once(phi)
    return phi


def tf_taylor_coeffs(phi: TestFunction, last: int, first: int = 0) -> list[complex]:
    """``phi^(k)(0) / k!`` for ``first <= k <= last`` from exact derivatives."""
    if last > DEGREE_CAP:
        raise DegreeCapExceeded(f"Taylor order {last} exceeds degree cap")
    out = []
    d = phi
    for k in range(last + 1):
        if k >= first:
            out.append(complex(tf_eval(d, 0.0)) / math.factorial(k))
        if k < last:
            d = _derivative_once(d)
    return out


def tf_taylor(phi: TestFunction, m: int) -> ComplexPolynomial:
    """Order-``m`` Taylor polynomial of ``phi`` at 0."""
    if m < 0:
        raise InvalidInput("Taylor order must be nonnegative")
    return poly(tf_taylor_coeffs(phi, m))


def _gaussian_derivative_polys(a: float, n: int) -> list[ComplexPolynomial]:
    """``D_k`` with ``d^k/dx^k exp(-x^2/(4a)) = D_k(x) exp(-x^2/(4a))``."""
    out = [ComplexPolynomial((1,))]
    lin = ComplexPolynomial((0, -1 / (2 * a)))
    for _ in range(n):
        d = out[-1]
        out.append(poly_derivative(d) + poly_mul(d, lin))
    return out


def tf_fourier(phi: TestFunction) -> TestFunction:
    """Closed-form ``F phi(x) = integral of exp(-i*x*y) phi(y) dy``.

    With ``q(t) = p(t + mu)`` the transform is
    ``sqrt(pi/a) e^{i omega mu} e^{-i mu x} r(x - omega) e^{-(x - omega)^2/(4a)}``
    where ``r = sum_k q_k i^k D_k``.
    """
    a, mu, om = phi.a, phi.mu, phi.omega
    q = poly_shift(phi.poly, -mu)
    dks = _gaussian_derivative_polys(a, max(q.degree, 0))
    r = ComplexPolynomial(())
    for k, qk in enumerate(q.coeffs):
        r = r + poly_scale(dks[k], qk * 1j**k)
    const = math.sqrt(math.pi / a) * complex(math.cos(om * mu), math.sin(om * mu))
    new = poly_scale(poly_shift(r, om), const)
    return TestFunction(new, 1 / (4 * a), om, -mu)


def tf_reflect(phi: TestFunction) -> TestFunction:
    """``x -> phi(-x)``."""
    return TestFunction(poly_reflect(phi.poly), phi.a, -phi.mu, -phi.omega)


def tf_multiply_x(phi: TestFunction, k: int = 1) -> TestFunction:
    """``x -> x**k * phi(x)``."""
    xk = ComplexPolynomial((0,) * k + (1,))
    return replace(phi, poly=poly_mul(phi.poly, xk))


# -- tail bounds ---------------------------------------------------------------


def _gauss_moment_tails(a: float, rho: float, jmax: int) -> list[float]:
    """Upper bounds on ``int_rho^inf t^j exp(-a t^2) dt`` for ``j <= jmax``.

    ``j = 0`` uses ``exp(-a rho^2) / (2 a rho)``; higher moments follow from
    the exact integration-by-parts recursion.
    """
    e = math.exp(-a * rho * rho)
    out = [e / (2 * a * rho)]
    if jmax >= 1:
        out.append(e / (2 * a))
    for j in range(2, jmax + 1):
        out.append((rho ** (j - 1) * e + (j - 1) * out[j - 2]) / (2 * a))
    return out


def envelope_tail_bound(abs_coeffs: Sequence[float], a: float, mu: float, radius: float) -> float:
    """Bound ``int_{|x|>radius} (sum_k c_k |x|^k) exp(-a (x-mu)^2) dx``.

    Uses ``|x| <= |t| + |mu|`` with ``t = x - mu`` and ``|t| >= radius - |mu|`` on
    both tails.
    """
    m = abs(mu)
    rho = radius - m
    if rho <= 0:
        return math.inf
    deg = len(abs_coeffs) - 1
    if deg < 0:
        return 0.0
    moments = _gauss_moment_tails(a, rho, deg)
    total = 0.0
    for k, c in enumerate(abs_coeffs):
        if c == 0:
            continue
        s = 0.0
        for j in range(k + 1):
            s += math.comb(k, j) * m ** (k - j) * moments[j]
        total += c * s
    return 2 * total


def _search_radius(bound, floor: float, tol: float) -> float:
    # smallest half-integer R > floor with bound(R) <= tol
    r = math.floor(2 * floor) / 2 + 0.5
    while bound(r) > tol:
        r += 0.5
        if r > 1e5:
            raise InvalidInput("tail radius search did not terminate")
    return r


def tf_tail_radius(phi: TestFunction, tol: float, growth: tuple[float, int] = (0.0, 0)) -> float:
    """Smallest half-integer ``R`` with ``int_{|x|>R} |phi| <= tol``.

    ``growth=(C, n0)`` bounds ``int_{|x|>R} C (1 + |x|^n0) |phi|`` instead,
    for pairing against a slowly growing function.
    """
    if not tol > 0:
        raise InvalidTolerance(f"tolerance must be positive, got {tol}")
    coeffs = [abs(c) for c in phi.poly.coeffs]
    if not coeffs:
        return 0.5
    C, n0 = growth
    if C:
        shifted = [0.0] * n0 + coeffs
        padded = coeffs + [0.0] * n0
        coeffs = [C * (u + v) for u, v in zip(padded, shifted)]
    return _search_radius(
        lambda r: envelope_tail_bound(coeffs, phi.a, phi.mu, r), abs(phi.mu), tol
    )


def tf_tail_bound(phi: TestFunction, radius: float, growth: tuple[float, int] = (0.0, 0)) -> float:
    coeffs = [abs(c) for c in phi.poly.coeffs]
    C, n0 = growth
    if C and coeffs:
        shifted = [0.0] * n0 + coeffs
        padded = coeffs + [0.0] * n0
        coeffs = [C * (u + v) for u, v in zip(padded, shifted)]
    return envelope_tail_bound(coeffs, phi.a, phi.mu, radius)


# -- corpus --------------------------------------------------------------------


@dataclass(frozen=True)
class Corpus:
    seed: int
    members: tuple[TestFunction, ...]

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i):
        return self.members[i]


def corpus_generate(
    seed: int,
    count: int,
    max_degree: int = 4,
    a_range: tuple[float, float] = (0.2, 2.0),
    mu_range: tuple[float, float] = (-2.0, 2.0),
    omega_range: tuple[float, float] = (-3.0, 3.0),
) -> Corpus:
    """Canonical members first, then seeded random class members.

    Members are drawn one at a time from a single stream, so a larger
    ``count`` extends a smaller corpus without changing its prefix.
    """
    canon = list(CANONICAL.values())
    members = canon[: min(count, len(canon))]
    rng = np.random.default_rng(seed)
    while len(members) < count:
        deg = int(rng.integers(0, max_degree + 1))
        re_im = rng.uniform(-1.0, 1.0, size=(deg + 1, 2))
        coeffs = [complex(r, i) for r, i in re_im]
        a = float(rng.uniform(*a_range))
        mu = float(rng.uniform(*mu_range))
        om = float(rng.uniform(*omega_range))
        members.append(TestFunction(poly(coeffs), a, mu, om))
    return Corpus(seed, tuple(members))


# -- textual constructor -------------------------------------------------------

_COMPLEX_RE = re.compile(
    r"^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?"
    r"(?:\s*([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i)?\s*$"
)


def parse_complex(text: str) -> complex:
    """Parse ``re`` or ``re+imi`` (also ``imi`` and ``-i``)."""
    s = text.strip()
    if not s:
        raise ParseError("empty number")
    if s.endswith("i") and re.fullmatch(r"[+-]?(?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?i", s):
        body = s[:-1]
        if body in ("", "+"):
            return 1j
        if body == "-":
            return -1j
        return complex(0, float(body))
    m = _COMPLEX_RE.match(s)
    if not m or m.group(1) is None:
        raise ParseError(f"bad complex literal {text!r}")
    real = float(m.group(1))
    if m.group(2) is None:
        return complex(real, 0)
    imag = float(m.group(3)) if m.group(3) else 1.0
    return complex(real, imag if m.group(2) == "+" else -imag)


def parse_test_function(text: str) -> TestFunction:
    """``gauss``, ``xgauss``, ``gauss@1``, ``x2gauss`` or
    ``hg:poly=[c0,c1,...];a=<f>;mu=<f>;omega=<f>``."""
    s = text.strip()
    if s in CANONICAL:
        return CANONICAL[s]
    if not s.startswith("hg:"):
        raise ParseError(f"unknown test function {text!r}")
    fields = {"a": "1", "mu": "0", "omega": "0"}
    coeffs: list[complex] | None = None
    for part in s[3:].split(";"):
        if not part.strip():
            continue
        key, sep, val = part.partition("=")
        key = key.strip()
        if not sep:
            raise ParseError(f"missing '=' in {part!r}")
        if key == "poly":
            val = val.strip()
            if not (val.startswith("[") and val.endswith("]")):
                raise ParseError("poly must be a bracketed list")
            inner = val[1:-1].strip()
            coeffs = [parse_complex(c) for c in inner.split(",")] if inner else []
        elif key in fields:
            fields[key] = val
        else:
            raise ParseError(f"unknown field {key!r}")
    if coeffs is None:
        raise ParseError("hg: constructor needs poly=[...]")
    try:
        return TestFunction(
            poly(coeffs), float(fields["a"]), float(fields["mu"]), float(fields["omega"])
        )
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
