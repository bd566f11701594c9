"""Exact complex-polynomial arithmetic.

Polynomials are stored in ascending order, ``coeffs[k]`` multiplying ``x**k``.
All values are immutable; every operation returns a normalized polynomial.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .errors import DegreeCapExceeded

DEGREE_CAP = 64
# absolute (not relative) so that degree is stable under scaling
ZERO_THRESHOLD = 1e-300


def _normalize(coeffs: Iterable[complex]) -> tuple[complex, ...]:
    c = [complex(v) for v in coeffs]
    while c and abs(c[-1]) <= ZERO_THRESHOLD:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class ComplexPolynomial:
    coeffs: tuple[complex, ...] = ()

    def __post_init__(self):
        c = _normalize(self.coeffs)
        if len(c) - 1 > DEGREE_CAP:
            raise DegreeCapExceeded(f"degree {len(c) - 1} exceeds cap {DEGREE_CAP}")
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        """Highest index with a nonzero coefficient; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        return poly_eval(self, x)

    def __add__(self, other: ComplexPolynomial) -> ComplexPolynomial:
        return poly_add(self, other)

    def __sub__(self, other: ComplexPolynomial) -> ComplexPolynomial:
        return poly_add(self, poly_scale(other, -1))

    def __mul__(self, other):
        if isinstance(other, ComplexPolynomial):
            return poly_mul(self, other)
        return poly_scale(self, other)

    def __rmul__(self, other):
        return poly_scale(self, other)

    def __neg__(self) -> ComplexPolynomial:
        return poly_scale(self, -1)


def poly(coeffs: Sequence[complex]) -> ComplexPolynomial:
    return ComplexPolynomial(tuple(coeffs))


ZERO = ComplexPolynomial(())
ONE = ComplexPolynomial((1,))
X = ComplexPolynomial((0, 1))


def poly_eval(p: ComplexPolynomial, x):
    """Horner evaluation; ``x`` may be a scalar or a numpy array."""
    if not p.coeffs:
        return 0 * x + 0j
    acc = p.coeffs[-1] + 0 * x
    for c in reversed(p.coeffs[:-1]):
        acc = acc * x + c
    return acc


def poly_add(p: ComplexPolynomial, q: ComplexPolynomial) -> ComplexPolynomial:
    n = max(len(p.coeffs), len(q.coeffs))
    a = p.coeffs + (0j,) * (n - len(p.coeffs))
    b = q.coeffs + (0j,) * (n - len(q.coeffs))
    return ComplexPolynomial(tuple(u + v for u, v in zip(a, b)))


def poly_scale(p: ComplexPolynomial, s: complex) -> ComplexPolynomial:
    return ComplexPolynomial(tuple(s * c for c in p.coeffs))


def poly_derivative(p: ComplexPolynomial) -> ComplexPolynomial:
    return ComplexPolynomial(tuple(k * p.coeffs[k] for k in range(1, len(p.coeffs))))


def poly_mul(p: ComplexPolynomial, q: ComplexPolynomial) -> ComplexPolynomial:
    if p.is_zero() or q.is_zero():
        return ZERO
    if p.degree + q.degree > DEGREE_CAP:
        raise DegreeCapExceeded(
            f"product degree {p.degree + q.degree} exceeds cap {DEGREE_CAP}"
        )
    out = [0j] * (p.degree + q.degree + 1)
    for i, a in enumerate(p.coeffs):
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return ComplexPolynomial(tuple(out))


def poly_shift(p: ComplexPolynomial, c: complex) -> ComplexPolynomial:
    """Return ``q`` with ``q(x) == p(x - c)``."""
    n = len(p.coeffs)
    out = [0j] * n
    for k, a in enumerate(p.coeffs):
        # (x - c)^k = sum_j C(k, j) x^j (-c)^(k-j)
        for j in range(k + 1):
            out[j] += a * comb(k, j) * (-c) ** (k - j)
    return ComplexPolynomial(tuple(out))


def poly_reflect(p: ComplexPolynomial) -> ComplexPolynomial:
    """``x -> p(-x)``."""
    return ComplexPolynomial(tuple(c * (-1) ** k for k, c in enumerate(p.coeffs)))


def poly_odd_part_over_x(p: ComplexPolynomial) -> ComplexPolynomial:
    """Exact ``(p(x) - p(-x)) / x``."""
    return ComplexPolynomial(
        tuple(2 * p.coeffs[k + 1] if (k + 1) % 2 else 0j for k in range(len(p.coeffs) - 1))
    )
