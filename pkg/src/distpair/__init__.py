"""Numerical pairing of tempered distributions with Schwartz test functions."""

from .algebra import DEGREE_CAP, ComplexPolynomial, poly
from .dist import (
    DELTA,
    H,
    HFUN,
    ONE,
    RAMP,
    SGN,
    Combo,
    CslFunction,
    CslRep,
    Delta,
    Derivative,
    Distribution,
    Fourier,
    Pv,
    Regular,
    combo,
    csl_audit,
    derivative,
    fourier,
    pair,
)
from .parse import parse_distribution
from .pv import PvRoute, h_eval, pv_distribution, pv_pair
from .quad import PairingResult, integrate_interval, integrate_line, integrate_symmetric_limit
from .testfn import (
    CANONICAL,
    Corpus,
    TestFunction,
    corpus_generate,
    gaussian,
    parse_test_function,
    tf_derivative,
    tf_eval,
    tf_fourier,
    tf_tail_radius,
    tf_taylor,
)

__version__ = "0.1.0"

__all__ = [
    "DEGREE_CAP",
    "ComplexPolynomial",
    "poly",
    "DELTA",
    "H",
    "HFUN",
    "ONE",
    "RAMP",
    "SGN",
    "Combo",
    "CslFunction",
    "CslRep",
    "Delta",
    "Derivative",
    "Distribution",
    "Fourier",
    "Pv",
    "Regular",
    "combo",
    "csl_audit",
    "derivative",
    "fourier",
    "pair",
    "parse_distribution",
    "PvRoute",
    "h_eval",
    "pv_distribution",
    "pv_pair",
    "PairingResult",
    "integrate_interval",
    "integrate_line",
    "integrate_symmetric_limit",
    "CANONICAL",
    "Corpus",
    "TestFunction",
    "corpus_generate",
    "gaussian",
    "parse_test_function",
    "tf_derivative",
    "tf_eval",
    "tf_fourier",
    "tf_tail_radius",
    "tf_taylor",
    "__version__",
]
