"""Exact arithmetic for Markov numbers via small-variation necklaces.

The library realizes, with bit-exact integer arithmetic, the combinatorial
description of the simple length spectrum of the modular torus: a map from
primitive small-variation necklaces to positive integers whose image is the
set of Markov numbers, evaluated by three mutually independent methods
(literal subset sum over Z[sqrt5], transfer-matrix product, and an integer
2x2 matrix trace), plus the Vieta tree of Markov triples for cross-checks
and bounded verification of the uniqueness conjecture.
"""

from .markov import MarkovTriple, is_markov_triple, markov_numbers, uniqueness_scan
from .necklace import (
    DomainError,
    Necklace,
    NecklaceParams,
    NecklaceSyntaxError,
    canonicalize,
    enumerate_necklaces,
    format_necklace,
    from_params,
    is_member,
    is_primitive,
    is_small_variation,
    parse_necklace,
    stair_necklace,
    theta,
    theta_inverse,
    to_params,
)
from .phi import (
    InconsistencyError,
    PhiResult,
    SubsetCapError,
    SubsetMask,
    phi,
    phi_literal,
    phi_transfer,
    run_statistic,
)
from .quadring import DivisibilityError, QuadInt, exact_div_int
from .slword import (
    Mat2,
    matrix_of_word,
    theta_length,
    trace_of_necklace,
    trace_pair_check,
    word_from_necklace,
)
from .spectrum import (
    Collision,
    CrossCheckReport,
    EnumerationIncomplete,
    SpectrumEntry,
    cross_check_markov,
    simple_spectrum,
    verify_injectivity,
)

__version__ = "0.1.0"

__all__ = [
    "Collision",
    "CrossCheckReport",
    "DivisibilityError",
    "DomainError",
    "EnumerationIncomplete",
    "InconsistencyError",
    "MarkovTriple",
    "Mat2",
    "Necklace",
    "NecklaceParams",
    "NecklaceSyntaxError",
    "PhiResult",
    "QuadInt",
    "SpectrumEntry",
    "SubsetCapError",
    "SubsetMask",
    "canonicalize",
    "cross_check_markov",
    "enumerate_necklaces",
    "exact_div_int",
    "format_necklace",
    "from_params",
    "is_markov_triple",
    "is_member",
    "is_primitive",
    "is_small_variation",
    "markov_numbers",
    "matrix_of_word",
    "parse_necklace",
    "phi",
    "phi_literal",
    "phi_transfer",
    "run_statistic",
    "simple_spectrum",
    "stair_necklace",
    "theta",
    "theta_inverse",
    "theta_length",
    "to_params",
    "trace_of_necklace",
    "trace_pair_check",
    "uniqueness_scan",
    "verify_injectivity",
    "word_from_necklace",
]
