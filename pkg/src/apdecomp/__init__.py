"""Multiplicative decompositions of intervals mod p and rational progressions.

The core objects are bitmask residue sets (`ResidueSet`) with exact sumset,
product-set and dilation arithmetic, an exhaustive decomposition search with
equivalence-class canonicalization, verified constructions for the known
decomposable interval families, an exact-rational analogue for integer
progressions, and checkers for the supporting additive-combinatorics bounds.
"""

from .construct import (ConstructionResult, TwoSquares, VerificationError,
                        special_triple, sqrt_minus_one, sum_two_squares,
                        symmetric_decomposition, theorem2_decomposition,
                        theorem3_decomposition)
from .decomp import (ALL_TAGS, DEFAULT_LIMITS, Decomposition,
                     DecompositionClass, SearchLimits, SetReport,
                     SetTooLargeError, TAG_DOUBLING_PAIR, TAG_OTHER,
                     TAG_SYMMETRIC_FACTOR, analyze_set, canonical_key,
                     classify_decomposition, find_decompositions,
                     is_decomposable, is_special_triple, naive_oracle)
from .fpset import (ApCover, IntervalSpec, ModulusMismatchError, ResidueSet,
                    ap_cover_mod_p, dilate, is_interval, is_prime,
                    is_symmetric, kfold_sum, make_interval, negate,
                    productset, strip_zero, sumset)
from .lemmalab import (LemmaFalsified, LemmaVerdict, SuiteResult,
                       bourgain_suite, cauchy_davenport_suite,
                       check_bourgain, check_cauchy_davenport, check_freiman,
                       check_positive_prop_ap, close_pair_suite,
                       find_close_pair, freiman_suite, positive_prop_suite,
                       run_default_suites)
from .rational import (MAX_NORMALIZED_MAGNITUDE, MagnitudeError,
                       NotAProgressionError, RationalDecomposition,
                       classify_rational, is_rational_ap, normalize_coprime,
                       rational_decompositions, rational_set,
                       special_triple_scale)

__version__ = "0.1.0"

__all__ = [
    "ALL_TAGS", "ApCover", "ConstructionResult", "DEFAULT_LIMITS",
    "Decomposition", "DecompositionClass", "IntervalSpec", "LemmaFalsified",
    "LemmaVerdict", "MAX_NORMALIZED_MAGNITUDE", "MagnitudeError",
    "ModulusMismatchError", "NotAProgressionError", "RationalDecomposition",
    "ResidueSet", "SearchLimits", "SetReport", "SetTooLargeError",
    "SuiteResult", "TAG_DOUBLING_PAIR", "TAG_OTHER", "TAG_SYMMETRIC_FACTOR",
    "TwoSquares", "VerificationError", "analyze_set", "ap_cover_mod_p",
    "bourgain_suite", "canonical_key", "cauchy_davenport_suite",
    "check_bourgain", "check_cauchy_davenport", "check_freiman",
    "check_positive_prop_ap", "classify_decomposition", "classify_rational",
    "close_pair_suite", "dilate", "find_close_pair", "find_decompositions",
    "freiman_suite", "is_decomposable", "is_interval", "is_prime",
    "is_rational_ap", "is_special_triple", "is_symmetric", "kfold_sum",
    "make_interval", "naive_oracle", "negate", "normalize_coprime",
    "positive_prop_suite", "productset", "rational_decompositions",
    "rational_set", "run_default_suites", "special_triple",
    "special_triple_scale", "sqrt_minus_one", "strip_zero", "sum_two_squares",
    "sumset", "symmetric_decomposition", "theorem2_decomposition",
    "theorem3_decomposition",
]
