"""Sieve, classification and counting of cousin primes (q, q+4) via twin-4 ranks.

An odd m is a twin-4 rank when 3m-2 and 3m+2 are both prime.
"""
from .arith import constants, nearest_int, primorial_L
from .counting import legendre_report, stats, window_census
from .multirank import common_double, extend_common, mfold
from .nonrank import classify, decompose, progressions_for_prime
from .oracle import twin_ranks_naive
from .sieve import constants_C, cousin_pairs_upto, supergroup_view, twin4_ranks_upto

__version__ = "0.1.0"

__all__ = [
    "classify",
    "common_double",
    "constants",
    "constants_C",
    "cousin_pairs_upto",
    "decompose",
    "extend_common",
    "legendre_report",
    "mfold",
    "nearest_int",
    "primorial_L",
    "progressions_for_prime",
    "stats",
    "supergroup_view",
    "twin4_ranks_upto",
    "twin_ranks_naive",
    "window_census",
]
