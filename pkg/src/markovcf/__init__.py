"""Markov numbers via Christoffel snake graphs and exact continued fractions."""

from .cf_core import (
    ContinuedFraction,
    DomainError,
    Marker,
    SegmentedCF,
    StructureError,
    evaluate,
    numerator,
    replacement_difference,
    reverse,
    strip_zero_pairs,
)
from .snake import build_snake, cf_from_snake, christoffel_word, count_matchings_bruteforce, markov_number
from .trees import generate_tree, is_markov_triple, markov_number_via_tree, stern_brocot_path

__version__ = "0.1.0"
