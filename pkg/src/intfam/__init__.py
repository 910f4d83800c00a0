"""Constructive tools around k-uniform intersecting families with covering number k.

Degree lemmas, exact covering numbers, Guesser-Chooser edge codecs, exact
counts of the answer spaces they land in, and a small exhaustive search.
"""

from .codec import (
    AnswerSequence,
    CodecError,
    InjectivityReport,
    InvalidCode,
    StrategyInfeasible,
    compute_forced_vertices,
    decode,
    decode_basic,
    decode_monotone,
    decode_paired,
    encode,
    encode_basic,
    encode_monotone,
    encode_paired,
    verify_injectivity,
)
from .counting import (
    BoundsReport,
    count_monotone_sequences,
    count_paired_sequences,
    count_valid_pairs,
    theorem_bounds,
)
from .covering import CoverCertificate, covering_number, is_cover, verify_tau_equals_k
from .families import complete_family, load, random_subfamily, save, triangle
from .hypergraph import Family, ValidationReport, degree, find_disjoint_edge, restrict, validate_family
from .lemmas import GreedyChain, check_degree_bound, greedy_chain, greedy_extension
from .search import SearchResult, max_family_size

__version__ = "0.1.0"
