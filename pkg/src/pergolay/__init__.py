"""Periodic Golay pairs and the supplementary difference sets that encode them."""

from .sds import Sds, SdsParams, derive_params, enumerate_pg_params
from .pairs import Pair, is_periodic_golay_pair, open_lengths, pair_to_sds, sds_to_pair
from .multiply import prop2_multiply, turyn_multiply
from .equiv import are_equivalent, canonical_form, normalize_blocks
from .search import SearchConfig, search_pg

__version__ = "0.1.0"

__all__ = [
    "Pair",
    "SearchConfig",
    "Sds",
    "SdsParams",
    "are_equivalent",
    "canonical_form",
    "derive_params",
    "enumerate_pg_params",
    "is_periodic_golay_pair",
    "normalize_blocks",
    "open_lengths",
    "pair_to_sds",
    "prop2_multiply",
    "sds_to_pair",
    "search_pg",
    "turyn_multiply",
]
