"""Exact enumeration and capacity engine for forbidden-substring constrained codes.

The cluster method turns a forbidden set F into a rational generating
function ``T/S``; counts, capacities and every cross-check hang off that.
"""

from __future__ import annotations

from .capacity import (
    CapacityEstimate,
    capacity,
    capacity_spectral,
    companion_matrix,
    lpa_capacity_bound,
)
from .cluster import GenFun, cluster_genfun, correlation_poly, overlap_set
from .errors import (
    DegenerateError,
    GJError,
    InputError,
    InternalError,
    ResourceError,
    ValidationError,
)
from .nonoverlap import (
    CodeSet,
    is_nonoverlapping,
    levenshtein_bound,
    max_variable_length_code,
    nonoverlap_genfun,
)
from .series import brute_force_counts, count, count_range, recurrence_from_genfun
from .spectral import build_debruijn, det_poly, is_degenerate, spectral_radius, verify_transfer_identity
from .words import LB, LPA, PA, RLL, Alphabet, ForbiddenSet, family_generate, reduce

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "CapacityEstimate",
    "CodeSet",
    "DegenerateError",
    "ForbiddenSet",
    "GJError",
    "GenFun",
    "InputError",
    "InternalError",
    "LB",
    "LPA",
    "PA",
    "RLL",
    "ResourceError",
    "ValidationError",
    "brute_force_counts",
    "build_debruijn",
    "capacity",
    "capacity_spectral",
    "cluster_genfun",
    "companion_matrix",
    "correlation_poly",
    "count",
    "count_range",
    "det_poly",
    "family_generate",
    "is_degenerate",
    "is_nonoverlapping",
    "levenshtein_bound",
    "lpa_capacity_bound",
    "max_variable_length_code",
    "nonoverlap_genfun",
    "overlap_set",
    "recurrence_from_genfun",
    "reduce",
    "spectral_radius",
    "verify_transfer_identity",
]
