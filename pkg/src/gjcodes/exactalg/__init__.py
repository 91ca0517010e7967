"""Exact arbitrary-precision algebra: polynomials, rational functions,
fraction-free determinants and certified real-root isolation."""

from .matrix import PolyMatrix, bareiss_det, cofactor_det
from .poly import IntPoly, RatPoly, poly_gcd
from .ratfun import RationalFunction, ratfun_canonicalize
from .roots import (
    RootInterval,
    count_roots,
    sign_at,
    smallest_positive_root,
    squarefree_part,
    sturm_sequence,
)

__all__ = [
    "IntPoly",
    "PolyMatrix",
    "RatPoly",
    "RationalFunction",
    "RootInterval",
    "bareiss_det",
    "cofactor_det",
    "count_roots",
    "poly_gcd",
    "ratfun_canonicalize",
    "sign_at",
    "smallest_positive_root",
    "squarefree_part",
    "sturm_sequence",
]
