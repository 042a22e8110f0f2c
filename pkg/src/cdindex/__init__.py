"""Exact cd-index computations for Eulerian and semi-Eulerian posets."""

from .ncpoly import NcPoly, ab_to_cd, cd_to_ab, derivation_g, format_poly, parse_poly
from .poset import Classification, FlagVector, GradedPoset, cd_index, classify, flag_f_vector
from .simplicial import SimplicialComplex, face_poset, lambda_poset, parse_complex

__all__ = [
    "Classification",
    "FlagVector",
    "GradedPoset",
    "NcPoly",
    "SimplicialComplex",
    "ab_to_cd",
    "cd_index",
    "cd_to_ab",
    "classify",
    "derivation_g",
    "face_poset",
    "flag_f_vector",
    "format_poly",
    "lambda_poset",
    "parse_complex",
    "parse_poly",
]

__version__ = "0.1.0"
