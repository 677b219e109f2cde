"""Exact rational Clebsch-Gordan coefficients for SL(2) tensor products."""

from .clebsch_gordan import CGMatrix, Decomposition, cg, cg_matrix, decompose, normalizer
from .combinatorics import binomial, multinomial
from .normalized import SignedSqrtRational, racah_normalized, wigner, wigner_via_rational
from .projectors import RationalMatrix, projector, tridiagonal_ef
from .weight_basis import CoordinateMatrix, IndexTuple, coord, coordinate_matrix

__all__ = [
    "CGMatrix", "CoordinateMatrix", "Decomposition", "IndexTuple", "RationalMatrix",
    "SignedSqrtRational", "binomial", "cg", "cg_matrix", "coord", "coordinate_matrix",
    "decompose", "multinomial", "normalizer", "projector", "racah_normalized",
    "tridiagonal_ef", "wigner", "wigner_via_rational",
]
