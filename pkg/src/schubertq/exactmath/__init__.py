"""Exact rationals, sparse polynomials over Q and fraction-free linear algebra."""

from fractions import Fraction as Rational

from .linalg import (det, evaluate_matrix, flatten, identity, inverse, matmul, minors,
                     nullspace, poly_matmul, poly_matrix, rank, reshape, rref,
                     scalar_minors, to_matrix, transpose, zeros)
from .poly import Poly, as_fraction, evaluate, format_fraction, leading_form
from .system import PolySystem, jacobian_at

__all__ = [
    "Rational", "Poly", "PolySystem", "as_fraction", "format_fraction", "evaluate",
    "leading_form", "jacobian_at", "rank", "det", "minors", "scalar_minors", "rref",
    "nullspace", "inverse", "identity", "zeros", "transpose", "matmul", "flatten",
    "reshape", "to_matrix", "poly_matrix", "poly_matmul", "evaluate_matrix",
]
