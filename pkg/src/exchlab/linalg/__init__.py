"""Exact rational arithmetic and linear algebra."""

from exchlab.linalg.matrix import RationalMatrix, nullspace_basis, rank, rref
from exchlab.linalg.rational import Rational, format_rational, parse_rational, rational

__all__ = [
    "Rational",
    "RationalMatrix",
    "format_rational",
    "nullspace_basis",
    "parse_rational",
    "rank",
    "rational",
    "rref",
]
