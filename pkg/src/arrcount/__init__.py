"""Exact enumerative geometry of hyperplane arrangements."""

from .enumeration import (
    char_number_generic_lines,
    count_0coned,
    count_dconed,
    count_generic,
)
from .ring import RingSpec, TruncatedPolynomial, ring_new
from .schubert import GrassmannianSpec, schubert_degree

__version__ = "0.1.0"
