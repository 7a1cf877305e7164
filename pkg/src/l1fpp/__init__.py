"""Exact-arithmetic models of hyperplanes of c, their renormings and duals.

Everything is computed with :class:`fractions.Fraction`; finite-dimensional
claims are checked against polytope oracles built by vertex enumeration.
"""

from .seqcore import ConvergentSeq, SummableSeq, parse_rational
from .hyperplane import HyperplaneSpec, renormed

__all__ = ["ConvergentSeq", "SummableSeq", "parse_rational", "HyperplaneSpec", "renormed"]
__version__ = "0.1.0"
