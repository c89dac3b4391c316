"""Exact q-deformed Clifford analysis: rational functions in q, Clifford-valued
polynomials, q-Dirac operators, Jackson integration and q-orthogonal polynomials."""
from __future__ import annotations

__version__ = "0.1.0"
