"""Exact-arithmetic verifier for the D4 multiplicity-4 obstruction in R^52."""

__version__ = "0.1.0"

from .obstruct import theorem_pipeline  # noqa: F401
