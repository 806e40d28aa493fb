"""Exact computations with Clifford polynomial superalgebras and Clifford Demazure operators."""

__version__ = "0.1.0"
