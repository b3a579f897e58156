"""Exact computations in Kauffman bracket skein algebras of small surfaces."""

__version__ = "0.1.0"
