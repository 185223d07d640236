"""Exact character theory of S_n and A_n applied to singular class Cayley graphs."""

__version__ = "0.1.0"
