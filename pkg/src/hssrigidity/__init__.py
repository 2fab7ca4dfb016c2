"""Exact Lie-theoretic rigidity certificates for smooth Schubert varieties
in Hermitian symmetric spaces."""

__version__ = "0.1.0"
