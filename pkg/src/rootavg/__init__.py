"""Exact average root number of the elliptic surfaces F_s: y^2 = x^3 + 3t x^2 + 3s x + s t."""
from .average import AverageResult, average, exceptional_primes, is_parity_biased, tail_lower_bound
from .factors import local_factor

__all__ = [
    "AverageResult",
    "average",
    "exceptional_primes",
    "is_parity_biased",
    "local_factor",
    "tail_lower_bound",
]

__version__ = "0.1.0"
