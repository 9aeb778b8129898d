"""brpic-kit: exact Brauer-Picard computations for supergroup algebras.

Everything is computed over cyclotomic number fields with exact rational
coefficients; no floating point is used anywhere.
"""

__version__ = "0.1.0"
