"""Exact computer algebra for Lucas polynomials, lucanomials, and
Lucas-Catalan polynomials, with mechanical identity and positivity
verification."""

from .binom import LucanomialEngine
from .catalan import (
    CatalanVerifier,
    SweepConfig,
    VerificationReport,
    poly_digest,
)
from .errors import IntegralityError, NonDivisibleError, ParseError, PolynomialError
from .lucas import IdentityVerdict, LucasCache, lemma21_check, product_identity_check
from .poly import ONE, S, T, ZERO, Polynomial, PositivityVerdict, parse

__version__ = "0.1.0"

__all__ = [
    "Polynomial",
    "PositivityVerdict",
    "parse",
    "ZERO",
    "ONE",
    "S",
    "T",
    "LucasCache",
    "IdentityVerdict",
    "product_identity_check",
    "lemma21_check",
    "LucanomialEngine",
    "CatalanVerifier",
    "SweepConfig",
    "VerificationReport",
    "poly_digest",
    "PolynomialError",
    "NonDivisibleError",
    "ParseError",
    "IntegralityError",
    "__version__",
]
