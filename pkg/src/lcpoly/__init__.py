"""Exact construction and identity verification for the Laguerre-constellation
orthogonal polynomial families."""

from .engine import verify_all, verify_identity
from .families import FamilyId, ParamPoint, family_poly, recurrence_coeffs
from .poly import Poly

__all__ = ["FamilyId", "ParamPoint", "Poly", "family_poly", "recurrence_coeffs", "verify_all", "verify_identity"]
__version__ = "0.1.0"
