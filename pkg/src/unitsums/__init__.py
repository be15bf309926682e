"""Sums of two units in quadratic and cubic number fields."""

from .arith import IntPoly
from .field import CubicField, FieldElement, make_field, roots_in_field

__version__ = "0.1.0"

__all__ = ["IntPoly", "CubicField", "FieldElement", "make_field", "roots_in_field", "__version__"]
