"""Linking data of periodic orbits of disc homeomorphisms via braid words."""

from .braid import BraidWord, Permutation, parse_braid
from .laurent import LaurentPoly, RingMatrix, determinant, div_exact

__all__ = [
    "BraidWord",
    "LaurentPoly",
    "Permutation",
    "RingMatrix",
    "determinant",
    "div_exact",
    "parse_braid",
]
