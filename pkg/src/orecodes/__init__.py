"""Noncommutative polynomial arithmetic and coding theory over exact fields.

Modules: gf (finite fields), skewpoly (the Ore extension F[x;sigma,delta]),
algset (single-variable algebraic sets), codes (skew cyclic codes),
evalcodes (evaluation codes, Hamming/rank distances), linearized
(q-linearized polynomials), spbw (skew PBW extensions and Groebner bases),
spbwsets (multivariate roots, ideals of points, Nullstellensatz checks),
cli (command-line front end).
"""

from .gf import GF, parse_field
from .skewpoly import OreRing
from .spbw import PBWPresentation, load_presentation

__all__ = ["GF", "parse_field", "OreRing", "PBWPresentation", "load_presentation"]
