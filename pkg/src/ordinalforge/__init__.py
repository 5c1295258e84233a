"""Dimensional Veblen notations: arrays, standard terms, ψ₀ conversion and hierarchies."""

from .term import parse, parse_term, to_text, compare, is_standard
from .buchholz import parse_oterm, psi0_convert

__all__ = ["parse", "parse_term", "to_text", "compare", "is_standard", "parse_oterm",
           "psi0_convert"]
