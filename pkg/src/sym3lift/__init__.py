"""Exact symmetric cube transfer GL2 -> GSp4 on Hecke eigensystems."""

from .scalars import INF, PAdicContext, QuadExt, valuation, quad_root_valuations, hensel_lift
from .poly import UniPoly, BiPoly, sym3_quadratic, charpoly_from_power_traces, divide_exact
from .eigensys import (
    DirichletCharacter,
    Eigensystem,
    classify_sym3,
    is_sym3_quartic,
    match_lift,
    normalize,
    slope,
    stabilizations,
    sym3_lift,
    twist,
    twist_gl2,
)
from .levels import sym3_level
from .congruence import scan_congruences

__all__ = [
    "INF",
    "PAdicContext",
    "QuadExt",
    "valuation",
    "quad_root_valuations",
    "hensel_lift",
    "UniPoly",
    "BiPoly",
    "sym3_quadratic",
    "charpoly_from_power_traces",
    "divide_exact",
    "DirichletCharacter",
    "Eigensystem",
    "classify_sym3",
    "is_sym3_quartic",
    "match_lift",
    "normalize",
    "slope",
    "stabilizations",
    "sym3_lift",
    "twist",
    "twist_gl2",
    "sym3_level",
    "scan_congruences",
]
