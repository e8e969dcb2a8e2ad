"""Exact Schur indices, line-junction characters and the chain complexes
behind them, over q^(1/2)-graded Laurent series with rational coefficients."""
from __future__ import annotations

from .indices import TheorySpec, schur_index, schur_index_matter, schur_index_pure, vacuum_character
from .junctions import junction_index, parse_line
from .qlaurent import LaurentPoly, QSeries, pochhammer
from .rootdata import RepSpec, RootDatum, builtin_group

__version__ = "0.1.0"

__all__ = [
    "LaurentPoly", "QSeries", "RepSpec", "RootDatum", "TheorySpec", "builtin_group", "junction_index",
    "parse_line", "pochhammer", "schur_index", "schur_index_matter", "schur_index_pure", "vacuum_character",
]
