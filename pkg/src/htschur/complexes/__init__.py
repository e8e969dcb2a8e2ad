"""Chain complexes with exact cohomology: Chevalley-Eilenberg, Koszul and
abelian BRST."""
from __future__ import annotations

from .brst import NonAbelianError, brst_complex_abelian, cohomology_table, euler_series
from .chain import ChainComplex, ComplexError, cohomology
from .koszul import ResolutionError, check_resolution, koszul_ext_point
from .lie import (
    FiniteLieAlgebra,
    LieAlgebraError,
    Representation,
    RepresentationError,
    builtin_lie_algebra,
    ce_complex,
    heisenberg,
    sl2,
    sl2_irrep,
    truncated_nilpotent_current,
)
from .linalg import bareiss_rank, dense_rank, rank, sparse_rank

__all__ = [
    "ChainComplex", "ComplexError", "FiniteLieAlgebra", "LieAlgebraError", "NonAbelianError",
    "Representation", "RepresentationError", "ResolutionError", "bareiss_rank", "brst_complex_abelian",
    "builtin_lie_algebra", "ce_complex", "check_resolution", "cohomology", "cohomology_table",
    "dense_rank", "euler_series", "heisenberg", "koszul_ext_point", "rank", "sl2", "sl2_irrep",
    "sparse_rank", "truncated_nilpotent_current",
]
