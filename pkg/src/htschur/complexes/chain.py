"""Finite cochain complexes with exact rational differentials."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import SparseMatrix, matmul, rank


class ComplexError(ValueError):
    pass


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


@dataclass
class ChainComplex:
    """Cochain complex ``C^k --d_k--> C^{k+1}``.

    ``bases[k]`` is the ordered list of basis labels in degree k.
    ``differentials[k]`` is the sparse matrix of ``d_k`` with rows indexing
    ``C^{k+1}`` and columns indexing ``C^k``.  ``gradings``, when given,
    assigns a hashable grade to each basis element; differentials must
    preserve it, and cohomology is then reported grade by grade.
    """

    bases: dict
    differentials: dict = field(default_factory=dict)
    gradings: dict | None = None
    check: bool = True

    def __post_init__(self):
        self.bases = {k: list(v) for k, v in self.bases.items()}
        self.differentials = {
            k: {key: Fraction(v) for key, v in d.items() if v} for k, d in self.differentials.items()
        }
        if self.gradings is not None:
            self.gradings = {k: list(v) for k, v in self.gradings.items()}
        if self.check:
            self.validate()

    # -- structure --------------------------------------------------------
    def degrees(self) -> list[int]:
        return sorted(self.bases)

    def dim(self, k: int) -> int:
        return len(self.bases.get(k, ()))

    def d(self, k: int) -> SparseMatrix:
        return self.differentials.get(k, {})

    def validate(self) -> None:
        for k, mat in self.differentials.items():
            nr, nc = self.dim(k + 1), self.dim(k)
            for (i, j) in mat:
                if not (0 <= i < nr and 0 <= j < nc):
                    raise ComplexError(f"d_{k} entry {(i, j)} outside shape {nr}x{nc}")
            if self.gradings is not None:
                for (i, j) in mat:
                    if self.gradings[k + 1][i] != self.gradings[k][j]:
                        raise ComplexError(f"d_{k} does not preserve the grading at {(i, j)}")
        for k in self.differentials:
            if k + 1 in self.differentials and matmul(self.d(k + 1), self.d(k)):
                raise ComplexError(f"d_{k + 1} o d_{k} != 0")
        if self.gradings is not None:
            for k, basis in self.bases.items():
                if len(self.gradings.get(k, ())) != len(basis):
                    raise ComplexError(f"gradings in degree {k} do not match the basis")

    def square_is_zero(self) -> bool:
        return all(not matmul(self.d(k + 1), self.d(k)) for k in self.differentials)

    def euler_characteristic(self) -> int:
        return sum(_sign(k) * self.dim(k) for k in self.bases)

    def permuted(self, perms: dict) -> ChainComplex:
        """Reorder each degree's basis; ``perms[k][new] = old``."""
        inv = {k: {old: new for new, old in enumerate(p)} for k, p in perms.items()}

        def idx(k, i):
            return inv[k][i] if k in inv else i

        bases = {k: [b[p] for p in perms[k]] if k in perms else list(b) for k, b in self.bases.items()}
        grads = None
        if self.gradings is not None:
            grads = {k: [g[p] for p in perms[k]] if k in perms else list(g) for k, g in self.gradings.items()}
        diffs = {
            k: {(idx(k + 1, i), idx(k, j)): v for (i, j), v in d.items()} for k, d in self.differentials.items()
        }
        return ChainComplex(bases, diffs, grads)

    # -- cohomology -------------------------------------------------------
    def _block_indices(self) -> dict:
        blocks: dict = defaultdict(lambda: defaultdict(list))
        for k, basis in self.bases.items():
            grades = self.gradings[k] if self.gradings is not None else [None] * len(basis)
            for i, g in enumerate(grades):
                blocks[g][k].append(i)
        return blocks

    def graded_cohomology(self) -> dict:
        """``{grade: {degree: dim H^degree}}``; a single ``None`` grade if ungraded."""
        out = {}
        for grade, by_deg in self._block_indices().items():
            ranks = {}
            for k in self.differentials:
                rows, cols = by_deg.get(k + 1, []), by_deg.get(k, [])
                if not rows or not cols:
                    ranks[k] = 0
                    continue
                rpos = {r: n for n, r in enumerate(rows)}
                cpos = {c: n for n, c in enumerate(cols)}
                sub = {(rpos[i], cpos[j]): v for (i, j), v in self.d(k).items() if i in rpos and j in cpos}
                ranks[k] = rank(sub, len(rows), len(cols))
            out[grade] = {
                k: len(by_deg.get(k, [])) - ranks.get(k, 0) - ranks.get(k - 1, 0) for k in sorted(self.bases)
            }
        return out

    def cohomology(self) -> dict:
        """``{degree: dim H^degree}`` summed over grades."""
        total: dict[int, int] = {k: 0 for k in sorted(self.bases)}
        for dims in self.graded_cohomology().values():
            for k, v in dims.items():
                total[k] += v
        return total

    def betti(self) -> tuple:
        dims = self.cohomology()
        if not dims:
            return ()
        return tuple(dims.get(k, 0) for k in range(min(dims), max(dims) + 1))

    def graded_euler(self, from_cohomology: bool = True) -> dict:
        """``{grade: sum_k (-1)^k dim}`` from cohomology or from the chains."""
        if from_cohomology:
            return {g: sum(_sign(k) * v for k, v in dims.items()) for g, dims in self.graded_cohomology().items()}
        out: dict = defaultdict(int)
        for g, by_deg in self._block_indices().items():
            for k, idx in by_deg.items():
                out[g] += _sign(k) * len(idx)
        return dict(out)


def cohomology(c: ChainComplex) -> dict:
    return c.cohomology()
