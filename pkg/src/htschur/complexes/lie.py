"""Finite-dimensional Lie algebras and their Chevalley-Eilenberg complexes."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .chain import ChainComplex


class LieAlgebraError(ValueError):
    pass


class RepresentationError(ValueError):
    pass


def _add_grade(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def _neg_grade(a: tuple) -> tuple:
    return tuple(-x for x in a)


@dataclass
class FiniteLieAlgebra:
    """Lie algebra with basis ``x_0..x_{d-1}`` and brackets
    ``[x_i, x_j] = sum_k c[(i, j)][k] x_k``.

    ``brackets`` only needs entries for ``i < j``; the rest follows from
    antisymmetry.  ``gradings`` optionally attaches an integer tuple to each
    basis element (additive under the bracket).  The Jacobi identity is
    checked exactly on construction.
    """

    labels: list
    brackets: dict
    gradings: list | None = None

    def __post_init__(self):
        self.labels = list(self.labels)
        d = len(self.labels)
        table: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), vec in self.brackets.items():
            if not (0 <= i < d and 0 <= j < d):
                raise LieAlgebraError(f"bracket index {(i, j)} out of range")
            vec = {k: Fraction(v) for k, v in vec.items() if v}
            if i == j:
                if vec:
                    raise LieAlgebraError(f"[x_{i}, x_{i}] must vanish")
                continue
            if (j, i) in table:
                if table[(j, i)] != {k: -v for k, v in vec.items()}:
                    raise LieAlgebraError(f"brackets ({i},{j}) and ({j},{i}) are not antisymmetric")
                continue
            table[(i, j)] = vec
            table[(j, i)] = {k: -v for k, v in vec.items()}
        self.brackets = {k: v for k, v in table.items() if v}
        if self.gradings is not None:
            self.gradings = [tuple(g) for g in self.gradings]
            if len(self.gradings) != d:
                raise LieAlgebraError("one grading per basis element is required")
            for (i, j), vec in self.brackets.items():
                want = _add_grade(self.gradings[i], self.gradings[j])
                for k in vec:
                    if self.gradings[k] != want:
                        raise LieAlgebraError(f"[x_{i}, x_{j}] is not homogeneous")
        self._check_jacobi()

    @property
    def dimension(self) -> int:
        return len(self.labels)

    def bracket(self, i: int, j: int) -> dict:
        return self.brackets.get((i, j), {})

    def bracket_vectors(self, u: dict, v: dict) -> dict:
        out: dict[int, Fraction] = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self.bracket(i, j).items():
                    out[k] = out.get(k, 0) + a * b * c
        return {k: x for k, x in out.items() if x}

    def _check_jacobi(self) -> None:
        d = self.dimension
        for i, j, k in combinations(range(d), 3):
            total: dict[int, Fraction] = {}
            for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                inner = self.bracket(b, c)
                for m, v in self.bracket_vectors({a: Fraction(1)}, inner).items():
                    total[m] = total.get(m, 0) + v
            if any(total.values()):
                raise LieAlgebraError(f"Jacobi identity fails on ({i}, {j}, {k})")

    def is_abelian(self) -> bool:
        return not self.brackets

    def lower_central_series_dims(self) -> list[int]:
        """Dimensions of ``g, [g,g], [g,[g,g]], ...`` (the lower central series)."""
        from .linalg import rank

        dims = [self.dimension]
        current = [{i: Fraction(1)} for i in range(self.dimension)]
        while True:
            nxt = []
            for u in [{i: Fraction(1)} for i in range(self.dimension)]:
                for v in current:
                    w = self.bracket_vectors(u, v)
                    if w:
                        nxt.append(w)
            mat = {(r, k): x for r, w in enumerate(nxt) for k, x in w.items()}
            dim = rank(mat, len(nxt), self.dimension) if nxt else 0
            dims.append(dim)
            if dim == 0 or dim == dims[-2]:
                return dims
            current = nxt


@dataclass
class Representation:
    """Finite representation: ``action[i]`` is the matrix of ``x_i`` as
    ``{(row, col): value}`` on a space of dimension ``dim``."""

    dim: int
    action: list
    gradings: list | None = None

    def __post_init__(self):
        self.action = [{k: Fraction(v) for k, v in m.items() if v} for m in self.action]
        if self.gradings is not None:
            self.gradings = [tuple(g) for g in self.gradings]

    @classmethod
    def trivial(cls, lie: FiniteLieAlgebra) -> Representation:
        grade = None
        if lie.gradings is not None:
            n = len(lie.gradings[0]) if lie.gradings else 0
            grade = [(0,) * n]
        return cls(1, [{} for _ in range(lie.dimension)], grade)


def _matmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for (i, k), v in a.items():
        for (k2, j), w in b.items():
            if k == k2:
                out[(i, j)] = out.get((i, j), 0) + v * w
    return {key: v for key, v in out.items() if v}


def check_representation(lie: FiniteLieAlgebra, rep: Representation) -> None:
    if len(rep.action) != lie.dimension:
        raise RepresentationError("one action matrix per basis element is required")
    for i in range(lie.dimension):
        for j in range(i + 1, lie.dimension):
            lhs: dict = {}
            for k, c in lie.bracket(i, j).items():
                for key, v in rep.action[k].items():
                    lhs[key] = lhs.get(key, 0) + c * v
            ab = _matmul(rep.action[i], rep.action[j])
            ba = _matmul(rep.action[j], rep.action[i])
            rhs = dict(ab)
            for key, v in ba.items():
                rhs[key] = rhs.get(key, 0) - v
            lhs = {k: v for k, v in lhs.items() if v}
            rhs = {k: v for k, v in rhs.items() if v}
            if lhs != rhs:
                raise RepresentationError(f"rho([x_{i}, x_{j}]) != [rho(x_{i}), rho(x_{j})]")


# -- built-in algebras ---------------------------------------------------------

def sl2() -> FiniteLieAlgebra:
    """Basis ``e, h, f`` with fugacity weights ``+2, 0, -2``."""
    return FiniteLieAlgebra(
        ["e", "h", "f"],
        {(1, 0): {0: 2}, (1, 2): {2: -2}, (0, 2): {1: 1}},
        [(2,), (0,), (-2,)],
    )


def heisenberg() -> FiniteLieAlgebra:
    return FiniteLieAlgebra(["x", "y", "z"], {(0, 1): {2: 1}})


def abelian(d: int, gradings: list | None = None) -> FiniteLieAlgebra:
    return FiniteLieAlgebra([f"t{i}" for i in range(d)], {}, gradings)


def builtin_lie_algebra(name: str) -> FiniteLieAlgebra:
    key = name.lower()
    if key in ("sl2", "psl2"):
        return sl2()
    if key == "u1":
        return abelian(1, [(0,)])
    if key == "trivial":
        return abelian(0, [])
    if key == "heisenberg":
        return heisenberg()
    raise KeyError(f"no built-in Lie algebra {name!r}")


def sl2_irrep(n: int) -> Representation:
    """The (n+1)-dimensional irreducible sl2 module, basis ``v_k`` of weight ``n - 2k``."""
    e: dict = {}
    h: dict = {}
    f: dict = {}
    for k in range(n + 1):
        h[(k, k)] = n - 2 * k
        if k + 1 <= n:
            f[(k + 1, k)] = k + 1
            e[(k, k + 1)] = n - k
    return Representation(n + 1, [e, h, f], [(n - 2 * k,) for k in range(n + 1)])


def truncated_nilpotent_current(base: FiniteLieAlgebra | str, m: int) -> FiniteLieAlgebra:
    """``z g[z] / z^(m+1) g[z]``: basis ``X_a z^i`` for ``i = 1..m``.

    The bracket is ``[X z^i, Y z^j] = [X, Y] z^(i+j)``, dropped past ``z^m``.
    Gradings are ``(2i,) + grade(X_a)``, the first slot being the loop
    weight in half-units.
    """
    if isinstance(base, str):
        base = builtin_lie_algebra(base)
    if m < 1:
        raise ValueError("m must be at least 1")
    d = base.dimension
    idx = lambda i, a: (i - 1) * d + a  # noqa: E731
    labels = [f"{base.labels[a]}z^{i}" for i in range(1, m + 1) for a in range(d)]
    base_grades = base.gradings if base.gradings is not None else [()] * d
    gradings = [(2 * i,) + tuple(base_grades[a]) for i in range(1, m + 1) for a in range(d)]
    brackets = {}
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            if i + j > m:
                continue
            for (a, b), vec in base.brackets.items():
                brackets[(idx(i, a), idx(j, b))] = {idx(i + j, c): v for c, v in vec.items()}
    return FiniteLieAlgebra(labels, brackets, gradings)


# -- Chevalley-Eilenberg ---------------------------------------------------------

def _sorted_sign(seq: list) -> tuple[int, tuple] | None:
    """Sort distinct indices, returning (sign of the permutation, sorted tuple)."""
    if len(set(seq)) != len(seq):
        return None
    arr = list(seq)
    sign = 1
    for i in range(len(arr)):
        for j in range(len(arr) - 1 - i):
            if arr[j] > arr[j + 1]:
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
                sign = -sign
    return sign, tuple(arr)


def ce_complex(lie: FiniteLieAlgebra, module: Representation | None = None,
               max_degree: int | None = None) -> ChainComplex:
    """Cochains ``Hom(Lambda^k g, M)`` with the Chevalley-Eilenberg differential

    ``(d w)(x_0..x_k) = sum_i (-1)^i x_i . w(..^i..)
    + sum_{i<j} (-1)^(i+j) w([x_i, x_j], ..^i..^j..)``.

    Basis of ``C^k`` is ``(I, m)`` for sorted k-subsets ``I`` and module
    basis index ``m``, meaning the cochain ``e^I (x) v_m``.
    """
    rep = module or Representation.trivial(lie)
    check_representation(lie, rep)
    d = lie.dimension
    top = d if max_degree is None else min(d, max_degree)
    graded = lie.gradings is not None and (module is None or rep.gradings is not None)

    bases: dict[int, list] = {}
    gradings: dict[int, list] = {}
    for k in range(top + 1):
        basis = [(I, m) for I in combinations(range(d), k) for m in range(rep.dim)]
        bases[k] = basis
        if graded:
            ng = len(rep.gradings[0]) if rep.gradings else 0
            gl = []
            for I, m in basis:
                g = tuple(rep.gradings[m]) if rep.gradings else (0,) * ng
                for i in I:
                    g = _add_grade(g, _neg_grade(lie.gradings[i]))
                gl.append(g)
            gradings[k] = gl

    diffs: dict[int, dict] = {}
    for k in range(top):
        src = {b: n for n, b in enumerate(bases[k])}
        mat: dict = {}
        for row, (J, m_out) in enumerate(bases[k + 1]):
            # module-action term
            for pos, j in enumerate(J):
                rest = J[:pos] + J[pos + 1:]
                sign = -1 if pos % 2 else 1
                for (r, c), v in rep.action[j].items():
                    if r == m_out:
                        col = src[(rest, c)]
                        mat[(row, col)] = mat.get((row, col), 0) + sign * v
            # bracket term
            for a, b in combinations(range(len(J)), 2):
                rest = [J[t] for t in range(len(J)) if t not in (a, b)]
                sign = -1 if (a + b) % 2 else 1
                for c, coeff in lie.bracket(J[a], J[b]).items():
                    res = _sorted_sign([c] + rest)
                    if res is None:
                        continue
                    psign, I = res
                    col = src[(I, m_out)]
                    mat[(row, col)] = mat.get((row, col), 0) + sign * psign * coeff
        diffs[k] = mat
    return ChainComplex(bases, diffs, gradings if graded else None)
