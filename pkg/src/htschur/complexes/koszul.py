"""Self-Ext of the origin in affine d-space through the Koszul resolution.

``R = k[x_1..x_d]`` and ``k = R/(x_1..x_d)``.  The Koszul complex
``K_j = R (x) Lambda^j(k^d)`` with ``d(e_I) = sum_t (-1)^t x_{i_t} e_{I - i_t}``
resolves ``k``.  We verify the resolution is exact in every internal
polynomial degree up to a bound, then apply ``Hom_R(-, k)``: that sets every
``x_i`` to zero, and the Ext groups are the cohomology of the result.
"""
from __future__ import annotations

from itertools import combinations, combinations_with_replacement

from .chain import ChainComplex


class ResolutionError(ArithmeticError):
    pass


def _monomials(d: int, degree: int) -> list[tuple]:
    out = []
    for combo in combinations_with_replacement(range(d), degree):
        exp = [0] * d
        for i in combo:
            exp[i] += 1
        out.append(tuple(exp))
    return out


def koszul_differential(d: int, j: int) -> dict:
    """``d_j: K_j -> K_{j-1}`` as ``{(J_minus, I): {variable: sign}}``."""
    out: dict = {}
    for I in combinations(range(d), j):
        for t, i in enumerate(I):
            rest = I[:t] + I[t + 1:]
            out.setdefault((rest, I), {})[i] = -1 if t % 2 else 1
    return out


def koszul_strand(d: int, degree: int) -> ChainComplex:
    """Internal-degree ``degree`` strand of the resolution, as a cochain complex.

    The homological index j is placed in cohomological degree ``-j``.  Basis
    elements are ``(monomial, I)`` with ``|monomial| + |I| = degree``.
    """
    bases = {}
    for j in range(0, min(d, degree) + 1):
        bases[-j] = [(m, I) for I in combinations(range(d), j) for m in _monomials(d, degree - j)]
    diffs = {}
    for j in range(1, min(d, degree) + 1):
        src = bases[-j]
        tgt = {b: n for n, b in enumerate(bases[-(j - 1)])}
        mat = {}
        for col, (mono, I) in enumerate(src):
            for t, i in enumerate(I):
                rest = I[:t] + I[t + 1:]
                new = list(mono)
                new[i] += 1
                row = tgt[(tuple(new), rest)]
                mat[(row, col)] = -1 if t % 2 else 1
        diffs[-j] = mat
    return ChainComplex(bases, diffs)


def check_resolution(d: int, max_degree: int | None = None) -> None:
    """Raise unless the Koszul complex is exact except ``H_0 = k`` in degree 0."""
    top = d + 1 if max_degree is None else max_degree
    for degree in range(top + 1):
        h = koszul_strand(d, degree).cohomology()
        expected = {k: 0 for k in h}
        if degree == 0:
            expected[0] = 1
        if h != expected:
            raise ResolutionError(f"Koszul strand of degree {degree} in dimension {d} has homology {h}")


def koszul_ext_point(d: int, check: bool = True) -> tuple[int, ...]:
    """Dimensions of ``Ext^k_R(k, k)`` for ``k = 0..d``."""
    if d < 0:
        raise ValueError("dimension must be nonnegative")
    if check:
        check_resolution(d)
    origin = (0,) * d
    bases = {j: list(combinations(range(d), j)) for j in range(d + 1)}
    diffs = {}
    for j in range(d):
        # Hom_R(K_j, k) has basis e_I^*; the dual of d_{j+1} acts with every
        # linear entry x_i evaluated at the origin
        src = {I: n for n, I in enumerate(bases[j])}
        tgt = {I: n for n, I in enumerate(bases[j + 1])}
        mat = {}
        for (rest, I), coeffs in koszul_differential(d, j + 1).items():
            value = sum(c * origin[i] for i, c in coeffs.items())
            if value:
                mat[(tgt[I], src[rest])] = value
        diffs[j] = mat
    dims = ChainComplex(bases, diffs).cohomology()
    return tuple(dims[j] for j in range(d + 1))
