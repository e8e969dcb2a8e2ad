"""Random graded cochain complexes with known cohomology.

Each grade block is a direct sum of ``h[k]`` one-dimensional pieces in degree k
and ``p[k]`` acyclic pieces ``k -> k+1`` (identity), after which every degree is
hit by a random invertible integer change of basis.  The cohomology of the
result is ``h`` grade by grade, whatever the basis change.
"""
from __future__ import annotations

import random
from fractions import Fraction

import sympy

from htschur.complexes import ChainComplex


def _random_invertible(rng: random.Random, n: int) -> sympy.Matrix:
    lower = sympy.eye(n)
    upper = sympy.eye(n)
    for i in range(n):
        upper[i, i] = rng.choice((1, -1, 2))
        for j in range(i):
            lower[i, j] = rng.randint(-2, 2)
            upper[j, i] = rng.randint(-2, 2)
    return lower * upper


def random_graded_complex(rng: random.Random, top: int = 3, grades=(0, 1, 2)):
    """Return ``(complex, expected)`` with ``expected[grade][k] = dim H^k``."""
    # per grade: singles h[k] and acyclic pairs p[k] for k -> k+1
    layout = {}
    for g in grades:
        h = [rng.randint(0, 2) for _ in range(top + 1)]
        p = [rng.randint(0, 2) for _ in range(top)] + [0]
        layout[g] = (h, p)

    bases = {k: [] for k in range(top + 1)}
    gradings = {k: [] for k in range(top + 1)}
    block_pos = {}  # (grade, k) -> list of positions in bases[k]
    for g, (h, p) in layout.items():
        for k in range(top + 1):
            n = h[k] + p[k] + (p[k - 1] if k else 0)
            start = len(bases[k])
            bases[k].extend(f"g{g}d{k}b{i}" for i in range(n))
            gradings[k].extend([g] * n)
            block_pos[(g, k)] = list(range(start, start + n))

    changes = {}
    for (g, k), pos in block_pos.items():
        m = _random_invertible(rng, len(pos)) if pos else sympy.zeros(0, 0)
        changes[(g, k)] = (m, m.inv() if pos else m)

    diffs = {k: {} for k in range(top)}
    for g, (h, p) in layout.items():
        for k in range(top):
            src, tgt = block_pos[(g, k)], block_pos[(g, k + 1)]
            if not src or not tgt:
                continue
            d = sympy.zeros(len(tgt), len(src))
            # sources of pairs_k sit after the singles; their targets sit at the end of degree k+1
            for i in range(p[k]):
                d[h[k + 1] + p[k + 1] + i, h[k] + i] = 1
            d = changes[(g, k + 1)][0] * d * changes[(g, k)][1]
            for i in range(len(tgt)):
                for j in range(len(src)):
                    if d[i, j] != 0:
                        diffs[k][(tgt[i], src[j])] = _frac(d[i, j])
    expected = {g: {k: h[k] for k in range(top + 1)} for g, (h, _) in layout.items()}
    return ChainComplex(bases, diffs, gradings), expected


def _frac(x) -> Fraction:
    r = sympy.Rational(x)
    return Fraction(int(r.p), int(r.q))
