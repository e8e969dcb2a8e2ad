"""Truncated BRST complex of U(1) gauge theory with hypermultiplets.

Generators, for hypermultiplets of charges ``e_i`` (loop weights in q-units):

=========  ================  ==========  ========  ======
name       meaning           loop wt     charge    degree
=========  ================  ==========  ========  ======
x[i,k]     coordinate on V(O)   k + 1/2    -e_i      0
y[i,k]     coordinate on V*(O)  k + 1/2    +e_i      0
b[n]       g(K)/g(O), n >= 1    n          0         -1
c[n]       (z g(O))*, n >= 1    n          0         +1
=========  ================  ==========  ========  ======

The differential is the abelian BRST charge: ``d b[n]`` is the mode of the
moment map pairing with ``z^-n``, ``d x``/``d y`` is the action of the
positive current modes weighted by ``c``, and ``d c = 0`` (no ``Tr(bcc)``
term for an abelian group).  The ``c_0`` mode is absent: gauge invariance
under constant U(1) is imposed by keeping only charge-zero monomials.

Everything is truncated at total loop weight ``half_order/2``; the
differential preserves loop weight so the truncation is a subcomplex.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..qlaurent import QSeries
from ..rootdata import RootDatum
from .chain import ChainComplex


class NonAbelianError(ValueError):
    pass


@dataclass(frozen=True)
class BRSTGenerator:
    kind: str  # "x", "y", "b" or "c"
    flavor: int  # hypermultiplet index; -1 for ghosts
    mode: int
    qhalf: int
    charge: int
    degree: int

    @property
    def odd(self) -> bool:
        return self.degree % 2 == 1

    def __str__(self) -> str:
        if self.flavor < 0:
            return f"{self.kind}[{self.mode}]"
        return f"{self.kind}[{self.flavor},{self.mode}]"


_KIND_ORDER = {"b": 0, "c": 1, "x": 2, "y": 3}


def brst_generators(charges: list[int], half_order: int) -> list[BRSTGenerator]:
    """All generators of loop weight ``<= half_order/2`` in canonical order."""
    gens = []
    for i, e in enumerate(charges):
        k = 0
        while 2 * k + 1 <= half_order:
            gens.append(BRSTGenerator("x", i, k, 2 * k + 1, -e, 0))
            gens.append(BRSTGenerator("y", i, k, 2 * k + 1, e, 0))
            k += 1
    n = 1
    while 2 * n <= half_order:
        gens.append(BRSTGenerator("b", -1, n, 2 * n, 0, -1))
        gens.append(BRSTGenerator("c", -1, n, 2 * n, 0, 1))
        n += 1
    gens.sort(key=lambda g: (g.qhalf, _KIND_ORDER[g.kind], g.flavor))
    return gens


class _SuperAlgebra:
    """Free graded-commutative algebra on a fixed ordered generator list.

    Monomials are exponent tuples; polynomials are ``{monomial: Fraction}``.
    """

    def __init__(self, gens: list[BRSTGenerator]):
        self.gens = gens
        self.n = len(gens)
        self.index = {(g.kind, g.flavor, g.mode): i for i, g in enumerate(gens)}

    def unit(self, i: int, power: int = 1) -> tuple:
        e = [0] * self.n
        e[i] = power
        return tuple(e)

    def mono_mul(self, a: tuple, b: tuple) -> tuple[int, tuple | None]:
        sign = 1
        odd_a = [i for i in range(self.n) if a[i] and self.gens[i].odd]
        for j in range(self.n):
            if b[j] and self.gens[j].odd:
                if a[j]:
                    return 0, None
                # b's odd generator j moves left past a's odd generators above it
                if sum(1 for i in odd_a if i > j) % 2:
                    sign = -sign
        return sign, tuple(x + y for x, y in zip(a, b))

    def mul(self, p: dict, q: dict) -> dict:
        out: dict = {}
        for ma, ca in p.items():
            for mb, cb in q.items():
                s, m = self.mono_mul(ma, mb)
                if s:
                    out[m] = out.get(m, 0) + s * ca * cb
        return {m: c for m, c in out.items() if c}

    def gen(self, kind: str, flavor: int, mode: int) -> int | None:
        return self.index.get((kind, flavor, mode))


def _generator_differential(alg: _SuperAlgebra, g: BRSTGenerator, charges: list[int]) -> dict:
    out: dict = {}

    def add(coeff, *idx):
        if any(i is None for i in idx):
            return
        term = {alg.unit(idx[0]): Fraction(1)}
        for i in idx[1:]:
            term = alg.mul(term, {alg.unit(i): Fraction(1)})
        for m, c in term.items():
            out[m] = out.get(m, 0) + coeff * c

    if g.kind == "b":
        # moment map mode: sum_i e_i sum_{k+l=n-1} x[i,k] y[i,l]
        for i, e in enumerate(charges):
            for k in range(g.mode):
                add(e, alg.gen("x", i, k), alg.gen("y", i, g.mode - 1 - k))
    elif g.kind in ("x", "y"):
        e = charges[g.flavor]
        sign = -e if g.kind == "x" else e
        for n in range(1, g.mode + 1):
            add(sign, alg.gen("c", -1, n), alg.gen(g.kind, g.flavor, g.mode - n))
    return {m: c for m, c in out.items() if c}


def _apply_d(alg: _SuperAlgebra, dgen: list[dict], mono: tuple) -> dict:
    """Leibniz rule with Koszul signs for an odd derivation."""
    out: dict = {}
    parity = 0
    for i, a in enumerate(mono):
        if not a:
            continue
        if dgen[i]:
            prefix = tuple(mono[j] if j < i else 0 for j in range(alg.n))
            suffix = tuple(mono[j] if j > i else 0 for j in range(alg.n))
            middle = alg.mul({alg.unit(i, a - 1): Fraction(a)}, dgen[i])
            term = alg.mul(alg.mul({prefix: Fraction(1)}, middle), {suffix: Fraction(1)})
            sign = -1 if parity else 1
            for m, c in term.items():
                out[m] = out.get(m, 0) + sign * c
        if alg.gens[i].odd:
            parity ^= a & 1
    return {m: c for m, c in out.items() if c}


def _charge_zero_monomials(gens: list[BRSTGenerator], half_order: int) -> list[tuple]:
    out = []
    n = len(gens)
    exps = [0] * n

    def walk(i: int, qh: int, charge: int):
        if i == n:
            if charge == 0:
                out.append(tuple(exps))
            return
        g = gens[i]
        top = 1 if g.odd else (half_order - qh) // g.qhalf
        for k in range(0, top + 1):
            if qh + k * g.qhalf > half_order:
                break
            exps[i] = k
            walk(i + 1, qh + k * g.qhalf, charge + k * g.charge)
        exps[i] = 0

    walk(0, 0, 0)
    return out


def brst_complex_abelian(charges, half_order: int, group: RootDatum | None = None) -> ChainComplex:
    """Charge-zero, loop-weight-truncated BRST complex; grades are ``qhalf``.

    Basis labels are the monomials rendered as strings, e.g. ``"b[1]*c[1]"``.
    """
    if group is not None and (group.roots or group.rank != 1):
        raise NonAbelianError(f"BRST cohomology is only built for U(1), not {group.name}")
    charges = [int(e) for e in charges]
    if half_order < 0:
        raise ValueError("half_order must be nonnegative")
    gens = brst_generators(charges, half_order)
    alg = _SuperAlgebra(gens)
    dgen = [_generator_differential(alg, g, charges) for g in gens]

    monos = _charge_zero_monomials(gens, half_order)

    def degree(m):
        return sum(a * g.degree for a, g in zip(m, gens))

    def qweight(m):
        return sum(a * g.qhalf for a, g in zip(m, gens))

    by_deg: dict[int, list[tuple]] = {}
    for m in monos:
        by_deg.setdefault(degree(m), []).append(m)
    for k in by_deg:
        by_deg[k].sort(key=lambda m: (qweight(m), m))
    if not by_deg:
        by_deg[0] = []
    lo, hi = min(by_deg), max(by_deg)
    bases = {k: by_deg.get(k, []) for k in range(lo, hi + 1)}
    position = {k: {m: i for i, m in enumerate(b)} for k, b in bases.items()}

    diffs = {}
    for k in range(lo, hi):
        mat = {}
        for col, m in enumerate(bases[k]):
            for target, c in _apply_d(alg, dgen, m).items():
                row = position[k + 1].get(target)
                if row is None:
                    raise ArithmeticError(f"d({m}) left the truncated charge-zero space")
                mat[(row, col)] = c
        diffs[k] = mat

    def label(m):
        parts = []
        for a, g in zip(m, gens):
            if a:
                parts.append(str(g) if a == 1 else f"{g}^{a}")
        return "*".join(parts) or "1"

    return ChainComplex(
        {k: [label(m) for m in b] for k, b in bases.items()},
        diffs,
        {k: [qweight(m) for m in b] for k, b in bases.items()},
    )


def euler_series(c: ChainComplex, half_order: int, from_cohomology: bool = True) -> QSeries:
    """Graded Euler character of a complex graded by ``qhalf`` as a rank-0 series."""
    vals = [0] * (half_order + 1)
    for grade, chi in c.graded_euler(from_cohomology).items():
        if grade is None or not 0 <= grade <= half_order:
            continue
        vals[grade] += chi
    return QSeries.from_integers(vals, half_order)


def cohomology_table(c: ChainComplex) -> dict:
    """``{qhalf: {degree: dim H}}`` with zero rows dropped."""
    out = {}
    for grade, dims in sorted(c.graded_cohomology().items()):
        nz = {k: v for k, v in dims.items() if v}
        if nz:
            out[grade] = nz
    return out
