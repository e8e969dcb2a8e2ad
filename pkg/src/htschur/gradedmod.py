"""Finite truncations of graded G-modules and the characters of their Sym^•.

Every generator carries a positive loop weight (stored as ``qhalf``, twice
the q-weight), a torus weight, and a cohomological degree.  Odd degree means
fermionic.  The character of the free graded-commutative algebra on a module
absorbs the cohomological sign ``(-1)^F``:

* fermionic generator ``x`` contributes ``(1 - x)``
* bosonic generator ``x`` contributes ``1 / (1 - x)``

Builders take an explicit ``cutoff`` in units of q.  :func:`sym_character`
refuses to compute past the cutoff, since missing generators would silently
corrupt the high coefficients.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .qlaurent import LaurentPoly, QSeries, as_fraction, weight_add, weight_neg, weight_scale
from .rootdata import RepSpec, RootDatum


class CutoffError(ValueError):
    """The module was truncated below the requested series order."""


@dataclass(frozen=True)
class GradedGenerator:
    qhalf: int
    fugacity: tuple
    cohom_degree: int
    label: str = ""

    def __post_init__(self):
        if self.qhalf <= 0:
            raise ValueError(f"generator {self.label or ''} must have positive q-weight")
        object.__setattr__(self, "fugacity", tuple(int(x) for x in self.fugacity))

    @property
    def q_weight(self) -> Fraction:
        return Fraction(self.qhalf, 2)

    @property
    def fermionic(self) -> bool:
        return self.cohom_degree % 2 == 1


@dataclass(frozen=True)
class GradedModule:
    generators: tuple
    q_cutoff: Fraction
    rank: int

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "q_cutoff", as_fraction(self.q_cutoff))
        for g in self.generators:
            if len(g.fugacity) != self.rank:
                raise ValueError(f"generator {g} does not have rank {self.rank}")
            if g.q_weight > self.q_cutoff:
                raise ValueError(f"generator {g} exceeds the cutoff {self.q_cutoff}")

    def __len__(self) -> int:
        return len(self.generators)

    def __add__(self, other: GradedModule) -> GradedModule:
        """Direct sum; the result is only complete up to the smaller cutoff."""
        if self.rank != other.rank:
            raise ValueError("cannot sum modules of different rank")
        cut = min(self.q_cutoff, other.q_cutoff)
        gens = [g for g in self.generators + other.generators if g.q_weight <= cut]
        return GradedModule(tuple(gens), cut, self.rank)

    @classmethod
    def empty(cls, rank: int, cutoff=0) -> GradedModule:
        return cls((), as_fraction(cutoff), rank)


def _cut(cutoff) -> Fraction:
    c = as_fraction(cutoff)
    if c < 0 or (2 * c).denominator != 1:
        raise ValueError(f"cutoff must be a nonnegative multiple of 1/2, got {cutoff}")
    return c


def _tower(weights: RepSpec, start: int, cutoff: Fraction, F: int, label: str, offset=Fraction(0)):
    gens = []
    n = start
    while n + offset <= cutoff:
        for w in weights.expanded():
            gens.append(GradedGenerator(int(2 * (n + offset)), w, F, f"{label}{n}"))
        n += 1
    return gens


def build_loop_adjoint_neg(g: RootDatum, adjoint_weights: RepSpec | None = None, cutoff=1, F: int = 1) -> GradedModule:
    """g(K)/g(O): modes ``X z^-n`` for ``n >= 1`` at q-weight n."""
    return build_shifted_adjoint(g, 1, cutoff, F, adjoint_weights)


def build_dual_positive(g: RootDatum, adjoint_weights: RepSpec | None = None, cutoff=1, F: int = 1) -> GradedModule:
    """(z g(O))*: functionals on ``X z^n``, ``n >= 1``, with negated fugacities."""
    cut = _cut(cutoff)
    weights = (adjoint_weights or g.adjoint_weights()).dual()
    return GradedModule(tuple(_tower(weights, 1, cut, F, "c")), cut, g.rank)


def build_shifted_adjoint(g: RootDatum, shift: int = 1, cutoff=1, F: int = 1,
                          adjoint_weights: RepSpec | None = None) -> GradedModule:
    """Adjoint tower with modes ``n = shift .. cutoff``; ``shift=2`` gives g(K)/z^-1 g(O)."""
    if shift < 1:
        raise ValueError("the tower must start at a positive mode")
    cut = _cut(cutoff)
    weights = adjoint_weights or g.adjoint_weights()
    return GradedModule(tuple(_tower(weights, shift, cut, F, "b")), cut, g.rank)


def build_matter_modules(v: RepSpec, cutoff) -> tuple[GradedModule, GradedModule]:
    """Functionals on V(O) and the quotient V(K)/V(O), both bosonic.

    V(O)* has generators at q-weight ``n + 1/2`` (n >= 0) with weights ``-beta``;
    V(K)/V(O) has generators at ``n - 1/2`` (n >= 1) with weights ``beta``, its
    cohomological degree already moved to 0.
    """
    cut = _cut(cutoff)
    half = Fraction(1, 2)
    functionals = _tower(v.dual(), 0, cut, 0, "gamma", offset=half)
    quotient = _tower(v, 1, cut, 0, "beta", offset=-half)
    return GradedModule(tuple(functionals), cut, v.rank), GradedModule(tuple(quotient), cut, v.rank)


def _check_cutoff(m: GradedModule, half_order: int) -> None:
    if half_order < 0:
        raise ValueError("half_order must be nonnegative")
    if 2 * m.q_cutoff < half_order:
        raise CutoffError(
            f"module truncated at q^{m.q_cutoff} cannot give coefficients through q^({half_order}/2)"
        )


def sym_character(m: GradedModule, half_order: int) -> QSeries:
    _check_cutoff(m, half_order)
    out = QSeries.one(m.rank, half_order)
    for g in m.generators:
        if g.qhalf > half_order:
            continue
        if g.fermionic:
            out = out.times_one_minus(g.qhalf, g.fugacity)
        else:
            out = out.divide_one_minus(g.qhalf, g.fugacity)
    return out


def brute_force_character(m: GradedModule, half_order: int) -> QSeries:
    """Character of Sym^•(m) by listing every monomial of q-weight within range.

    Fermionic generators are taken as subsets and bosonic ones as multisets;
    each monomial contributes ``(-1)^(sum F) q^(sum qw) s^(sum fugacity)``.
    """
    _check_cutoff(m, half_order)
    gens = [g for g in m.generators if g.qhalf <= half_order]
    acc: dict[tuple, int] = defaultdict(int)
    zero = (0,) * m.rank

    def walk(i: int, qh: int, fug: tuple, sign: int) -> None:
        if i == len(gens):
            acc[(qh, fug)] += sign
            return
        walk(i + 1, qh, fug, sign)
        g = gens[i]
        top = 1 if g.fermionic else (half_order - qh) // g.qhalf
        for k in range(1, top + 1):
            if qh + k * g.qhalf > half_order:
                break
            s = -sign if (k * g.cohom_degree) % 2 else sign
            walk(i + 1, qh + k * g.qhalf, weight_add(fug, weight_scale(g.fugacity, k)), s)

    walk(0, 0, zero, 1)
    poly: dict[int, dict] = defaultdict(dict)
    for (qh, fug), c in acc.items():
        if c:
            poly[qh][fug] = c
    return QSeries.from_polynomial({k: LaurentPoly(t, m.rank) for k, t in poly.items()}, m.rank, half_order)


def negate_module(m: GradedModule) -> GradedModule:
    """The same module with every fugacity negated."""
    gens = tuple(GradedGenerator(g.qhalf, weight_neg(g.fugacity), g.cohom_degree, g.label) for g in m.generators)
    return GradedModule(gens, m.q_cutoff, m.rank)
