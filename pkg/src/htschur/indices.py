"""Schur index pipelines: vacuum characters and their Weyl integrals.

The vector multiplet contributes Sym^• of ``g(K)/g(O) + (z g(O))*`` with both
towers fermionic.  Hypermultiplets in ``V`` contribute, for every weight
``beta`` of ``V + V*``, a factor ``1 / prod_{n>=0} (1 - c q^(n+1/2) s^beta)``.
``c = -1`` is the sign convention of the published closed-form index;
``c = +1`` is what literally counting bosonic generators produces.  The two
differ by ``q^(1/2) -> -q^(1/2)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .gradedmod import GradedModule, build_dual_positive, build_loop_adjoint_neg, build_matter_modules, sym_character
from .qlaurent import QSeries, pochhammer
from .rootdata import RepSpec, RootDatum, weyl_integrate


class IntegralityError(ArithmeticError):
    """A Weyl-integrated coefficient came out non-integral."""


@dataclass(frozen=True)
class TheorySpec:
    group: RootDatum
    matter: RepSpec | None = None
    matter_sign: int = -1

    def __post_init__(self):
        if self.matter_sign not in (1, -1):
            raise ValueError("matter_sign must be +1 or -1")
        if self.matter is not None and self.matter.weights and self.matter.rank != self.group.rank:
            raise ValueError(
                f"matter weights have rank {self.matter.rank} but {self.group.name} has rank {self.group.rank}"
            )

    @property
    def has_matter(self) -> bool:
        return self.matter is not None and self.matter.dimension > 0


def _cutoff(half_order: int) -> Fraction:
    return Fraction(half_order, 2)


def vector_multiplet_module(g: RootDatum, half_order: int) -> GradedModule:
    cut = _cutoff(half_order)
    return build_loop_adjoint_neg(g, cutoff=cut, F=1) + build_dual_positive(g, cutoff=cut, F=1)


def matter_module(v: RepSpec, half_order: int) -> GradedModule:
    functionals, quotient = build_matter_modules(v, _cutoff(half_order))
    return functionals + quotient


def hypermultiplet_factor(v: RepSpec, half_order: int, sign: int = -1) -> QSeries:
    """``1 / prod_{beta in V + V*} (c q^(1/2) s^beta; q)_inf`` truncated."""
    denom = QSeries.one(v.rank, half_order)
    for beta in v.doubled().expanded():
        denom = denom * pochhammer(beta, Fraction(1, 2), half_order, sign)
    return denom.inverse()


def vacuum_character(t: TheorySpec, half_order: int) -> QSeries:
    """The fugacity-resolved character before projecting to G-invariants."""
    chi = sym_character(vector_multiplet_module(t.group, half_order), half_order)
    if t.has_matter:
        chi = chi * hypermultiplet_factor(t.matter, half_order, t.matter_sign)
    return chi


def check_integral(s: QSeries, what: str = "index") -> QSeries:
    for k, v in enumerate(s.scalars()):
        if v.denominator != 1:
            raise IntegralityError(f"{what}: coefficient of q^({k}/2) is {v}, not an integer")
    return s


def schur_index_pure(g: RootDatum, half_order: int) -> QSeries:
    if half_order < 0:
        raise ValueError("half_order must be nonnegative")
    return check_integral(weyl_integrate(vacuum_character(TheorySpec(g), half_order), g), f"pure {g.name} index")


def schur_index_matter(t: TheorySpec, half_order: int) -> QSeries:
    if not t.has_matter:
        raise ValueError("schur_index_matter needs a nonempty matter representation")
    if half_order < 0:
        raise ValueError("half_order must be nonnegative")
    return check_integral(weyl_integrate(vacuum_character(t, half_order), t.group), f"{t.group.name} index with matter")


def schur_index(t: TheorySpec, half_order: int) -> QSeries:
    return schur_index_matter(t, half_order) if t.has_matter else schur_index_pure(t.group, half_order)
