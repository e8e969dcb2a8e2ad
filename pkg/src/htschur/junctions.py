"""Junctions of 't Hooft and dyonic lines in pure PSL(2).

The minuscule orbit of coweight 1/2 is P^1 = G/B.  Endomorphisms of its
structure sheaf reduce to Borel-Weil-Bott cohomology of the bundle built
from ``Sym^•(z^-1 b [-1])`` (B-weights 0 and +2 at loop weight 1), tensored
with the characters of ``g(K)/z^-1 g(O)`` and ``(z g(O))*``.  Pairing with
the dualizing sheaf twists the bundle by ``O(-2)``.

Line bundles follow the convention ``H^0(O(n)) = {s^n, s^(n-2), ..., s^-n}``,
so that ``H^0`` of the bundle of ``z^-1 b`` is ``C + g``.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations

from .gradedmod import build_dual_positive, build_shifted_adjoint, sym_character
from .indices import TheorySpec, check_integral, vacuum_character
from .qlaurent import LaurentPoly, QSeries, as_fraction, pochhammer
from .rootdata import RootDatum, builtin_group, haar_measure, weyl_integrate

# B-weights of z^-1 b at loop weight 1
BOREL_WEIGHTS = (0, 2)
HALF = Fraction(1, 2)


class InadmissibleLineError(ValueError):
    pass


class LineKind(Enum):
    IDENTITY = "identity"
    STRUCTURE = "O"
    DUALIZING = "Omega"


@dataclass(frozen=True)
class LineOperatorLabel:
    kind: LineKind
    coweight: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "coweight", as_fraction(self.coweight))
        if self.kind is LineKind.IDENTITY and self.coweight:
            raise ValueError("the identity line has coweight 0")

    def __str__(self) -> str:
        if self.kind is LineKind.IDENTITY:
            return "1"
        return f"{self.kind.value}({self.coweight})"


IDENTITY_LINE = LineOperatorLabel(LineKind.IDENTITY)


def structure_sheaf(coweight=HALF) -> LineOperatorLabel:
    return LineOperatorLabel(LineKind.STRUCTURE, coweight)


def dualizing_sheaf(coweight=HALF) -> LineOperatorLabel:
    return LineOperatorLabel(LineKind.DUALIZING, coweight)


def parse_line(text: str) -> LineOperatorLabel:
    """Parse ``1``/``id``, ``O`` or ``Omega`` (coweight 1/2 implied)."""
    key = text.strip().lower()
    if key in ("1", "id", "identity"):
        return IDENTITY_LINE
    if key in ("o", "structure"):
        return structure_sheaf()
    if key in ("omega", "dualizing"):
        return dualizing_sheaf()
    raise InadmissibleLineError(f"unknown line operator {text!r}; use 1, O or Omega")


_SHEAF_PAIRS = {
    (structure_sheaf(), structure_sheaf()): 0,
    (structure_sheaf(), dualizing_sheaf()): -2,
}


def p1_line_bundle_cohomology(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Torus weights of ``H^0(P^1, O(n))`` and ``H^1(P^1, O(n))``."""
    if n >= 0:
        return tuple(range(n, -n - 1, -2)), ()
    if n == -1:
        return (), ()
    return (), tuple(range(-n - 2, n + 1, -2))


@dataclass(frozen=True)
class BWBTable:
    """Cohomology of ``G x_B Sym^k(z^-1 b [-1]) (x) O(twist)`` for each k.

    ``entries[k]`` lists ``(degree, weights)`` with the weights sorted in
    decreasing order; each entry sits at loop weight ``q^k``.
    """

    twist: int
    entries: dict

    def euler_character(self, half_order: int | None = None) -> QSeries:
        top = max(self.entries) if self.entries else 0
        n = 2 * top if half_order is None else half_order
        poly = {}
        for k, rows in self.entries.items():
            acc = LaurentPoly.zero(1)
            for degree, weights in rows:
                sign = -1 if degree % 2 else 1
                acc = acc + LaurentPoly.from_weights([(w,) for w in weights], 1) * sign
            poly[2 * k] = acc
        return QSeries.from_polynomial(poly, 1, n)


def borel_weil_table(twist: int) -> BWBTable:
    if twist not in (0, -2):
        raise ValueError(f"twist must be 0 (structure sheaf) or -2 (dualizing sheaf), got {twist}")
    entries = {}
    for k in range(len(BOREL_WEIGHTS) + 1):
        by_degree: dict[int, list[int]] = {}
        # Sym^k of an odd space is the k-th exterior power: one line per k-subset
        for subset in combinations(BOREL_WEIGHTS, k):
            h0, h1 = p1_line_bundle_cohomology(sum(subset) + twist)
            if h0:
                by_degree.setdefault(k, []).extend(h0)
            if h1:
                by_degree.setdefault(k + 1, []).extend(h1)
        entries[k] = [(d, tuple(sorted(w, reverse=True))) for d, w in sorted(by_degree.items())]
    return BWBTable(twist, entries)


def _check_pair(l1: LineOperatorLabel, l2: LineOperatorLabel, g: RootDatum) -> int | None:
    """Return the bundle twist for a sheaf pair, ``None`` for the identity pair."""
    if l1 == IDENTITY_LINE and l2 == IDENTITY_LINE:
        return None
    if g.name != "psl2":
        raise InadmissibleLineError(
            f"{g.name} has no minuscule coweight 1/2; only the identity pair is admissible"
        )
    try:
        return _SHEAF_PAIRS[(l1, l2)]
    except KeyError:
        raise InadmissibleLineError(f"junction ({l1}, {l2}) is not supported for psl2") from None


def junction_character(l1: LineOperatorLabel, l2: LineOperatorLabel, half_order: int,
                       group: RootDatum | None = None) -> QSeries:
    g = group or builtin_group("psl2")
    twist = _check_pair(l1, l2, g)
    if twist is None:
        return vacuum_character(TheorySpec(g), half_order)
    cut = Fraction(half_order, 2)
    tower = sym_character(build_shifted_adjoint(g, 2, cut, 1), half_order)
    dual = sym_character(build_dual_positive(g, cutoff=cut, F=1), half_order)
    bwb = borel_weil_table(twist).euler_character(half_order)
    return bwb * tower * dual


def junction_index(l1: LineOperatorLabel, l2: LineOperatorLabel, half_order: int,
                   half_shift: bool = False, group: RootDatum | None = None) -> QSeries:
    g = group or builtin_group("psl2")
    out = weyl_integrate(junction_character(l1, l2, half_order, g), g)
    check_integral(out, f"junction ({l1}, {l2})")
    return out.shift(1) if half_shift else out


def closed_form_junction_index(l1: LineOperatorLabel, l2: LineOperatorLabel, half_order: int) -> QSeries:
    """Closed-form integrands for the two sheaf junctions, Weyl-integrated.

    Structure/structure::

        1/2 (q)^2 CT[ (1-s^2)(1-s^-2) (1-q-qs^2-qs^-2) / ((1-qs^2)(1-qs^-2))
                      (qs^2; q)^2 (qs^-2; q)^2 ]

    Structure/dualizing replaces the rational prefactor by
    ``-(1+q) / ((1-qs^2)(1-qs^-2))``.  Built only from Pochhammer products
    and series inversion, independently of the module assembly.
    """
    g = builtin_group("psl2")
    twist = _check_pair(l1, l2, g)
    if twist is None:
        raise InadmissibleLineError("closed forms are only provided for the sheaf junctions")
    n = half_order
    one = QSeries.one(1, n)
    q = QSeries.monomial(2, (0,), n)
    qs2 = QSeries.monomial(2, (2,), n)
    qsm2 = QSeries.monomial(2, (-2,), n)
    if twist == 0:
        numer = one - q - qs2 - qsm2
    else:
        numer = -(one + q)
    prefactor = numer * ((one - qs2) * (one - qsm2)).inverse()
    qq = pochhammer((0,), 1, n)
    body = prefactor * qq * qq
    for w in ((2,), (-2,)):
        p = pochhammer(w, 1, n)
        body = body * p * p
    return weyl_integrate(body, g)
