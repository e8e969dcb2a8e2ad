"""Root data at the level of characters, Haar density and Weyl integration.

Integration over the maximal torus is done coefficient by coefficient as a
constant-term extraction::

    (1/|W|) * CT[ prod_{alpha in roots} (1 - s^alpha) * f(s) ]

For sl2 and psl2 the roots are ``s^{+2}`` and ``s^{-2}``, so the
fundamental weight is ``s^{+-1}``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .qlaurent import LaurentPoly, QSeries, RankMismatchError, weight_neg


class UnknownGroupError(KeyError):
    pass


@dataclass(frozen=True)
class RootDatum:
    name: str
    rank: int
    roots: tuple = ()
    weyl_order: int = 1

    def __post_init__(self):
        roots = tuple(tuple(int(x) for x in r) for r in self.roots)
        object.__setattr__(self, "roots", roots)
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        if self.weyl_order < 1:
            raise ValueError("weyl_order must be at least 1")
        for r in roots:
            if len(r) != self.rank:
                raise RankMismatchError(f"root {r} does not have length {self.rank}")
            if not any(r):
                raise ValueError("the zero vector is not a root")
        if sorted(roots) != sorted(weight_neg(r) for r in roots):
            raise ValueError("roots must be closed under negation")

    @property
    def dimension(self) -> int:
        return self.rank + len(self.roots)

    def adjoint_weights(self) -> RepSpec:
        """Weights of the adjoint representation: the roots plus ``rank`` zeros."""
        weights = [(r, 1) for r in self.roots]
        if self.rank:
            weights.append(((0,) * self.rank, self.rank))
        return RepSpec(tuple(weights), rank=self.rank)

    def to_dict(self) -> dict:
        return {"name": self.name, "rank": self.rank, "roots": [list(r) for r in self.roots],
                "weyl_order": self.weyl_order}


@dataclass(frozen=True)
class RepSpec:
    """A representation described by its weights with multiplicities."""

    weights: tuple = ()
    rank: int | None = field(default=None)

    def __post_init__(self):
        weights = tuple((tuple(int(x) for x in w), int(m)) for w, m in self.weights)
        object.__setattr__(self, "weights", weights)
        ranks = {len(w) for w, _ in weights}
        if self.rank is None:
            if len(ranks) > 1:
                raise RankMismatchError(f"weights of inconsistent rank: {sorted(ranks)}")
            object.__setattr__(self, "rank", ranks.pop() if ranks else 0)
        elif ranks - {self.rank}:
            raise RankMismatchError(f"weights do not all have rank {self.rank}")
        for w, m in weights:
            if m <= 0:
                raise ValueError(f"multiplicity of {w} must be positive, got {m}")

    @property
    def dimension(self) -> int:
        return sum(m for _, m in self.weights)

    def expanded(self) -> list[tuple]:
        """Weights listed with repetition."""
        return [w for w, m in self.weights for _ in range(m)]

    def dual(self) -> RepSpec:
        return RepSpec(tuple((weight_neg(w), m) for w, m in self.weights), rank=self.rank)

    def doubled(self) -> RepSpec:
        """Weights of ``V + V*``."""
        return RepSpec(self.weights + self.dual().weights, rank=self.rank)

    def character(self) -> LaurentPoly:
        return LaurentPoly.from_weights(self.expanded(), self.rank)

    @classmethod
    def from_dict(cls, d: dict) -> RepSpec:
        """Parse ``{"rank": r, "weights": [{"weight": [..], "multiplicity": m}, ...]}``.

        Entries may also be bare weight lists, meaning multiplicity 1.
        """
        entries = []
        for item in d["weights"]:
            if isinstance(item, dict):
                entries.append((item["weight"], item.get("multiplicity", 1)))
            else:
                entries.append((item, 1))
        return cls(tuple(entries), rank=d.get("rank"))


_BUILTIN = {
    "trivial": RootDatum("trivial", 0, (), 1),
    "u1": RootDatum("u1", 1, (), 1),
    "sl2": RootDatum("sl2", 1, ((2,), (-2,)), 2),
    "psl2": RootDatum("psl2", 1, ((2,), (-2,)), 2),
}


def builtin_group(name: str) -> RootDatum:
    try:
        return _BUILTIN[name.lower()]
    except KeyError:
        raise UnknownGroupError(f"unknown group {name!r}; choose from {sorted(_BUILTIN)}") from None


def builtin_names() -> list[str]:
    return sorted(_BUILTIN)


def group_from_dict(d: dict) -> RootDatum:
    missing = {"name", "rank", "roots", "weyl_order"} - set(d)
    if missing:
        raise ValueError(f"group config missing fields: {sorted(missing)}")
    return RootDatum(str(d["name"]), int(d["rank"]), tuple(tuple(r) for r in d["roots"]), int(d["weyl_order"]))


def load_group(path) -> RootDatum:
    return group_from_dict(json.loads(Path(path).read_text()))


def haar_measure(g: RootDatum) -> LaurentPoly:
    out = LaurentPoly.constant(1, g.rank)
    one = LaurentPoly.constant(1, g.rank)
    for r in g.roots:
        out = out * (one - LaurentPoly.monomial(r))
    return out


def invariant_dimension(character: LaurentPoly, g: RootDatum) -> Fraction:
    if character.rank != g.rank:
        raise RankMismatchError(f"character of rank {character.rank} for a rank-{g.rank} group")
    return (haar_measure(g) * character).constant_term() / g.weyl_order


def weyl_integrate(f: QSeries, g: RootDatum) -> QSeries:
    """Project each coefficient onto invariants; returns a rank-0 series."""
    if f.rank != g.rank:
        raise RankMismatchError(f"series of rank {f.rank} for a rank-{g.rank} group")
    haar = haar_measure(g)
    coeffs = [LaurentPoly.constant((haar * c).constant_term() / g.weyl_order, 0) for c in f.coeffs]
    return QSeries(coeffs, 0, f.half_order)
