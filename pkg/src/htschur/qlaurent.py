"""Exact Laurent polynomials in torus fugacities and truncated q-series.

A :class:`LaurentPoly` is a sparse map from integer exponent vectors to
``Fraction`` coefficients.  A :class:`QSeries` stores one ``LaurentPoly`` per
power of ``q^(1/2)``, so an index ``k`` in the coefficient list stands for
``q^(k/2)``.  Integer-graded series simply have zero odd entries.

Everything here is exact; there is no floating point in this module.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping

WeightVector = tuple  # tuple[int, ...] of length ``rank``


class RankMismatchError(ValueError):
    pass


class OrderMismatchError(ValueError):
    pass


class NonUnitError(ArithmeticError):
    """Raised when inverting a series whose constant coefficient is not a unit."""


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def weight_add(a: WeightVector, b: WeightVector) -> WeightVector:
    if len(a) != len(b):
        raise RankMismatchError(f"weights {a} and {b} have different rank")
    return tuple(x + y for x, y in zip(a, b))


def weight_neg(a: WeightVector) -> WeightVector:
    return tuple(-x for x in a)


def weight_scale(a: WeightVector, k: int) -> WeightVector:
    return tuple(k * x for x in a)


class LaurentPoly:
    """Sparse Laurent polynomial in ``s_1..s_rank`` with rational coefficients.

    Instances are immutable.  Zero coefficients are never stored, and terms
    iterate in lexicographic order of their exponent vectors.
    """

    __slots__ = ("rank", "_terms", "_hash")

    def __init__(self, terms: Mapping[WeightVector, object] | None = None, rank: int = 1):
        if rank < 0:
            raise ValueError("rank must be nonnegative")
        clean: dict[tuple, Fraction] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != rank:
                raise RankMismatchError(f"exponent {exp} does not have length {rank}")
            c = as_fraction(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if not clean[exp]:
                    del clean[exp]
        self.rank = rank
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, rank: int) -> LaurentPoly:
        # caller guarantees: no zeros, right rank, Fraction values
        obj = cls.__new__(cls)
        obj.rank = rank
        obj._terms = dict(sorted(terms.items()))
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, rank: int) -> LaurentPoly:
        return cls._raw({}, rank)

    @classmethod
    def constant(cls, c, rank: int) -> LaurentPoly:
        c = as_fraction(c)
        return cls._raw({(0,) * rank: c} if c else {}, rank)

    @classmethod
    def monomial(cls, exp: Iterable[int], coeff=1) -> LaurentPoly:
        exp = tuple(int(e) for e in exp)
        return cls({exp: coeff}, rank=len(exp))

    @classmethod
    def from_weights(cls, weights: Iterable[WeightVector], rank: int) -> LaurentPoly:
        """Character of a multiset of weights: the sum of ``s^w``."""
        acc: dict[tuple, Fraction] = {}
        for w in weights:
            w = tuple(w)
            acc[w] = acc.get(w, Fraction(0)) + 1
        return cls(acc, rank)

    # -- access -----------------------------------------------------------
    @property
    def terms(self) -> dict[tuple, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[tuple, Fraction]]:
        return iter(self._terms.items())

    def coefficient(self, exp: WeightVector) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.rank, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0,) * self.rank}

    def unit_monomial(self) -> tuple[tuple, Fraction] | None:
        """Return ``(exp, c)`` if this is ``c * s^exp`` with ``c != 0``."""
        if len(self._terms) != 1:
            return None
        return next(iter(self._terms.items()))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            if other.rank != self.rank:
                raise RankMismatchError(f"rank {self.rank} vs rank {other.rank}")
            return other
        return LaurentPoly.constant(as_fraction(other), self.rank)

    def __add__(self, other) -> LaurentPoly:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out, self.rank)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()}, self.rank)

    def __sub__(self, other) -> LaurentPoly:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            try:
                c = as_fraction(other)
            except TypeError:
                return NotImplemented
            if not c:
                return LaurentPoly.zero(self.rank)
            return LaurentPoly._raw({e: v * c for e, v in self._terms.items()}, self.rank)
        other = self._coerce(other)
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c}, self.rank)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("negative powers are only defined for monomials; use shift()")
        out = LaurentPoly.constant(1, self.rank)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, exp: WeightVector, coeff=1) -> LaurentPoly:
        """Multiply by the monomial ``coeff * s^exp``."""
        exp = tuple(exp)
        if len(exp) != self.rank:
            raise RankMismatchError(f"shift {exp} does not have rank {self.rank}")
        c = as_fraction(coeff)
        if not c:
            return LaurentPoly.zero(self.rank)
        return LaurentPoly._raw(
            {tuple(a + b for a, b in zip(e, exp)): v * c for e, v in self._terms.items()},
            self.rank,
        )

    def negate_exponents(self) -> LaurentPoly:
        """Substitute ``s -> s^-1`` (the character of the dual representation)."""
        return LaurentPoly._raw({weight_neg(e): c for e, c in self._terms.items()}, self.rank)

    # -- comparison -------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.rank == other.rank and self._terms == other._terms
        try:
            c = as_fraction(other)
        except TypeError:
            return NotImplemented
        return self._terms == LaurentPoly.constant(c, self.rank)._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rank, tuple(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({format_laurent(self)!r}, rank={self.rank})"

    def __str__(self) -> str:
        return format_laurent(self)


def laurent_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if a.rank != b.rank:
        raise RankMismatchError(f"rank {a.rank} vs rank {b.rank}")
    return a * b


def constant_term(a: LaurentPoly) -> Fraction:
    return a.constant_term()


class QSeries:
    """Power series in ``q^(1/2)`` with :class:`LaurentPoly` coefficients.

    ``half_order`` is the largest stored exponent in units of ``q^(1/2)``,
    inclusive.  Addition and multiplication require equal rank and
    ``half_order``; use :meth:`truncate` to compare series of different length.
    """

    __slots__ = ("rank", "half_order", "_coeffs")

    def __init__(self, coeffs: Iterable[LaurentPoly], rank: int, half_order: int | None = None):
        coeffs = list(coeffs)
        for c in coeffs:
            if not isinstance(c, LaurentPoly):
                raise TypeError("QSeries coefficients must be LaurentPoly")
            if c.rank != rank:
                raise RankMismatchError(f"coefficient of rank {c.rank} in a rank-{rank} series")
        if half_order is None:
            half_order = len(coeffs) - 1
        if half_order < 0:
            raise ValueError("half_order must be nonnegative")
        if len(coeffs) > half_order + 1:
            extra = coeffs[half_order + 1:]
            if any(extra):
                raise ValueError("coefficients stored beyond half_order")
            coeffs = coeffs[: half_order + 1]
        zero = LaurentPoly.zero(rank)
        coeffs.extend([zero] * (half_order + 1 - len(coeffs)))
        self.rank = rank
        self.half_order = half_order
        self._coeffs = tuple(coeffs)

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, rank: int, half_order: int) -> QSeries:
        return cls([], rank, half_order)

    @classmethod
    def one(cls, rank: int, half_order: int) -> QSeries:
        return cls([LaurentPoly.constant(1, rank)], rank, half_order)

    @classmethod
    def monomial(cls, qhalf: int, exp: WeightVector, half_order: int, coeff=1) -> QSeries:
        """``coeff * q^(qhalf/2) * s^exp``; vanishes if ``qhalf > half_order``."""
        exp = tuple(exp)
        rank = len(exp)
        if qhalf < 0:
            raise ValueError("negative q-powers are not representable")
        coeffs = [LaurentPoly.zero(rank)] * (half_order + 1)
        if qhalf <= half_order:
            coeffs[qhalf] = LaurentPoly.monomial(exp, coeff)
        return cls(coeffs, rank, half_order)

    @classmethod
    def from_polynomial(cls, poly: Mapping[int, LaurentPoly], rank: int, half_order: int) -> QSeries:
        """Build from ``{qhalf: LaurentPoly}``; terms above ``half_order`` are dropped."""
        coeffs = [LaurentPoly.zero(rank)] * (half_order + 1)
        for k, c in poly.items():
            if k < 0:
                raise ValueError("negative q-powers are not representable")
            if k <= half_order:
                coeffs[k] = coeffs[k] + c
        return cls(coeffs, rank, half_order)

    @classmethod
    def from_integers(cls, values: Iterable, half_order: int | None = None) -> QSeries:
        """Rank-0 series from a list of rational coefficients indexed by qhalf."""
        coeffs = [LaurentPoly.constant(v, 0) for v in values]
        return cls(coeffs, 0, half_order)

    # -- access -----------------------------------------------------------
    @property
    def coeffs(self) -> tuple[LaurentPoly, ...]:
        return self._coeffs

    def __getitem__(self, k: int) -> LaurentPoly:
        return self._coeffs[k]

    def __len__(self) -> int:
        return len(self._coeffs)

    def scalars(self) -> list[Fraction]:
        """Constant terms of all coefficients; for rank 0 these are the coefficients."""
        return [c.constant_term() for c in self._coeffs]

    def integer_q_scalars(self) -> list[Fraction]:
        """Scalars at integer powers of q (even half-units)."""
        return self.scalars()[::2]

    # -- structural -------------------------------------------------------
    def _check(self, other: QSeries) -> None:
        if not isinstance(other, QSeries):
            raise TypeError("expected a QSeries")
        if other.rank != self.rank:
            raise RankMismatchError(f"rank {self.rank} vs rank {other.rank}")
        if other.half_order != self.half_order:
            raise OrderMismatchError(f"half_order {self.half_order} vs {other.half_order}")

    def truncate(self, half_order: int) -> QSeries:
        if half_order > self.half_order:
            raise OrderMismatchError(
                f"cannot extend a series known through q^({self.half_order}/2) to q^({half_order}/2)"
            )
        return QSeries(self._coeffs[: half_order + 1], self.rank, half_order)

    def map_coefficients(self, fn, rank: int | None = None) -> QSeries:
        return QSeries([fn(c) for c in self._coeffs], self.rank if rank is None else rank, self.half_order)

    def shift(self, qhalf: int) -> QSeries:
        """Multiply by ``q^(qhalf/2)``, dropping what falls past ``half_order``."""
        if qhalf < 0:
            raise ValueError("negative shifts are not representable")
        zero = LaurentPoly.zero(self.rank)
        coeffs = [zero] * qhalf + list(self._coeffs)
        return QSeries(coeffs[: self.half_order + 1], self.rank, self.half_order)

    def negate_fugacities(self) -> QSeries:
        return self.map_coefficients(LaurentPoly.negate_exponents)

    def flip_half_powers(self) -> QSeries:
        """Substitute ``q^(1/2) -> -q^(1/2)``."""
        return QSeries([c if k % 2 == 0 else -c for k, c in enumerate(self._coeffs)], self.rank, self.half_order)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: QSeries) -> QSeries:
        self._check(other)
        return QSeries([a + b for a, b in zip(self._coeffs, other._coeffs)], self.rank, self.half_order)

    def __neg__(self) -> QSeries:
        return QSeries([-a for a in self._coeffs], self.rank, self.half_order)

    def __sub__(self, other: QSeries) -> QSeries:
        self._check(other)
        return QSeries([a - b for a, b in zip(self._coeffs, other._coeffs)], self.rank, self.half_order)

    def __mul__(self, other) -> QSeries:
        if isinstance(other, QSeries):
            self._check(other)
            n = self.half_order
            out = []
            for k in range(n + 1):
                acc = LaurentPoly.zero(self.rank)
                for j in range(k + 1):
                    a = self._coeffs[j]
                    if not a:
                        continue
                    b = other._coeffs[k - j]
                    if b:
                        acc = acc + a * b
                out.append(acc)
            return QSeries(out, self.rank, n)
        if isinstance(other, LaurentPoly):
            if other.rank != self.rank:
                raise RankMismatchError(f"rank {self.rank} vs rank {other.rank}")
            return self.map_coefficients(lambda c: c * other)
        try:
            c = as_fraction(other)
        except TypeError:
            return NotImplemented
        return self.map_coefficients(lambda x: x * c)

    def __rmul__(self, other) -> QSeries:
        if isinstance(other, QSeries):
            return other * self
        return self * other

    def __pow__(self, n: int) -> QSeries:
        if n < 0:
            return self.inverse() ** (-n)
        out = QSeries.one(self.rank, self.half_order)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self) -> QSeries:
        """Two-sided inverse modulo ``q^((half_order+1)/2)``.

        The constant coefficient must be a single monomial ``c * s^w``.
        """
        lead = self._coeffs[0].unit_monomial()
        if lead is None:
            raise NonUnitError(f"constant coefficient {self._coeffs[0]} is not a unit monomial")
        exp, c = lead
        b0 = LaurentPoly.monomial(weight_neg(exp), 1 / c)
        out = [b0]
        for k in range(1, self.half_order + 1):
            acc = LaurentPoly.zero(self.rank)
            for j in range(1, k + 1):
                a = self._coeffs[j]
                if a:
                    acc = acc + a * out[k - j]
            out.append(-(acc * b0))
        return QSeries(out, self.rank, self.half_order)

    def times_one_minus(self, qhalf: int, exp: WeightVector, c=1) -> QSeries:
        """Multiply by ``(1 - c q^(qhalf/2) s^exp)``."""
        if qhalf <= 0:
            raise ValueError("the monomial must carry a positive q-power")
        c = as_fraction(c)
        out = list(self._coeffs)
        for k in range(qhalf, self.half_order + 1):
            a = self._coeffs[k - qhalf]
            if a:
                out[k] = out[k] - a.shift(exp, c)
        return QSeries(out, self.rank, self.half_order)

    def divide_one_minus(self, qhalf: int, exp: WeightVector, c=1) -> QSeries:
        """Multiply by the geometric series ``1 / (1 - c q^(qhalf/2) s^exp)``."""
        if qhalf <= 0:
            raise ValueError("the monomial must carry a positive q-power")
        c = as_fraction(c)
        out = list(self._coeffs)
        for k in range(qhalf, self.half_order + 1):
            prev = out[k - qhalf]
            if prev:
                out[k] = out[k] + prev.shift(exp, c)
        return QSeries(out, self.rank, self.half_order)

    # -- comparison -------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return (self.rank, self.half_order, self._coeffs) == (other.rank, other.half_order, other._coeffs)

    def __hash__(self) -> int:
        return hash((self.rank, self.half_order, self._coeffs))

    def __repr__(self) -> str:
        return f"QSeries({format_series(self)!r}, rank={self.rank})"

    def __str__(self) -> str:
        return format_series(self)


def qseries_mul(a: QSeries, b: QSeries) -> QSeries:
    return a * b


def qseries_inverse(a: QSeries) -> QSeries:
    return a.inverse()


def pochhammer(weight: WeightVector, shift, half_order: int, sign: int = 1) -> QSeries:
    """Truncated ``prod_{n>=0} (1 - sign * q^(n+shift) * s^weight)``.

    ``shift`` is in units of q and must be a positive multiple of 1/2.
    Factors whose q-power exceeds ``half_order/2`` are omitted since they
    cannot reach the stored coefficients.
    """
    shift = as_fraction(shift)
    if shift <= 0:
        raise ValueError("pochhammer shift must be positive")
    if (2 * shift).denominator != 1:
        raise ValueError("pochhammer shift must be a multiple of 1/2")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    weight = tuple(weight)
    out = QSeries.one(len(weight), half_order)
    qhalf = int(2 * shift)
    while qhalf <= half_order:
        out = out.times_one_minus(qhalf, weight, sign)
        qhalf += 2
    return out


def pentagonal_euler(half_order: int) -> QSeries:
    """``(q; q)_inf`` from Euler's pentagonal number theorem (rank 0)."""
    vals = [0] * (half_order + 1)
    k = 0
    while True:
        hit = False
        for j in ((k, -k) if k else (0,)):
            p = j * (3 * j - 1)  # twice the pentagonal number, i.e. qhalf
            if p <= half_order:
                vals[p] += -1 if j % 2 else 1
                hit = True
        if not hit:
            break
        k += 1
    return QSeries.from_integers(vals, half_order)


# -- text formatting ---------------------------------------------------------

def _format_monomial(exp: tuple) -> str:
    names = ["s"] if len(exp) == 1 else [f"s{i + 1}" for i in range(len(exp))]
    parts = []
    for name, e in zip(names, exp):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def format_laurent(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    out = []
    for i, (exp, c) in enumerate(sorted(p.items(), key=lambda t: tuple(-x for x in t[0]))):
        mono = _format_monomial(exp)
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else f"{mag}*{mono}"
        else:
            body = str(mag)
        if i == 0:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(out)


def _qpow(k: int) -> str:
    if k == 0:
        return ""
    if k % 2 == 0:
        return "q" if k == 2 else f"q^{k // 2}"
    return f"q^({k}/2)"


def format_series(s: QSeries) -> str:
    """Human-readable series ending in an ``O(...)`` marker for the truncation.

    Integer powers are always printed (zeros included); half-integer powers
    only when some half-integer coefficient is nonzero.
    """
    show_odd = any(s[k] for k in range(1, s.half_order + 1, 2))
    parts: list[str] = []
    for k in range(s.half_order + 1):
        if k % 2 and not show_odd:
            continue
        c = s[k]
        q = _qpow(k)
        if s.rank == 0:
            v = c.constant_term()
            neg = v < 0
            body = str(abs(v)) if not q else f"{abs(v)}*{q}"
        else:
            neg = False
            body = f"({format_laurent(c)})" + (f"*{q}" if q else "")
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    parts.append(f" + O({_qpow(s.half_order + 1)})")
    return "".join(parts)
