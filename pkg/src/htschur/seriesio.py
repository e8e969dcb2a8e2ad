"""JSON and text serialization of :class:`~htschur.qlaurent.QSeries`.

JSON layout::

    {"half_order": N, "rank": r,
     "coeffs": [{"qhalf": k, "terms": [{"exp": [..], "num": "p", "den": "q"}]}]}

Numerators and denominators are decimal strings so arbitrarily large
integers survive any JSON reader.  Zero coefficients are omitted from
``coeffs``; entries appear in increasing ``qhalf`` and terms in lexicographic
exponent order, so equal series serialize to identical bytes.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction

from .qlaurent import LaurentPoly, QSeries, format_series


def series_to_dict(s: QSeries) -> dict:
    coeffs = []
    for k, c in enumerate(s.coeffs):
        if not c:
            continue
        terms = [
            {"exp": list(exp), "num": str(v.numerator), "den": str(v.denominator)}
            for exp, v in c.items()
        ]
        coeffs.append({"qhalf": k, "terms": terms})
    return {"half_order": s.half_order, "rank": s.rank, "coeffs": coeffs}


def series_from_dict(d: dict) -> QSeries:
    try:
        rank = int(d["rank"])
        n = int(d["half_order"])
        entries = d["coeffs"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed series object: missing {exc}") from None
    poly: dict[int, LaurentPoly] = {}
    for entry in entries:
        k = int(entry["qhalf"])
        if not 0 <= k <= n:
            raise ValueError(f"qhalf {k} outside 0..{n}")
        if k in poly:
            raise ValueError(f"duplicate qhalf {k}")
        terms = {}
        for t in entry["terms"]:
            exp = tuple(int(e) for e in t["exp"])
            if exp in terms:
                raise ValueError(f"duplicate exponent {exp} at qhalf {k}")
            terms[exp] = Fraction(int(t["num"]), int(t["den"]))
        poly[k] = LaurentPoly(terms, rank)
    return QSeries.from_polynomial(poly, rank, n)


def series_to_json(s: QSeries, **kwargs) -> str:
    return json.dumps(series_to_dict(s), **kwargs)


def series_from_json(text: str) -> QSeries:
    return series_from_dict(json.loads(text))


def series_to_text(s: QSeries) -> str:
    return format_series(s)


# -- text parsing ------------------------------------------------------------

_QPOW = re.compile(r"^q(?:\^(?:\((\d+)/2\)|(\d+)))?$")
_ORDER = re.compile(r"\s*\+\s*O\((q(?:\^(?:\(\d+/2\)|\d+))?)\)\s*$")
_VAR = re.compile(r"^s(\d*)(?:\^(-?\d+))?$")


def _parse_qpow(tok: str) -> int:
    m = _QPOW.match(tok)
    if not m:
        raise ValueError(f"bad q-power {tok!r}")
    if m.group(1):
        return int(m.group(1))
    if m.group(2):
        return 2 * int(m.group(2))
    return 2


def _split_signed(text: str) -> list[tuple[int, str]]:
    """Split ``a + b - c`` at top-level (outside parentheses) signs."""
    out: list[tuple[int, str]] = []
    depth = 0
    sign = 1
    buf = ""
    i = 0
    text = text.strip()
    if text.startswith("-"):
        sign = -1
        text = text[1:].lstrip()
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and text.startswith((" + ", " - "), i):
            out.append((sign, buf.strip()))
            sign = 1 if text[i + 1] == "+" else -1
            buf = ""
            i += 3
            continue
        buf += ch
        i += 1
    out.append((sign, buf.strip()))
    return out


def parse_laurent(text: str, rank: int) -> LaurentPoly:
    text = text.strip()
    if text == "0":
        return LaurentPoly.zero(rank)
    acc = LaurentPoly.zero(rank)
    for sign, term in _split_signed(text):
        coeff = Fraction(1)
        exp = [0] * rank
        for factor in term.split("*"):
            m = _VAR.match(factor)
            if m:
                idx = int(m.group(1)) - 1 if m.group(1) else 0
                if not 0 <= idx < rank:
                    raise ValueError(f"variable {factor!r} outside rank {rank}")
                exp[idx] += int(m.group(2)) if m.group(2) else 1
            else:
                coeff *= Fraction(factor)
        acc = acc + LaurentPoly({tuple(exp): sign * coeff}, rank)
    return acc


def _matching_paren(text: str) -> int:
    depth = 0
    for i, ch in enumerate(text):
        depth += {"(": 1, ")": -1}.get(ch, 0)
        if depth == 0:
            return i
    raise ValueError(f"unbalanced parentheses in {text!r}")


def series_from_text(text: str, rank: int) -> QSeries:
    """Inverse of :func:`series_to_text`; the rank is not encoded in the text."""
    m = _ORDER.search(text)
    if not m:
        raise ValueError("series text must end with an O(q^...) truncation marker")
    n = _parse_qpow(m.group(1)) - 1
    body = text[: m.start()]
    poly: dict[int, LaurentPoly] = {}
    for sign, term in _split_signed(body):
        if term.startswith("("):
            close = _matching_paren(term)
            coeff = parse_laurent(term[1:close], rank)
            rest = term[close + 1:]
            k = _parse_qpow(rest[1:]) if rest.startswith("*") else 0
        else:
            head, _, rest = term.partition("*")
            coeff = LaurentPoly.constant(Fraction(head), rank)
            k = _parse_qpow(rest) if rest else 0
        poly[k] = poly.get(k, LaurentPoly.zero(rank)) + coeff * sign
    return QSeries.from_polynomial(poly, rank, n)
