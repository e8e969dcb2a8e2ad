"""Acceptance criteria 1-8, all at exact equality of rational coefficients.

Each criterion is a plain function returning ``(passed, detail)``; the pytest
wrappers record a ``criterion N: PASS/FAIL`` line and then assert.  Running
this file directly prints the same lines.
"""
from __future__ import annotations

import random
import time
from math import comb

import pytest

from htschur.complexes import (
    brst_complex_abelian,
    ce_complex,
    euler_series,
    heisenberg,
    koszul_ext_point,
    sl2,
    sl2_irrep,
    truncated_nilpotent_current,
)
from htschur.gradedmod import brute_force_character
from htschur.indices import TheorySpec, schur_index_matter, schur_index_pure, vector_multiplet_module
from htschur.junctions import (
    IDENTITY_LINE,
    borel_weil_table,
    closed_form_junction_index,
    dualizing_sheaf,
    junction_index,
    structure_sheaf,
)
from htschur.qlaurent import QSeries, pentagonal_euler
from htschur.rootdata import RepSpec, builtin_group, weyl_integrate
from randcomplex import random_graded_complex

SL2, PSL2, U1 = builtin_group("sl2"), builtin_group("psl2"), builtin_group("u1")
O, OMEGA = structure_sheaf(), dualizing_sheaf()
HYPER = RepSpec((((1,), 1),))


class Failed(Exception):
    pass


def expect(cond: bool, what: str) -> None:
    if not cond:
        raise Failed(what)


def run_criterion(fn) -> tuple[bool, str]:
    t0 = time.perf_counter()
    try:
        detail = fn() or ""
        ok = True
    except Failed as exc:
        ok, detail = False, str(exc)
    return ok, f"({time.perf_counter() - t0:.2f}s) {detail}".strip()


def enumerated_pure_index(g, n: int) -> QSeries:
    return weyl_integrate(brute_force_character(vector_multiplet_module(g, n), n), g)


def criterion_1():
    t0 = time.perf_counter()
    sl2_product, u1_product = schur_index_pure(SL2, 12), schur_index_pure(U1, 20)
    expect(sl2_product == enumerated_pure_index(SL2, 12), "sl2 product != enumeration through q^6")
    expect(u1_product == enumerated_pure_index(U1, 20), "u1 product != enumeration through q^10")
    expect(sl2_product.integer_q_scalars()[:3] == [1, 0, 1], f"sl2 prefix {sl2_product}")
    elapsed = time.perf_counter() - t0
    expect(elapsed < 10, f"took {elapsed:.2f}s")
    return str(sl2_product)


def criterion_2():
    t0 = time.perf_counter()
    s = schur_index_pure(U1, 40)
    elapsed = time.perf_counter() - t0
    p = pentagonal_euler(40)
    expect(s == p * p, "u1 index != pentagonal square")
    expect(s.integer_q_scalars()[:6] == [1, -2, -1, 2, 1, 2], f"prefix {s.integer_q_scalars()[:6]}")
    expect(elapsed < 1, f"took {elapsed:.2f}s")


def criterion_3():
    t0, t2 = borel_weil_table(0), borel_weil_table(-2)
    expect(t0.entries == {0: [(0, (0,))], 1: [(1, (2, 0, 0, -2))], 2: [(2, (2, 0, -2))]},
           f"structure sheaf table {t0.entries}")
    expect(t2.entries == {0: [(1, (0,))], 1: [(1, (0,)), (2, (0,))], 2: [(2, (0,))]},
           f"dualizing sheaf table {t2.entries}")
    one, q = QSeries.one(1, 4), QSeries.monomial(2, (0,), 4)
    qs2, qsm2 = QSeries.monomial(2, (2,), 4), QSeries.monomial(2, (-2,), 4)
    expect(t0.euler_character(4) == (one - q) * (one - q - qs2 - qsm2), "structure sheaf Euler character")
    expect(t2.euler_character(4) == -((one - q) * (one + q)), "dualizing sheaf Euler character")


def criterion_4():
    t0 = time.perf_counter()
    oo, ow = junction_index(O, O, 8), junction_index(O, OMEGA, 8)
    expect(oo == closed_form_junction_index(O, O, 8), "(O, O) closed form != assembly")
    expect(ow == closed_form_junction_index(O, OMEGA, 8), "(O, Omega) closed form != assembly")
    expect(junction_index(IDENTITY_LINE, IDENTITY_LINE, 12) == schur_index_pure(SL2, 12),
           "identity pair != pure sl2 index")
    expect(oo.scalars()[0] == 1 and ow.scalars()[0] == -1, "leading coefficients")
    elapsed = time.perf_counter() - t0
    expect(elapsed < 30, f"took {elapsed:.2f}s")
    return f"O,O: {oo}; O,Omega: {ow}"


def criterion_5():
    built = [ce_complex(sl2()), ce_complex(heisenberg())]
    expect(built[0].betti() == (1, 0, 0, 1), f"sl2 Betti {built[0].betti()}")
    expect(built[1].betti() == (1, 2, 2, 1), f"Heisenberg Betti {built[1].betti()}")
    for d in range(7):
        got = koszul_ext_point(d)
        expect(got == tuple(comb(d, k) for k in range(d + 1)), f"Koszul d={d}: {got}")
    rng = random.Random(20240611)
    for _ in range(24):
        c, expected = random_graded_complex(rng)
        got = c.graded_cohomology()
        expect(all(got.get(g, dims) == dims for g, dims in expected.items()), "random complex cohomology")
        built.append(c)
    for m in (1, 2, 3):
        built.append(ce_complex(truncated_nilpotent_current("sl2", m)))
    built.extend(ce_complex(sl2(), sl2_irrep(n)) for n in range(4))
    built.extend(brst_complex_abelian(ch, 4) for ch in ([1], [1, -1], [2]))
    expect(all(c.square_is_zero() for c in built), "some constructed complex has d o d != 0")
    return f"{len(built)} complexes, 24 randomized"


def criterion_6():
    c = brst_complex_abelian([1], 4)
    ref = schur_index_matter(TheorySpec(U1, HYPER, 1), 4)
    expect(euler_series(c, 4) == ref, f"charge-1 Euler {euler_series(c, 4)} vs {ref}")
    pure = brst_complex_abelian([], 8)
    p = pentagonal_euler(40)
    expect(euler_series(pure, 8) == (p * p).truncate(8), "pure u1 BRST character")


def criterion_7():
    series = [
        schur_index_pure(SL2, 12), enumerated_pure_index(SL2, 12),
        schur_index_pure(U1, 20), enumerated_pure_index(U1, 20), schur_index_pure(U1, 40),
        weyl_integrate(borel_weil_table(0).euler_character(4), PSL2),
        weyl_integrate(borel_weil_table(-2).euler_character(4), PSL2),
        junction_index(O, O, 8), junction_index(O, OMEGA, 8),
        closed_form_junction_index(O, O, 8), closed_form_junction_index(O, OMEGA, 8),
        junction_index(IDENTITY_LINE, IDENTITY_LINE, 12),
    ]
    bad = [(i, v) for i, s in enumerate(series) for v in s.scalars() if v.denominator != 1]
    expect(not bad, f"non-integral coefficients {bad[:3]}")
    return f"{sum(len(s) for s in series)} coefficients"


def criterion_8():
    minus = schur_index_matter(TheorySpec(U1, HYPER, -1), 4)
    plus = schur_index_matter(TheorySpec(U1, HYPER, 1), 4)
    expect(minus.scalars()[:3] == [1, 0, -1], f"prefix {minus.scalars()[:3]}")
    expect(minus == plus.flip_half_powers(), "sign conventions are not related by q^(1/2) -> -q^(1/2)")


CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4,
            5: criterion_5, 6: criterion_6, 7: criterion_7, 8: criterion_8}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, record_criterion):
    ok, detail = run_criterion(CRITERIA[number])
    record_criterion(number, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    for number, fn in CRITERIA.items():
        ok, detail = run_criterion(fn)
        print(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
