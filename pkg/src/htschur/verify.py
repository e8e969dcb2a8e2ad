"""Programmatic cross-checks: oracle equalities, cohomology tables, Betti
numbers and Euler-character matches.  Used by ``htschur verify``."""
from __future__ import annotations

import logging
import time
import traceback
from dataclasses import asdict, dataclass
from fractions import Fraction
from math import comb

from .complexes.brst import brst_complex_abelian, euler_series
from .complexes.koszul import koszul_ext_point
from .complexes.lie import ce_complex, heisenberg, sl2, truncated_nilpotent_current
from .gradedmod import (
    brute_force_character,
    build_dual_positive,
    build_loop_adjoint_neg,
    build_matter_modules,
    build_shifted_adjoint,
    sym_character,
)
from .indices import TheorySpec, schur_index_matter, schur_index_pure, vector_multiplet_module
from .junctions import (
    IDENTITY_LINE,
    borel_weil_table,
    closed_form_junction_index,
    dualizing_sheaf,
    junction_index,
    p1_line_bundle_cohomology,
    structure_sheaf,
)
from .qlaurent import LaurentPoly, QSeries, pentagonal_euler, pochhammer
from .rootdata import RepSpec, builtin_group, weyl_integrate

log = logging.getLogger(__name__)

SUITES = ("tables", "oracles", "indices", "junctions", "complexes", "brst")

# Expected Borel-Weil-Bott tables: {k: [(degree, weights)]} at loop weight q^k
BWB_TWIST_0 = {0: [(0, (0,))], 1: [(1, (2, 0, 0, -2))], 2: [(2, (2, 0, -2))]}
BWB_TWIST_M2 = {0: [(1, (0,))], 1: [(1, (0,)), (2, (0,))], 2: [(2, (0,))]}


@dataclass
class Check:
    suite: str
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0


def _run(suite: str, name: str, fn) -> Check:
    t0 = time.perf_counter()
    try:
        result = fn()
        if isinstance(result, tuple):
            ok, detail = result
        else:
            ok, detail = bool(result), ""
    except Exception as exc:  # a crashing check is a failed check
        log.debug("check %s/%s raised", suite, name, exc_info=True)
        ok, detail = False, f"{type(exc).__name__}: {exc}\n{traceback.format_exc(limit=3)}"
    return Check(suite, name, ok, detail, time.perf_counter() - t0)



# -- suites ---------------------------------------------------------------------

def _tables(order: int) -> list[Check]:
    q = QSeries.monomial(2, (0,), 4)
    one = QSeries.one(1, 4)
    qs2 = QSeries.monomial(2, (2,), 4)
    qsm2 = QSeries.monomial(2, (-2,), 4)
    checks = [
        _run("tables", "bwb_twist_0_matches_structure_sheaf_table", lambda: borel_weil_table(0).entries == BWB_TWIST_0),
        _run("tables", "bwb_twist_-2_matches_dualizing_table", lambda: borel_weil_table(-2).entries == BWB_TWIST_M2),
        _run("tables", "bwb_twist_0_euler_is_(1-q)(1-q-qs^2-qs^-2)",
             lambda: borel_weil_table(0).euler_character(4) == (one - q) * (one - q - qs2 - qsm2)),
        _run("tables", "bwb_twist_-2_euler_is_-(1-q)(1+q)",
             lambda: borel_weil_table(-2).euler_character(4) == -((one - q) * (one + q))),
    ]

    def riemann_roch():
        for n in range(-6, 7):
            h0, h1 = p1_line_bundle_cohomology(n)
            if len(h0) - len(h1) != n + 1:
                return False, f"n={n}"
        return True, ""

    def serre():
        for n in range(-6, 7):
            _, h1 = p1_line_bundle_cohomology(n)
            h0_dual, _ = p1_line_bundle_cohomology(-n - 2)
            if sorted(h1) != sorted(-w for w in h0_dual):
                return False, f"n={n}"
        return True, ""

    checks.append(_run("tables", "riemann_roch_p1", riemann_roch))
    checks.append(_run("tables", "serre_duality_p1", serre))
    return checks


def _oracles(order: int) -> list[Check]:
    checks = []
    n = order
    cut = Fraction(n, 2)
    sl2g, u1 = builtin_group("sl2"), builtin_group("u1")
    fund = RepSpec((((1,), 1), ((-1,), 1)))
    hyper = RepSpec((((1,), 1),))
    modules = {
        "sl2_loop_adjoint": build_loop_adjoint_neg(sl2g, cutoff=cut),
        "sl2_dual_positive": build_dual_positive(sl2g, cutoff=cut),
        "sl2_shifted_adjoint_m2": build_shifted_adjoint(sl2g, 2, cut),
        "sl2_fundamental_matter": sum(build_matter_modules(fund, cut)[1:], build_matter_modules(fund, cut)[0]),
        "u1_loop_adjoint": build_loop_adjoint_neg(u1, cutoff=Fraction(max(n, 16), 2)),
        "u1_hyper_matter": sum(build_matter_modules(hyper, cut)[1:], build_matter_modules(hyper, cut)[0]),
    }
    for name, m in modules.items():
        N = 2 * int(m.q_cutoff) if name.startswith("u1_loop") else n
        checks.append(_run("oracles", f"sym_equals_enumeration[{name}]",
                           lambda m=m, N=N: sym_character(m, N) == brute_force_character(m, N)))
    checks.append(_run("oracles", "pochhammer_equals_pentagonal_through_q^50",
                       lambda: pochhammer((0,), 1, 100).map_coefficients(
                           lambda c: LaurentPoly.constant(c.constant_term(), 0), rank=0) == pentagonal_euler(100)))
    for g, N in ((sl2g, max(n, 12)), (u1, max(n, 20))):
        checks.append(_run("oracles", f"pure_index_product_equals_enumeration[{g.name}, {N}]",
                           lambda g=g, N=N: schur_index_pure(g, N)
                           == weyl_integrate(brute_force_character(vector_multiplet_module(g, N), N), g)))
    return checks


def _indices(order: int) -> list[Check]:
    u1 = builtin_group("u1")
    hyper = TheorySpec(u1, RepSpec((((1,), 1),)), -1)

    def sl2_prefix():
        s = schur_index_pure(builtin_group("sl2"), 4)
        return s.scalars()[::2] == [1, 0, 1], str(s)

    def u1_pentagonal():
        p = pentagonal_euler(40)
        return schur_index_pure(u1, 40) == p * p

    def matter_prefix():
        s = schur_index_matter(hyper, 2)
        return s.scalars() == [1, 0, -1], str(s)

    def sign_flip():
        plus = schur_index_matter(TheorySpec(u1, hyper.matter, 1), 4)
        minus = schur_index_matter(hyper, 4)
        return minus == plus.flip_half_powers()

    def pure_sl2_odd_vanish():
        return all(v == 0 for v in schur_index_pure(builtin_group("sl2"), max(order, 8)).scalars()[1::2])

    return [
        _run("indices", "sl2_pure_prefix_1_0_1", sl2_prefix),
        _run("indices", "u1_pure_equals_pentagonal_square", u1_pentagonal),
        _run("indices", "u1_hyper_minus_sign_prefix_1_0_-1", matter_prefix),
        _run("indices", "matter_sign_flip_is_half_power_flip", sign_flip),
        _run("indices", "sl2_pure_has_no_half_integer_powers", pure_sl2_odd_vanish),
    ]


def _junctions(order: int) -> list[Check]:
    n = max(order, 8)
    O, W = structure_sheaf(), dualizing_sheaf()
    checks = []
    for name, (a, b), lead in (("O_O", (O, O), 1), ("O_Omega", (O, W), -1)):
        checks.append(_run("junctions", f"closed_form_equals_assembly[{name}]",
                           lambda a=a, b=b: junction_index(a, b, n) == closed_form_junction_index(a, b, n)))
        checks.append(_run("junctions", f"leading_coefficient[{name}]={lead}",
                           lambda a=a, b=b, lead=lead: junction_index(a, b, n).scalars()[0] == lead))
    checks.append(_run("junctions", "identity_pair_reduces_to_pure_sl2",
                       lambda: junction_index(IDENTITY_LINE, IDENTITY_LINE, n)
                       == schur_index_pure(builtin_group("sl2"), n)))
    checks.append(_run("junctions", "half_shift_leading_term",
                       lambda: junction_index(O, W, n, half_shift=True).scalars()[:2] == [0, -1]))
    return checks


def _complexes(order: int) -> list[Check]:
    checks = [
        _run("complexes", "ce_sl2_trivial_betti_1_0_0_1", lambda: ce_complex(sl2()).betti() == (1, 0, 0, 1)),
        _run("complexes", "ce_heisenberg_betti_1_2_2_1", lambda: ce_complex(heisenberg()).betti() == (1, 2, 2, 1)),
    ]
    for d in range(7):
        checks.append(_run("complexes", f"koszul_ext_point[{d}]",
                           lambda d=d: koszul_ext_point(d) == tuple(comb(d, k) for k in range(d + 1))))
    for m in (1, 2, 3):
        def current(m=m):
            c = ce_complex(truncated_nilpotent_current("sl2", m))
            h = c.cohomology()
            chi_h = sum((-1 if k % 2 else 1) * v for k, v in h.items())
            return c.euler_characteristic() == 0 == chi_h, f"betti={c.betti()}"
        checks.append(_run("complexes", f"ce_truncated_sl2_current_euler_zero[m={m}]", current))
    return checks


def _brst(order: int) -> list[Check]:
    n = max(order, 4)
    u1 = builtin_group("u1")

    def charged(charges):
        c = brst_complex_abelian(charges, n)
        ref = schur_index_matter(TheorySpec(u1, RepSpec(tuple(((e,), 1) for e in charges)), 1), n)
        got = euler_series(c, n)
        return got == ref == euler_series(c, n, from_cohomology=False), f"{got} vs {ref}"

    def pure():
        c = brst_complex_abelian([], 8)
        p = pentagonal_euler(8)
        return not any(c.differentials.values()) and euler_series(c, 8) == p * p

    return [
        _run("brst", "charge_1_euler_equals_index", lambda: charged([1])),
        _run("brst", "charges_1_-1_euler_equals_index", lambda: charged([1, -1])),
        _run("brst", "pure_u1_zero_differential_and_pentagonal_square", pure),
    ]


_SUITE_FUNCS = {
    "tables": _tables,
    "oracles": _oracles,
    "indices": _indices,
    "junctions": _junctions,
    "complexes": _complexes,
    "brst": _brst,
}


def run_suite(suite: str = "all", order: int = 8) -> list[Check]:
    if suite == "all":
        names = SUITES
    elif suite in _SUITE_FUNCS:
        names = (suite,)
    else:
        raise KeyError(f"unknown suite {suite!r}; choose from {('all',) + SUITES}")
    checks = []
    for name in names:
        log.info("running suite %s", name)
        checks.extend(_SUITE_FUNCS[name](order))
    return checks


def report_dict(suite: str, order: int, checks: list[Check]) -> dict:
    return {
        "suite": suite,
        "order": order,
        "passed": all(c.passed for c in checks),
        "n_checks": len(checks),
        "n_failed": sum(not c.passed for c in checks),
        "checks": [asdict(c) for c in checks],
    }


def report_text(checks: list[Check]) -> str:
    lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.suite}/{c.name}  ({c.seconds:.3f}s)" for c in checks]
    for c in checks:
        if not c.passed and c.detail:
            lines.append(f"--- {c.suite}/{c.name}: {c.detail}")
    failed = sum(not c.passed for c in checks)
    lines.append(f"{len(checks) - failed}/{len(checks)} checks passed")
    return "\n".join(lines)
