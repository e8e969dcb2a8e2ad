from __future__ import annotations

import pytest

from htschur.junctions import (
    IDENTITY_LINE,
    InadmissibleLineError,
    LineKind,
    borel_weil_table,
    closed_form_junction_index,
    dualizing_sheaf,
    junction_character,
    junction_index,
    p1_line_bundle_cohomology,
    parse_line,
    structure_sheaf,
)
from htschur.indices import schur_index_pure
from htschur.qlaurent import QSeries
from htschur.rootdata import builtin_group

O, OMEGA = structure_sheaf(), dualizing_sheaf()
N = 8


@pytest.mark.parametrize("n", range(-6, 7))
def test_riemann_roch(n):
    h0, h1 = p1_line_bundle_cohomology(n)
    assert len(h0) - len(h1) == n + 1


@pytest.mark.parametrize("n", range(-6, 7))
def test_serre_duality(n):
    _, h1 = p1_line_bundle_cohomology(n)
    h0_dual, _ = p1_line_bundle_cohomology(-n - 2)
    assert sorted(h1) == sorted(-w for w in h0_dual)


def test_line_bundle_weights():
    assert p1_line_bundle_cohomology(2) == ((2, 0, -2), ())
    assert p1_line_bundle_cohomology(-1) == ((), ())
    assert p1_line_bundle_cohomology(-4) == ((), (2, 0, -2))


def test_structure_sheaf_table():
    t = borel_weil_table(0)
    assert t.entries == {0: [(0, (0,))], 1: [(1, (2, 0, 0, -2))], 2: [(2, (2, 0, -2))]}


def test_dualizing_sheaf_table():
    t = borel_weil_table(-2)
    assert t.entries == {0: [(1, (0,))], 1: [(1, (0,)), (2, (0,))], 2: [(2, (0,))]}


def test_table_euler_characters():
    one, q = QSeries.one(1, 4), QSeries.monomial(2, (0,), 4)
    qs2, qsm2 = QSeries.monomial(2, (2,), 4), QSeries.monomial(2, (-2,), 4)
    assert borel_weil_table(0).euler_character(4) == (one - q) * (one - q - qs2 - qsm2)
    assert borel_weil_table(-2).euler_character(4) == -((one - q) * (one + q))


def test_unsupported_twist():
    with pytest.raises(ValueError):
        borel_weil_table(1)


@pytest.mark.parametrize("pair", [(O, O), (O, OMEGA)], ids=["O_O", "O_Omega"])
@pytest.mark.parametrize("half_order", [2, 5, 8])
def test_closed_form_matches_assembly(pair, half_order):
    assert junction_index(*pair, half_order) == closed_form_junction_index(*pair, half_order)


def test_frozen_values():
    assert junction_index(O, O, N).integer_q_scalars() == [1, -1, 1, 1, -1]
    assert junction_index(O, OMEGA, N).integer_q_scalars() == [-1, 0, 1, -1, -1]
    assert all(v == 0 for v in junction_index(O, O, N).scalars()[1::2])


def test_identity_pair_is_vacuum():
    assert junction_index(IDENTITY_LINE, IDENTITY_LINE, N) == schur_index_pure(builtin_group("sl2"), N)
    u1 = builtin_group("u1")
    assert junction_index(IDENTITY_LINE, IDENTITY_LINE, 6, group=u1) == schur_index_pure(u1, 6)


def test_half_shift():
    plain = junction_index(O, OMEGA, N)
    shifted = junction_index(O, OMEGA, N, half_shift=True)
    assert shifted == plain.shift(1)
    assert shifted.scalars()[:2] == [0, -1]


def test_character_is_fugacity_symmetric():
    chi = junction_character(O, O, 6)
    assert chi == chi.negate_fugacities()


def test_admissibility():
    with pytest.raises(InadmissibleLineError):
        junction_index(O, O, N, group=builtin_group("sl2"))
    with pytest.raises(InadmissibleLineError):
        junction_index(OMEGA, O, N)
    with pytest.raises(InadmissibleLineError):
        junction_index(IDENTITY_LINE, O, N)
    with pytest.raises(InadmissibleLineError):
        closed_form_junction_index(IDENTITY_LINE, IDENTITY_LINE, N)


def test_parse_line():
    assert parse_line("O") == O
    assert parse_line("omega") == OMEGA
    assert parse_line("1") == IDENTITY_LINE
    assert parse_line("Omega").kind is LineKind.DUALIZING
    with pytest.raises(InadmissibleLineError):
        parse_line("W")
