from __future__ import annotations

import random
from fractions import Fraction
from math import comb

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from htschur.complexes import (
    ChainComplex,
    ComplexError,
    FiniteLieAlgebra,
    LieAlgebraError,
    NonAbelianError,
    Representation,
    RepresentationError,
    bareiss_rank,
    brst_complex_abelian,
    ce_complex,
    check_resolution,
    cohomology_table,
    dense_rank,
    euler_series,
    heisenberg,
    koszul_ext_point,
    rank,
    sl2,
    sl2_irrep,
    truncated_nilpotent_current,
)
from htschur.complexes.lie import abelian
from htschur.complexes.koszul import koszul_strand
from htschur.indices import TheorySpec, schur_index_matter, schur_index_pure
from htschur.qlaurent import pentagonal_euler
from htschur.rootdata import RepSpec, builtin_group
from randcomplex import random_graded_complex

U1 = builtin_group("u1")


# -- exact rank ---------------------------------------------------------------------

entries = st.one_of(st.integers(-3, 3), st.fractions(min_value=-2, max_value=2, max_denominator=3))


@st.composite
def matrices(draw):
    nr, nc = draw(st.integers(1, 6)), draw(st.integers(1, 6))
    rows = [[0 if draw(st.booleans()) else draw(entries) for _ in range(nc)]
            for _ in range(nr)]
    if draw(st.booleans()) and nr > 1:
        # force a dependent row
        a, b = draw(st.integers(-2, 2)), draw(st.integers(-2, 2))
        rows[-1] = [a * x + b * y for x, y in zip(rows[0], rows[1 % nr])]
    return rows


@given(matrices())
@settings(max_examples=150)
def test_rank_matches_sympy(rows):
    sparse = {(i, j): Fraction(v) for i, r in enumerate(rows) for j, v in enumerate(r) if v}
    expected = sympy.Matrix([[sympy.Rational(Fraction(v).numerator, Fraction(v).denominator) for v in r]
                             for r in rows]).rank()
    assert rank(sparse, len(rows), len(rows[0])) == expected
    assert dense_rank(sparse, len(rows), len(rows[0])) == expected


def test_bareiss_small():
    assert bareiss_rank([[1, 2], [2, 4]]) == 1
    assert bareiss_rank([[0, 1], [1, 0]]) == 2
    assert bareiss_rank([]) == 0


def test_rank_shape_check():
    with pytest.raises(IndexError):
        rank({(3, 0): 1}, 2, 2)


# -- chain complexes --------------------------------------------------------------------

def test_validate_rejects_nonzero_square():
    with pytest.raises(ComplexError):
        ChainComplex({0: ["a"], 1: ["b"], 2: ["c"]}, {0: {(0, 0): 1}, 1: {(0, 0): 1}})


def test_validate_rejects_shape_and_grading():
    with pytest.raises(ComplexError):
        ChainComplex({0: ["a"], 1: ["b"]}, {0: {(1, 0): 1}})
    with pytest.raises(ComplexError):
        ChainComplex({0: ["a"], 1: ["b"]}, {0: {(0, 0): 1}}, {0: [0], 1: [1]})


def test_euler_characteristic_equals_cohomology_euler():
    c = ce_complex(heisenberg())
    h = c.cohomology()
    assert c.euler_characteristic() == sum((-1) ** k * v for k, v in h.items()) == 0


@given(st.integers(0, 10**6))
@settings(max_examples=25, deadline=None)
def test_random_graded_complexes(seed):
    c, expected = random_graded_complex(random.Random(seed))
    assert c.square_is_zero()
    got = c.graded_cohomology()
    for g, dims in expected.items():
        assert got.get(g, {k: 0 for k in dims}) == dims


@given(st.integers(0, 10**6))
@settings(max_examples=20, deadline=None)
def test_cohomology_is_permutation_invariant(seed):
    rng = random.Random(seed)
    c, _ = random_graded_complex(rng)
    perms = {k: rng.sample(range(len(b)), len(b)) for k, b in c.bases.items()}
    p = c.permuted(perms)
    assert p.graded_cohomology() == c.graded_cohomology()
    assert p.betti() == c.betti()


# -- Lie algebras ---------------------------------------------------------------------

def test_jacobi_is_checked():
    with pytest.raises(LieAlgebraError):
        # [x,y]=y, [y,z]=x, [x,z]=0 violates Jacobi
        FiniteLieAlgebra(["x", "y", "z"], {(0, 1): {1: 1}, (1, 2): {0: 1}})


def test_antisymmetry_is_checked():
    with pytest.raises(LieAlgebraError):
        FiniteLieAlgebra(["x", "y"], {(0, 1): {0: 1}, (1, 0): {0: 1}})


def test_representation_is_checked():
    bad = Representation(2, [{(0, 1): 1}, {(0, 0): 1}, {(1, 0): 1}])
    with pytest.raises(RepresentationError):
        ce_complex(sl2(), bad)


def test_ce_betti_numbers():
    assert ce_complex(sl2()).betti() == (1, 0, 0, 1)
    assert ce_complex(heisenberg()).betti() == (1, 2, 2, 1)


@pytest.mark.parametrize("d", range(5))
def test_ce_abelian_is_exterior_algebra(d):
    assert ce_complex(abelian(d)).betti() == tuple(comb(d, k) for k in range(d + 1))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_ce_nontrivial_sl2_irreps_are_acyclic(n):
    assert set(ce_complex(sl2(), sl2_irrep(n)).cohomology().values()) == {0}


def test_ce_trivial_irrep_matches_trivial_module():
    assert ce_complex(sl2(), sl2_irrep(0)).betti() == (1, 0, 0, 1)


def test_truncated_current_structure():
    assert truncated_nilpotent_current("sl2", 2).lower_central_series_dims() == [6, 3, 0]
    assert truncated_nilpotent_current("sl2", 3).lower_central_series_dims() == [9, 6, 3, 0]
    assert truncated_nilpotent_current("sl2", 1).is_abelian()


@pytest.mark.parametrize("m, betti", [
    (1, (1, 3, 3, 1)),
    (2, (1, 3, 8, 12, 8, 3, 1)),
    (3, (1, 3, 8, 20, 32, 32, 20, 8, 3, 1)),
])
def test_truncated_current_betti(m, betti):
    c = ce_complex(truncated_nilpotent_current("sl2", m))
    assert c.betti() == betti
    # nilpotent, hence unimodular: Poincare duality
    assert betti == betti[::-1]
    assert c.euler_characteristic() == 0


def test_truncated_current_graded_blocks_preserved():
    c = ce_complex(truncated_nilpotent_current("sl2", 2))
    assert c.gradings is not None
    assert c.square_is_zero()
    h1 = {g: dims[1] for g, dims in c.graded_cohomology().items() if dims.get(1)}
    # H^1 is dual to g/[g,g], spanned by the z^1 modes
    assert sorted(h1) == [(-2, -2), (-2, 0), (-2, 2)]


@given(st.integers(1, 3), st.integers(0, 3))
@settings(max_examples=12, deadline=None)
def test_ce_differential_squares_to_zero(m, n):
    assert ce_complex(truncated_nilpotent_current("sl2", m)).square_is_zero()
    assert ce_complex(sl2(), sl2_irrep(n)).square_is_zero()


# -- Koszul ---------------------------------------------------------------------------

@pytest.mark.parametrize("d", range(7))
def test_koszul_ext_is_binomial(d):
    assert koszul_ext_point(d) == tuple(comb(d, k) for k in range(d + 1))


def test_koszul_resolution_exact():
    check_resolution(3, max_degree=6)
    assert koszul_strand(2, 0).cohomology() == {0: 1}
    assert set(koszul_strand(3, 2).cohomology().values()) == {0}


def test_koszul_negative_dimension():
    with pytest.raises(ValueError):
        koszul_ext_point(-1)


# -- BRST ------------------------------------------------------------------------------

@pytest.mark.parametrize("charges", [[1], [2], [1, 1], [1, -1], [1, 2]])
def test_brst_euler_matches_index(charges):
    n = 4
    c = brst_complex_abelian(charges, n)
    v = RepSpec(tuple(((e,), 1) for e in charges))
    ref = schur_index_matter(TheorySpec(U1, v, 1), n)
    assert euler_series(c, n) == ref
    assert euler_series(c, n, from_cohomology=False) == ref


def test_brst_pure_u1():
    c = brst_complex_abelian([], 8)
    p = pentagonal_euler(8)
    assert euler_series(c, 8) == p * p == schur_index_pure(U1, 8)
    assert not any(c.differentials.values())


def test_brst_charge_one_cohomology():
    c = brst_complex_abelian([1], 4)
    assert c.square_is_zero()
    table = cohomology_table(c)
    assert table[0] == {0: 1}
    # the differential is nontrivial: some chains cancel in cohomology
    dims = sum(len(b) for b in c.bases.values())
    assert sum(sum(t.values()) for t in table.values()) < dims


@given(st.lists(st.sampled_from([-2, -1, 1, 2]), min_size=1, max_size=2), st.integers(0, 4))
@settings(max_examples=15, deadline=None)
def test_brst_random_charges(charges, n):
    c = brst_complex_abelian(charges, n)
    assert c.square_is_zero()
    assert euler_series(c, n) == euler_series(c, n, from_cohomology=False)


def test_brst_rejects_nonabelian():
    with pytest.raises(NonAbelianError):
        brst_complex_abelian([1], 4, group=builtin_group("sl2"))
    brst_complex_abelian([1], 2, group=U1)
