import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_centralizer_dim
from suhiggs.errors import DomainError, ShapeError
from suhiggs.exactnum import ONE, MatrixGR, PolyGR, char_poly, determinant
from suhiggs.lie_core import (
    HiggsPoint,
    cartan_m_element,
    centralizer_dim_g,
    centralizer_dim_m,
    centralizer_H_profile,
    conjugate_by_H,
    diagonal_from_slots,
    in_h,
    in_m,
    is_regular,
    is_regular_g,
    j_pq,
    m_basis,
    m_coordinates,
    quasi_split_crosscheck,
    regular_nilpotent,
    slots_from_diagonal,
    theta,
    theta_cartan_basis,
    theta_prime,
    ThetaCartanElement,
)
from suhiggs.sampling import random_higgs, random_invertible

seeds = st.integers(0, 2**32 - 1)


def ones(n):
    return MatrixGR([[1] * n for _ in range(n)])


def test_higgs_point_shape_errors_name_expected_shape():
    with pytest.raises(ShapeError, match=r"beta must be \(3\)x\(2\)"):
        HiggsPoint(2, MatrixGR.zeros(2, 2), MatrixGR.zeros(2, 3))
    with pytest.raises(ShapeError, match="gamma"):
        HiggsPoint(1, MatrixGR.zeros(2, 1), MatrixGR.zeros(2, 1))


def test_theta_prime_examples():
    assert theta_prime(MatrixGR.identity(3)) == MatrixGR.identity(3)
    out = theta_prime(ones(3))
    # V = {0, 1}, W = {2}
    for i in range(3):
        for j in range(3):
            straddles = (i < 2) != (j < 2)
            assert out[i, j] == (-1 if straddles else 1)


@given(seeds, st.integers(1, 3))
def test_higgs_fields_are_odd(seed, p):
    phi = random_higgs(random.Random(seed), p)
    assert theta_prime(phi.matrix) == -phi.matrix
    assert in_m(phi.matrix)
    assert HiggsPoint.from_matrix(phi.matrix) == phi


def test_from_matrix_rejects_non_m():
    with pytest.raises(DomainError):
        HiggsPoint.from_matrix(MatrixGR.identity(3))


def test_j_is_an_involution():
    for p in (1, 2, 3):
        j = j_pq(p)
        assert j @ j == MatrixGR.identity(2 * p + 1)
        assert theta(j) == j
        assert theta(MatrixGR.identity(2 * p + 1)) == MatrixGR.identity(2 * p + 1)


@pytest.mark.parametrize("p", [1, 2, 3])
def test_theta_negates_a_and_fixes_t(p):
    for e in theta_cartan_basis(p):
        assert theta(e.a_matrix) == -e.a_matrix
        assert theta(e.t_matrix) == e.t_matrix
        assert not e.matrix.trace()


def test_theta_on_rank_one_cartan():
    # slots (a + b, -2b, -a + b)
    e = ThetaCartanElement([3], [5])
    assert e.slots() == (8, -10, 2)
    img = theta(e.matrix)
    assert slots_from_diagonal(img) == (2, -10, 8)


def test_slot_round_trip():
    vals = [1, 2, 3, 4, 5]
    assert slots_from_diagonal(diagonal_from_slots(vals)) == tuple(vals)
    # p = 2: slot 4 (= p+1+1) sits at position 5
    assert diagonal_from_slots(vals)[4, 4] == 4


def test_m_coordinates_round_trip():
    phi = random_higgs(random.Random(3), 2)
    coords = m_coordinates(phi.matrix)
    rebuilt = MatrixGR.zeros(5)
    for c, b in zip(coords, m_basis(2)):
        rebuilt = rebuilt + b * c
    assert rebuilt == phi.matrix


@pytest.mark.parametrize(
    "x,expected",
    [((1,), 1), ((1, 2), 2), ((2, 1, 3), 3)],
)
def test_centralizer_of_regular_cartan(x, expected):
    assert centralizer_dim_m(cartan_m_element(x)) == expected


def test_centralizer_grows_at_repeated_values():
    assert centralizer_dim_m(cartan_m_element((1, 1))) > 2
    assert centralizer_dim_m(cartan_m_element((1, -1))) > 2
    assert centralizer_dim_m(cartan_m_element((0, 2))) > 2


@given(seeds, st.integers(1, 2))
def test_centralizer_matches_brute_force(seed, p):
    rng = random.Random(seed)
    x = random_higgs(rng, p, bound=1).matrix
    assert centralizer_dim_m(x) == brute_centralizer_dim(x, m_basis(p))


def test_regularity_examples():
    assert is_regular(cartan_m_element([1]))
    assert not is_regular(MatrixGR.zeros(3))
    assert centralizer_dim_m(MatrixGR.zeros(3)) == 4
    n = regular_nilpotent(1)
    # e2 -> e3 -> e1 -> 0
    assert n[2, 1] == 1 and n[0, 2] == 1
    assert is_regular(n)


@pytest.mark.parametrize("p", [1, 2, 3])
def test_regular_nilpotent(p):
    n = regular_nilpotent(p)
    assert in_m(n)
    assert char_poly(n) == PolyGR.monomial(2 * p + 1)
    assert is_regular(n) and is_regular_g(n)


@pytest.mark.parametrize("p", [1, 2, 3])
def test_centralizer_in_h_is_abelian_of_dimension_p(p):
    prof = centralizer_H_profile(p)
    assert (prof.dimension, prof.abelian) == (p, True)
    for c in prof.basis:
        assert in_h(c)
        for x in (cartan_m_element([k + 1 for k in range(p)]),):
            assert c.commutator(x).is_zero()


@given(seeds, st.integers(1, 2))
def test_quasi_split_crosscheck(seed, p):
    rng = random.Random(seed)
    assert quasi_split_crosscheck(random_higgs(rng, p, bound=1).matrix)
    assert quasi_split_crosscheck(cartan_m_element([rng.randint(-2, 2) for _ in range(p)]))


def test_g_centralizer_of_zero():
    assert centralizer_dim_g(MatrixGR.zeros(3)) == 8


def test_cartan_char_polys():
    assert char_poly(cartan_m_element([2])) == PolyGR([0, -4, 0, 1])
    assert cartan_m_element([0]).is_zero()
    assert char_poly(cartan_m_element([1, 2])) == PolyGR([0, 4, 0, -5, 0, 1])


def test_conjugation_examples():
    m = cartan_m_element([1])
    assert conjugate_by_H(m, MatrixGR.identity(2), MatrixGR.identity(1)) == m
    a = MatrixGR([[1, 1], [0, 1]])
    out = conjugate_by_H(m, a, MatrixGR([[ONE]]))
    assert char_poly(out) == PolyGR([0, -1, 0, 1])
    assert in_m(out)
    with pytest.raises(DomainError):
        conjugate_by_H(m, MatrixGR.zeros(2), MatrixGR([[ONE]]))


@given(seeds)
def test_conjugation_preserves_blocks_and_invariants(seed):
    rng = random.Random(seed)
    phi = random_higgs(rng, 2)
    a, b = random_invertible(rng, 3), random_invertible(rng, 2)
    assert determinant(a) and determinant(b)
    out = conjugate_by_H(phi.matrix, a, b)
    assert in_m(out)
    assert char_poly(out) == char_poly(phi.matrix)
    assert centralizer_dim_m(out) == centralizer_dim_m(phi.matrix)
