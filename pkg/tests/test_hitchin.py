import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import derivative_at_zero, principal_minor_sum
from suhiggs.errors import (
    DomainError,
    GenericityError,
    NonRegularPointError,
    ReductionError,
    RootVerificationError,
    StructureError,
)
from suhiggs.exactnum import MatrixGR, PolyGR, char_poly, determinant, matrix_rank
from suhiggs.hitchin import (
    BaseFiberPoint,
    ThetaSign,
    branch_type,
    char_coefficients,
    chevalley_jacobian,
    chevalley_jacobian_rank,
    eigenline,
    elementary_symmetric,
    odd_coefficients,
    spectral_fiber,
    theta_eigenline_sign,
    upp_branch_type,
    upp_kernel_sign,
    upp_reduction,
    verify_even_trace_formula,
)
from suhiggs.lie_core import (
    HiggsPoint,
    cartan_m_element,
    centralizer_dim_m,
    conjugate_by_H,
    is_regular,
    m_basis,
    regular_nilpotent,
)
from suhiggs.sampling import (
    conjugate_higgs,
    random_higgs,
    regular_semisimple,
    spectrum_of,
    su_minus_degeneration,
    upp_degeneration,
)
from suhiggs.weyl import all_signed_permutations

seeds = st.integers(0, 2**32 - 1)


def cartan(*xs):
    return HiggsPoint.from_matrix(cartan_m_element(xs))


# --- characteristic coefficients -------------------------------------------


def test_char_coefficient_examples():
    assert char_coefficients(cartan(2)).omega == (-4,)
    assert char_coefficients(HiggsPoint.zero(2)).omega == (0, 0)
    assert char_coefficients(cartan(1, 2)).omega == (-5, 4)


@given(seeds, st.integers(1, 3))
def test_odd_coefficients_vanish(seed, p):
    phi = random_higgs(random.Random(seed), p)
    assert not any(odd_coefficients(phi))
    poly = char_poly(phi.matrix)
    # P(-l) = -P(l)
    assert all(poly.coeff(k) == 0 for k in range(0, 2 * p + 2, 2))


@given(seeds, st.integers(1, 2))
def test_char_coefficients_match_minor_sums(seed, p):
    phi = random_higgs(random.Random(seed), p)
    omega = char_coefficients(phi).omega
    assert omega == tuple(principal_minor_sum(phi.matrix, 2 * i) for i in range(1, p + 1))


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=3), st.data())
def test_invariants_under_signed_permutations(xs, data):
    p = len(xs)
    base = char_coefficients(cartan(*xs))
    s = data.draw(st.sampled_from(list(all_signed_permutations(p))))
    assert char_coefficients(cartan(*s.act(xs))) == base


def test_base_point_from_spectrum():
    assert BaseFiberPoint.from_spectrum([0, 1, -1, 2, -2]).omega == (-5, 4)
    assert BaseFiberPoint(1, (-4,)).char_poly() == PolyGR([0, -4, 0, 1])
    with pytest.raises(StructureError):
        BaseFiberPoint.from_spectrum([0, 1, 2])


def test_elementary_symmetric():
    assert elementary_symmetric([1, 2, 3]) == [1, 6, 11, 6]


# --- trace formula readings (report only) ----------------------------------


def test_trace_formula_report_at_cartan():
    rep = verify_even_trace_formula(cartan(1), 1)
    assert rep.lhs == -1
    assert rep.candidates["2^i tr(wedge^i(beta gamma))"] == 2
    assert "2^i tr(wedge^i(beta gamma))" not in rep.matched
    assert "(-1)^i tr(wedge^i(gamma beta))" in rep.matched


def test_trace_formula_zero_field():
    rep = verify_even_trace_formula(HiggsPoint.zero(1), 1)
    assert set(rep.matched) == set(rep.candidates)


def test_trace_formula_range():
    with pytest.raises(DomainError):
        verify_even_trace_formula(cartan(1), 2)


# --- Jacobian --------------------------------------------------------------


def jacobian_oracle(phi: HiggsPoint) -> MatrixGR:
    """Differentiate ``e_2i(phi + tE)`` by interpolation in ``t``."""
    p = phi.p
    rows = [[] for _ in range(p)]
    for b in m_basis(p):
        for i in range(1, p + 1):
            vals = [principal_minor_sum(phi.matrix + b * t, 2 * i) for t in range(2 * i + 1)]
            rows[i - 1].append(derivative_at_zero(vals))
    return MatrixGR(rows)


@given(seeds, st.integers(1, 2))
def test_jacobian_matches_interpolation(seed, p):
    phi = random_higgs(random.Random(seed), p, bound=2)
    assert chevalley_jacobian(phi) == jacobian_oracle(phi)


def test_jacobian_rank_examples():
    assert chevalley_jacobian_rank(cartan(1)) == 1
    assert chevalley_jacobian_rank(HiggsPoint.zero(1)) == 0
    assert chevalley_jacobian_rank(HiggsPoint.from_matrix(regular_nilpotent(1))) == 1


@given(seeds, st.integers(1, 3))
def test_regularity_equivalence_on_constructed_points(seed, p):
    rng = random.Random(seed)
    phi, _ = regular_semisimple(rng, p)
    assert chevalley_jacobian_rank(phi) == p == centralizer_dim_m(phi.matrix)
    nil = conjugate_higgs(rng, regular_nilpotent(p))
    assert chevalley_jacobian_rank(nil) == p and is_regular(nil.matrix)


# --- spectral fibers -------------------------------------------------------


def test_spectral_fiber_examples():
    f = spectral_fiber(BaseFiberPoint(1, (-4,)), [0, 2, -2])
    assert not f.on_intersection
    assert f.components()[0] == (0, "X0")
    assert {frozenset(pr) for pr in f.pairing} >= {frozenset((2, -2))}
    g = spectral_fiber(BaseFiberPoint(1, (0,)), [0, 0, 0])
    assert g.on_intersection
    spectral_fiber(BaseFiberPoint(2, (-5, 4)), [0, 1, -1, 2, -2])


def test_spectral_fiber_errors():
    with pytest.raises(RootVerificationError):
        spectral_fiber(BaseFiberPoint(1, (-4,)), [0, 1, -1])
    with pytest.raises(StructureError):
        spectral_fiber(BaseFiberPoint(1, (-4,)), [0, 2])


# --- eigenlines and theta signs --------------------------------------------


def test_eigenline_examples():
    phi = cartan(2)
    assert eigenline(phi, 2).vector == (0, 1, 1)
    assert eigenline(phi, 0).vector == (1, 0, 0)
    with pytest.raises(DomainError):
        eigenline(phi, 1)


def test_eigenline_non_regular():
    with pytest.raises(NonRegularPointError):
        eigenline(HiggsPoint.zero(1), 0)


@given(seeds, st.integers(1, 3))
def test_eigenlines_at_regular_semisimple_points(seed, p):
    phi, xs = regular_semisimple(random.Random(seed), p)
    m = phi.matrix
    for lam in spectrum_of(xs):
        line = eigenline(phi, lam)
        assert m.apply(line.vector) == tuple(lam * c for c in line.vector)
        assert matrix_rank(m - MatrixGR.identity(2 * p + 1) * lam) == 2 * p


def test_theta_sign_examples():
    phi = cartan(2)
    assert theta_eigenline_sign(phi, 0) is ThetaSign.PLUS
    assert theta_eigenline_sign(phi, 2) is ThetaSign.MIXED
    assert str(ThetaSign.MINUS) == "-1"


# --- U(p,p) reduction and branch types -------------------------------------


def test_reduction_of_cartan():
    red = upp_reduction(cartan(2))
    assert red.kernel.vector == (1, 0, 0)
    assert red.beta1 == MatrixGR([[2]]) and red.gamma1 == MatrixGR([[2]])
    assert branch_type(cartan(2)) == "none"


@pytest.mark.parametrize("p", [1, 2, 3])
def test_reduction_of_regular_nilpotent(p):
    phi = HiggsPoint.from_matrix(regular_nilpotent(p))
    red = upp_reduction(phi)
    assert char_poly(red.phi1) == PolyGR.monomial(2 * p)
    if p == 1:
        # e2 -> e3 -> e1: beta1 sends e3 to the class of e1, which is zero
        assert red.beta1 == MatrixGR([[0]]) and red.gamma1 == MatrixGR([[1]])
    assert branch_type(phi) == "minus"
    assert theta_eigenline_sign(phi, 0) is ThetaSign.MINUS


def test_reduction_errors():
    with pytest.raises(ReductionError):
        upp_reduction(HiggsPoint.zero(1))
    with pytest.raises(NonRegularPointError):
        branch_type(cartan(0, 1))


@given(seeds, st.integers(1, 3))
def test_reduction_spectral_consistency(seed, p):
    phi, _ = regular_semisimple(random.Random(seed), p)
    red = upp_reduction(phi)
    assert char_poly(phi.matrix) == PolyGR([0, 1]) * char_poly(red.phi1)


@given(seeds, st.integers(1, 3), st.sampled_from(["plus", "minus"]))
def test_upp_kernel_sign_matches_branch_type(seed, p, kind):
    d = upp_degeneration(random.Random(seed), p, kind)
    assert upp_branch_type(d.beta1, d.gamma1) == kind
    assert upp_kernel_sign(d.beta1, d.gamma1) == (ThetaSign.PLUS if kind == "plus" else ThetaSign.MINUS)


@given(seeds, st.integers(1, 3))
def test_su_level_minus_degenerations(seed, p):
    phi = su_minus_degeneration(random.Random(seed), p)
    assert is_regular(phi.matrix)
    assert branch_type(phi) == "minus"
    assert theta_eigenline_sign(phi, 0) is ThetaSign.MINUS
    assert theta_eigenline_sign(phi, 0, component="X0") is ThetaSign.PLUS


def test_regular_fields_never_have_singular_gamma1():
    # ker(phi) is a line, so gamma is injective on V / E0
    rng = random.Random(5)
    for p in (1, 2):
        for _ in range(20):
            phi = su_minus_degeneration(rng, p)
            assert determinant(upp_reduction(phi).gamma1) != 0


def test_branch_type_genericity():
    z = MatrixGR([[0]])
    with pytest.raises(GenericityError):
        upp_branch_type(z, z)


def test_conjugated_cartan_reduction():
    m = conjugate_by_H(cartan_m_element([2]), MatrixGR([[1, 1], [0, 1]]), MatrixGR([[3]]))
    red = upp_reduction(HiggsPoint.from_matrix(m))
    assert char_poly(red.phi1) == PolyGR([-4, 0, 1])
