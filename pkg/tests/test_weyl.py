import random
from itertools import product
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from suhiggs.errors import CapacityError, DomainError
from suhiggs.weyl import (
    Permutation,
    Root,
    SignedPermutation,
    all_permutations,
    all_signed_permutations,
    cocycle_check,
    inversion_set,
    positive_roots,
    restricted_weyl_bruteforce,
    simple_reflection,
    theta_on_matrix_positions,
    transposition,
    w0,
    w0_acts_as_theta,
    weight_stabilizer,
    weight_stabilizer_check,
)


def perms(n):
    return st.permutations(list(range(1, n + 1))).map(lambda xs: Permutation(tuple(xs)))


def _normalized(r: Root) -> Root:
    return r if r.is_positive() else -r


def inv_oracle(w: Permutation, wp: Permutation) -> frozenset:
    # Inv(w wp) as the symmetric difference of Inv(wp) and wp^{-1} Inv(w), up to sign
    moved = {_normalized(r.apply(wp.inverse())) for r in inversion_set(w)}
    return frozenset(moved ^ set(inversion_set(wp)))


def test_permutation_basics():
    s = Permutation.from_cycles(3, (1, 2))
    assert s(1) == 2 and s(3) == 3
    assert str(s) == "(1,2)" and str(Permutation.identity(4)) == "e"
    assert (s * s).is_identity()
    with pytest.raises(DomainError):
        Permutation((1, 1, 2))


def test_composition_and_action_conventions():
    a = Permutation.from_cycles(3, (1, 2))
    b = Permutation.from_cycles(3, (2, 3))
    assert (a * b)(2) == a(b(2))
    q = ("x", "y", "z")
    assert (a * b).act(q) == a.act(b.act(q))
    # value in slot k moves to slot w(k)
    assert a.act(q) == ("y", "x", "z")


@given(perms(5))
def test_inverse(w):
    assert (w * w.inverse()).is_identity()


def test_inversion_set_examples():
    assert inversion_set(Permutation.identity(3)) == frozenset()
    assert inversion_set(simple_reflection(3, 1)) == {Root(1, 2)}
    assert inversion_set(transposition(3, 1, 3)) == set(positive_roots(3))
    assert transposition(3, 1, 3).length() == 3


@given(perms(6))
def test_length_equals_inversions_and_is_inverse_invariant(w):
    assert w.length() == len(inversion_set(w)) == w.inverse().length()
    assert w.length() <= 15


@given(perms(5), perms(5))
def test_cocycle_matches_symmetric_difference(w, wp):
    assert cocycle_check(w, wp)
    assert inversion_set(w * wp) == inv_oracle(w, wp)


def test_cocycle_exhaustive_s3():
    group = list(all_permutations(3))
    assert len(group) ** 2 == 36
    assert all(cocycle_check(a, b) for a, b in product(group, group))


def test_cocycle_identity_left():
    for w in all_permutations(4):
        assert cocycle_check(Permutation.identity(4), w)


def test_w0_examples():
    assert w0(1) == transposition(3, 1, 3)
    assert str(w0(2)) == "(1,4)(2,5)"
    for p in range(1, 6):
        assert (w0(p) * w0(p)).is_identity()
        assert w0(p)(p + 1) == p + 1
    with pytest.raises(DomainError):
        w0(0)


@pytest.mark.parametrize("p", [1, 2, 3])
def test_w0_acts_as_theta(p):
    assert w0_acts_as_theta(p)


def test_theta_on_raw_positions_is_the_reversal():
    assert theta_on_matrix_positions(1) == w0(1)
    assert str(theta_on_matrix_positions(2)) == "(1,5)(2,4)"


@pytest.mark.parametrize("p,order", [(1, 2), (2, 8), (3, 48)])
def test_restricted_weyl_group(p, order):
    rep = restricted_weyl_bruteforce(p)
    assert rep.order == order == 2**p * factorial(p)
    assert rep.matches_hyperoctahedral


def test_restricted_weyl_p1_elements():
    rep = restricted_weyl_bruteforce(1)
    assert (rep.normalizer_order, rep.centralizer_order) == (2, 1)


def test_enumeration_capacity():
    with pytest.raises(CapacityError):
        restricted_weyl_bruteforce(4)


@pytest.mark.parametrize("p", [1, 2, 3])
def test_weight_stabilizer(p):
    assert weight_stabilizer_check(p)


def test_weight_stabilizer_p1():
    assert set(weight_stabilizer(1)) == {Permutation.identity(3), transposition(3, 2, 3)}
    assert len(weight_stabilizer(2)) == 24


def test_signed_permutations_form_a_group():
    elems = list(all_signed_permutations(2))
    assert len(elems) == 8
    rng = random.Random(0)
    x = (3, 7)
    for _ in range(30):
        a, b = rng.choice(elems), rng.choice(elems)
        assert (a * b).act(x) == a.act(b.act(x))
        assert (a * a.inverse()) == SignedPermutation.identity(2)
