"""Seeded generators of test data: Higgs fields, spectra, degenerations.

All generators take a ``random.Random`` so that runs are reproducible.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .exactnum import GaussianRational, MatrixGR, as_gr, determinant, matrix_rank
from .lie_core import (
    HiggsPoint,
    cartan_m_element,
    conjugate_by_H,
    is_regular,
    regular_nilpotent,
)


def random_scalar(rng: random.Random, bound: int = 3, gaussian: bool = True) -> GaussianRational:
    re = rng.randint(-bound, bound)
    im = rng.randint(-bound, bound) if gaussian else 0
    return as_gr((re, im))


def random_matrix(rng: random.Random, nrows: int, ncols: int, bound: int = 3, gaussian: bool = True) -> MatrixGR:
    return MatrixGR([[random_scalar(rng, bound, gaussian) for _ in range(ncols)] for _ in range(nrows)])


def random_invertible(rng: random.Random, n: int, bound: int = 2) -> MatrixGR:
    while True:
        m = random_matrix(rng, n, n, bound)
        if determinant(m):
            return m


def random_rank_deficient(rng: random.Random, n: int, bound: int = 2) -> MatrixGR:
    """An ``n x n`` matrix of rank exactly ``n - 1``."""
    while True:
        left = random_matrix(rng, n, n - 1, bound)
        right = random_matrix(rng, n - 1, n, bound)
        m = left @ right if n > 1 else MatrixGR.zeros(1)
        if matrix_rank(m) == n - 1:
            return m


def random_higgs(rng: random.Random, p: int, bound: int = 3) -> HiggsPoint:
    return HiggsPoint(p, random_matrix(rng, p + 1, p, bound), random_matrix(rng, p, p + 1, bound))


def conjugate_higgs(rng: random.Random, m: MatrixGR) -> HiggsPoint:
    p = (m.nrows - 1) // 2
    out = conjugate_by_H(m, random_invertible(rng, p + 1), random_invertible(rng, p))
    return HiggsPoint.from_matrix(out)


def regular_cartan_parameters(rng: random.Random, p: int, bound: int = 4) -> tuple[GaussianRational, ...]:
    """Nonzero ``x_k`` with ``x_i != +-x_j``: the element is regular semisimple."""
    while True:
        xs = [random_scalar(rng, bound) for _ in range(p)]
        if all(xs) and len({x * x for x in xs}) == p:
            return tuple(xs)


def degenerate_cartan_parameters(rng: random.Random, p: int, bound: int = 4) -> tuple[GaussianRational, ...]:
    """A zero entry or a repeated square; never regular."""
    xs = list(regular_cartan_parameters(rng, p, bound))
    k = rng.randrange(p)
    if p == 1 or rng.random() < 0.5:
        xs[k] = as_gr(0)
    else:
        j = (k + 1 + rng.randrange(p - 1)) % p
        xs[k] = xs[j] if rng.random() < 0.5 else -xs[j]
    return tuple(xs)


def regular_semisimple(rng: random.Random, p: int) -> tuple[HiggsPoint, tuple[GaussianRational, ...]]:
    xs = regular_cartan_parameters(rng, p)
    return conjugate_higgs(rng, cartan_m_element(xs)), xs


def spectrum_of(xs: Sequence) -> list[GaussianRational]:
    xs = [as_gr(x) for x in xs]
    return [as_gr(0)] + [s * x for x in xs for s in (1, -1)]


def random_regular_spectrum(rng: random.Random, p: int, bound: int = 6, gaussian: bool = False) -> list[GaussianRational]:
    while True:
        xs = [random_scalar(rng, bound, gaussian) for _ in range(p)]
        if all(xs) and len({x * x for x in xs}) == p:
            return spectrum_of(xs)


@dataclass(frozen=True)
class Degeneration:
    """U(p,p) data with exactly one of ``beta1``, ``gamma1`` singular."""

    beta1: MatrixGR
    gamma1: MatrixGR
    expected: str  # "plus" when gamma1 is singular, "minus" when beta1 is


def upp_degeneration(rng: random.Random, p: int, kind: str) -> Degeneration:
    if kind == "plus":
        return Degeneration(random_invertible(rng, p), random_rank_deficient(rng, p), kind)
    if kind == "minus":
        return Degeneration(random_rank_deficient(rng, p), random_invertible(rng, p), kind)
    raise ValueError(f"unknown degeneration kind {kind!r}")


def su_minus_degeneration(rng: random.Random, p: int, attempts: int = 200) -> HiggsPoint:
    """A regular SU(p+1,p) field over a gluing point whose reduction has ``det beta1 = 0``.

    Built as ``V = V1 + <e>`` with ``gamma(e) = 0``; the U(p,p) part is a
    ``minus`` degeneration and the ``e``-row of ``beta`` is random.  The result
    is conjugated by a random element of ``H``.
    """
    for _ in range(attempts):
        d = upp_degeneration(rng, p, "minus")
        e_row = [random_scalar(rng, 2) for _ in range(p)]
        beta = MatrixGR([e_row] + [list(r) for r in d.beta1.rows])
        gamma = MatrixGR([[as_gr(0)] + list(r) for r in d.gamma1.rows])
        phi = HiggsPoint(p, beta, gamma)
        if is_regular(phi.matrix):
            return conjugate_higgs(rng, phi.matrix)
    raise RuntimeError("could not build a regular degeneration")


def nilpotent_sample(rng: random.Random, p: int) -> HiggsPoint:
    return conjugate_higgs(rng, regular_nilpotent(p))
