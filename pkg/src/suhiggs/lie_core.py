"""Matrix realizations of su(p+1, p) inside sl(2p+1, C).

Two realizations live side by side and are never converted silently:

* the block realization used for Higgs fields: ``theta_prime = Ad(I_{p+1,p})``
  with ``h = block-diagonal`` (V of rank p+1, then W of rank p) and
  ``m = block off-diagonal``;
* the diagonal realization used for Weyl-group and cameral work:
  ``theta = Ad(J)`` with ``J`` antidiagonal and the Cartan ``d = a + t``.

Cameral coordinates.  A point of the cameral cover is an ordered tuple
``(l_1, ..., l_{2p+1})``; slot ``k`` is read off the diagonal matrix position
``diagonal_position(k, p)``.  Slots ``1..p+1`` sit in positions ``1..p+1`` and
slot ``p+1+i`` sits in position ``2p+2-i``, so that the antidiagonal ``J``
pairs slot ``i`` with slot ``p+1+i`` and acts on slots exactly as
``w0 = prod (i, p+1+i)``.  For p = 1 this is the identity map.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, ShapeError
from .exactnum import (
    ONE,
    ZERO,
    GaussianRational,
    MatrixGR,
    as_gr,
    determinant,
    inverse,
    kernel_basis,
    matrix_rank,
)


def _odd_size(m: MatrixGR) -> int:
    if not m.is_square() or m.nrows % 2 == 0:
        raise ShapeError(f"expected a square matrix of odd size 2p+1, got {m.shape}")
    return (m.nrows - 1) // 2


@dataclass(frozen=True)
class HiggsPoint:
    """Value of an SU(p+1,p) Higgs field at one point: ``phi = [[0, beta], [gamma, 0]]``."""

    p: int
    beta: MatrixGR  # (p+1) x p, W -> V
    gamma: MatrixGR  # p x (p+1), V -> W

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 1:
            raise ShapeError(f"p must be a positive integer, got {self.p!r}")
        if self.beta.shape != (self.p + 1, self.p):
            raise ShapeError(f"beta must be ({self.p + 1})x({self.p}), got {self.beta.shape}")
        if self.gamma.shape != (self.p, self.p + 1):
            raise ShapeError(f"gamma must be ({self.p})x({self.p + 1}), got {self.gamma.shape}")

    @property
    def matrix(self) -> MatrixGR:
        p = self.p
        return MatrixGR.from_blocks(
            [[MatrixGR.zeros(p + 1), self.beta], [self.gamma, MatrixGR.zeros(p)]]
        )

    @classmethod
    def from_matrix(cls, m: MatrixGR) -> "HiggsPoint":
        p = _odd_size(m)
        if theta_prime(m) != -m:
            raise DomainError("matrix is not block off-diagonal for the (p+1, p) split")
        v, w = range(p + 1), range(p + 1, 2 * p + 1)
        return cls(p, m.submatrix(v, w), m.submatrix(w, v))

    @classmethod
    def zero(cls, p: int) -> "HiggsPoint":
        return cls(p, MatrixGR.zeros(p + 1, p), MatrixGR.zeros(p, p + 1))


# ---------------------------------------------------------------------------
# involutions


def i_pq(p: int) -> MatrixGR:
    """``I_{p+1,p} = diag(1,...,1,-1,...,-1)``."""
    return MatrixGR.diagonal([1] * (p + 1) + [-1] * p)


def j_pq(p: int) -> MatrixGR:
    """Antidiagonal ``J`` with ``-1`` in the centre and ``+1`` elsewhere on the antidiagonal."""
    n = 2 * p + 1
    rows = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        rows[i][n - 1 - i] = -ONE if i == p else ONE
    return MatrixGR(rows)


def theta_prime(m: MatrixGR) -> MatrixGR:
    """``Ad(I_{p+1,p})``: fixes the block diagonal, negates the off-diagonal blocks."""
    p = _odd_size(m)
    n = m.nrows
    sgn = [1] * (p + 1) + [-1] * p
    return MatrixGR._trusted(
        tuple(tuple(m[i, j] if sgn[i] == sgn[j] else -m[i, j] for j in range(n)) for i in range(n)),
        n,
    )


def theta(m: MatrixGR) -> MatrixGR:
    """``Ad(J)``; ``J`` is its own inverse."""
    p = _odd_size(m)
    jm = j_pq(p)
    return jm @ m @ jm


def in_m(x: MatrixGR) -> bool:
    _odd_size(x)
    return theta_prime(x) == -x


def in_h(x: MatrixGR) -> bool:
    _odd_size(x)
    return theta_prime(x) == x and not x.trace()


# ---------------------------------------------------------------------------
# coordinates on m^C


def m_positions(p: int) -> list[tuple[int, int]]:
    """0-based matrix positions spanning ``m^C``: beta entries first, then gamma."""
    v, w = range(p + 1), range(p + 1, 2 * p + 1)
    return [(i, j) for i in v for j in w] + [(i, j) for i in w for j in v]


def m_basis(p: int) -> list[MatrixGR]:
    n = 2 * p + 1
    return [MatrixGR.unit(n, n, i, j) for i, j in m_positions(p)]


def m_coordinates(x: MatrixGR) -> tuple[GaussianRational, ...]:
    p = _odd_size(x)
    return tuple(x[i, j] for i, j in m_positions(p))


def _require_m(x: MatrixGR) -> int:
    p = _odd_size(x)
    if theta_prime(x) != -x:
        raise DomainError("element does not lie in m^C (theta' does not negate it)")
    return p


def _ad_matrix(x: MatrixGR, positions: Sequence[tuple[int, int]], targets) -> MatrixGR:
    """Matrix of ``y -> [y, x]`` from span(E_ij, positions) into the target entries."""
    n = x.nrows
    cols = []
    for i, j in positions:
        # [E_ij, x] = E_ij x - x E_ij; row i gets row j of x, column j gets minus column i of x
        col = {}
        for c in range(n):
            v = x[j, c]
            if v:
                col[(i, c)] = col.get((i, c), ZERO) + v
        for r in range(n):
            v = x[r, i]
            if v:
                col[(r, j)] = col.get((r, j), ZERO) - v
        cols.append([col.get(t, ZERO) for t in targets])
    return MatrixGR(list(zip(*cols))) if cols else MatrixGR.zeros(0, 0)


def _h_positions(p: int) -> list[tuple[int, int]]:
    v, w = range(p + 1), range(p + 1, 2 * p + 1)
    return [(i, j) for i in v for j in v] + [(i, j) for i in w for j in w]


def centralizer_dim_m(x: MatrixGR) -> int:
    """``dim {y in m^C : [y, x] = 0}``, solved in the 2p(p+1) coordinates of ``m^C``."""
    p = _require_m(x)
    pos = m_positions(p)
    # [m, m] lands in the block diagonal
    ad = _ad_matrix(x, pos, _h_positions(p))
    return len(pos) - matrix_rank(ad)


def is_regular(x: MatrixGR) -> bool:
    p = _require_m(x)
    return centralizer_dim_m(x) == p


def centralizer_dim_g(x: MatrixGR) -> int:
    """Centralizer dimension in ``sl(2p+1)`` (the gl centralizer minus the scalars)."""
    n = x.nrows
    if not x.is_square():
        raise ShapeError("centralizer of a non-square matrix")
    pos = [(i, j) for i in range(n) for j in range(n)]
    ad = _ad_matrix(x, pos, pos)
    return len(pos) - matrix_rank(ad) - 1


def is_regular_g(x: MatrixGR) -> bool:
    """Regularity in ``sl(2p+1)``: centralizer of dimension ``2p``."""
    return centralizer_dim_g(x) == x.nrows - 1


# ---------------------------------------------------------------------------
# Cartan subalgebras


def cartan_m_element(x: Sequence) -> MatrixGR:
    """Element of the maximal anisotropic Cartan ``(a')^C``.

    Zero first row and column; the lower-right ``2p x 2p`` block is
    ``[[0, X], [X^t, 0]]`` with ``X`` antidiagonal, ``X[k, p-1-k] = x_k``.
    Its spectrum is ``{0} + {+x_k, -x_k}``.
    """
    xs = [as_gr(v) for v in x]
    p = len(xs)
    if p < 1:
        raise ShapeError("need at least one coordinate")
    n = 2 * p + 1
    upd = {}
    for k, v in enumerate(xs):
        r, c = 1 + k, p + 1 + (p - 1 - k)
        upd[(r, c)] = v
        upd[(c, r)] = v
    return MatrixGR.zeros(n).with_entries(upd)


def cartan_m_basis(p: int) -> list[MatrixGR]:
    return [cartan_m_element([1 if k == j else 0 for k in range(p)]) for j in range(p)]


def diagonal_position(slot: int, p: int) -> int:
    """1-based diagonal position holding cameral slot ``slot`` (see module docstring)."""
    if not 1 <= slot <= 2 * p + 1:
        raise DomainError(f"slot {slot} out of range for p={p}")
    if slot <= p + 1:
        return slot
    return 2 * p + 2 - (slot - p - 1)


def diagonal_from_slots(values: Sequence) -> MatrixGR:
    vals = [as_gr(v) for v in values]
    n = len(vals)
    if n % 2 == 0:
        raise ShapeError("need 2p+1 slot values")
    p = (n - 1) // 2
    diag = [ZERO] * n
    for k, v in enumerate(vals, start=1):
        diag[diagonal_position(k, p) - 1] = v
    return MatrixGR.diagonal(diag)


def slots_from_diagonal(m: MatrixGR) -> tuple[GaussianRational, ...]:
    p = _odd_size(m)
    if any(m[i, j] for i in range(m.nrows) for j in range(m.ncols) if i != j):
        raise DomainError("matrix is not diagonal")
    return tuple(m[diagonal_position(k, p) - 1, diagonal_position(k, p) - 1] for k in range(1, 2 * p + 2))


@dataclass(frozen=True)
class ThetaCartanElement:
    """Element ``a + t`` of the theta-stable Cartan ``d^C = a^C + t^C``.

    In cameral slots, the a-part is ``(A, 0, -A)`` and the t-part is
    ``(B, -2 tr B, B)`` with ``A = diag(a)``, ``B = diag(t)``.
    """

    a: tuple
    t: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(as_gr(v) for v in self.a))
        object.__setattr__(self, "t", tuple(as_gr(v) for v in self.t))
        if len(self.a) != len(self.t) or not self.a:
            raise ShapeError("a and t must both have p >= 1 entries")

    @property
    def p(self) -> int:
        return len(self.a)

    def a_slots(self) -> tuple[GaussianRational, ...]:
        return self.a + (ZERO,) + tuple(-v for v in self.a)

    def t_slots(self) -> tuple[GaussianRational, ...]:
        tr = sum(self.t, ZERO)
        return self.t + (-2 * tr,) + self.t

    def slots(self) -> tuple[GaussianRational, ...]:
        return tuple(x + y for x, y in zip(self.a_slots(), self.t_slots()))

    @property
    def matrix(self) -> MatrixGR:
        return diagonal_from_slots(self.slots())

    @property
    def a_matrix(self) -> MatrixGR:
        return diagonal_from_slots(self.a_slots())

    @property
    def t_matrix(self) -> MatrixGR:
        return diagonal_from_slots(self.t_slots())


def theta_cartan_basis(p: int) -> list[ThetaCartanElement]:
    """Basis of ``d^C``: p generators of ``a^C`` followed by p of ``t^C``."""
    unit = [[1 if k == j else 0 for k in range(p)] for j in range(p)]
    zero = [0] * p
    return [ThetaCartanElement(u, zero) for u in unit] + [ThetaCartanElement(zero, u) for u in unit]


# ---------------------------------------------------------------------------
# centralizer of (a')^C in h^C


@dataclass(frozen=True)
class CentralizerProfile:
    p: int
    dimension: int
    abelian: bool
    basis: tuple[MatrixGR, ...]


def centralizer_H_profile(p: int) -> CentralizerProfile:
    """Lie algebra ``c_h((a')^C)``: trace-free block-diagonal ``h`` commuting with ``(a')^C``."""
    if p < 1:
        raise DomainError("p must be >= 1")
    n = 2 * p + 1
    hpos = _h_positions(p)
    all_pos = [(i, j) for i in range(n) for j in range(n)]
    blocks = [_ad_matrix(mb, hpos, all_pos) for mb in cartan_m_basis(p)]
    trace_row = [[ONE if i == j else ZERO for i, j in hpos]]
    system = MatrixGR([r for b in blocks for r in b.rows] + trace_row)
    vecs = kernel_basis(system)
    basis = tuple(MatrixGR.zeros(n).with_entries({pos: c for pos, c in zip(hpos, v) if c}) for v in vecs)
    abelian = all(a.commutator(b).is_zero() for k, a in enumerate(basis) for b in basis[k + 1 :])
    return CentralizerProfile(p, len(basis), abelian, basis)


def quasi_split_crosscheck(x: MatrixGR) -> bool:
    """Regular in ``m^C`` iff regular in ``g^C`` (quasi-split lemma), checked on ``x``."""
    return is_regular(x) == is_regular_g(x)


# ---------------------------------------------------------------------------
# isotropy action


def conjugate_by_H(m: MatrixGR, A: MatrixGR, B: MatrixGR) -> MatrixGR:
    """``g m g^{-1}`` with ``g = diag(A, B)``, A of size p+1 and B of size p."""
    p = _odd_size(m)
    if A.shape != (p + 1, p + 1) or B.shape != (p, p):
        raise ShapeError(f"need A {(p + 1, p + 1)} and B {(p, p)}, got {A.shape}, {B.shape}")
    if not determinant(A) or not determinant(B):
        raise DomainError("A and B must be invertible")
    g = MatrixGR.from_blocks([[A, MatrixGR.zeros(p + 1, p)], [MatrixGR.zeros(p, p + 1), B]])
    ginv = MatrixGR.from_blocks(
        [[inverse(A), MatrixGR.zeros(p + 1, p)], [MatrixGR.zeros(p, p + 1), inverse(B)]]
    )
    return g @ m @ ginv


def regular_nilpotent(p: int) -> MatrixGR:
    """A regular nilpotent in ``m^C``: the chain ``v_{p+1} -> w_p -> v_p -> ... -> w_1 -> v_1 -> 0``.

    Basis vectors alternate between V (indices 0..p) and W (indices p+1..2p).
    """
    n = 2 * p + 1
    chain = []
    for k in range(p, -1, -1):
        chain.append(k)  # v_{k+1}
        if k > 0:
            chain.append(p + k)  # w_k
    upd = {}
    for src, dst in zip(chain, chain[1:]):
        upd[(dst, src)] = ONE
    m = MatrixGR.zeros(n).with_entries(upd)
    return m
