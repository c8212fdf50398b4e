"""Type A root data: S_{2p+1}, inversion sets, w0, restricted Weyl group.

Permutations are 1-indexed image tuples.  Composition is ``(w * v)(k) =
w(v(k))`` and the action on coordinate tuples is ``(w . q)_{w(k)} = q_k``, a
left action.  Roots ``L_i - L_j`` are index pairs, positive iff ``i < j``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import factorial
from typing import Iterator, Sequence

from .errors import CapacityError, DomainError
from .exactnum import GaussianRational, as_gr
from .lie_core import diagonal_from_slots, slots_from_diagonal, theta, theta_cartan_basis


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise DomainError(f"not a bijection of 1..{len(imgs)}: {imgs}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> "Permutation":
        img = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + type(cyc)(cyc[:1])):
                img[a - 1] = b
        return cls(tuple(img))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.n != other.n:
            raise DomainError("composing permutations of different degree")
        return Permutation(tuple(self.images[k - 1] for k in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for k, v in enumerate(self.images, start=1):
            inv[v - 1] = k
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def act(self, q: Sequence) -> tuple:
        """``(w . q)_{w(k)} = q_k``."""
        if len(q) != self.n:
            raise DomainError("tuple length does not match permutation degree")
        out = [None] * self.n
        for k, v in enumerate(q):
            out[self.images[k] - 1] = v
        return tuple(out)

    def length(self) -> int:
        return len(inversion_set(self))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(1, self.n + 1):
            if start in seen or self(start) == start:
                continue
            cyc, k = [], start
            while k not in seen:
                seen.add(k)
                cyc.append(k)
                k = self(k)
            out.append(tuple(cyc))
        return out

    def __str__(self):
        cyc = self.cycles()
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc) or "e"


def transposition(n: int, i: int, j: int) -> Permutation:
    return Permutation.from_cycles(n, (i, j))


def simple_reflection(n: int, k: int) -> Permutation:
    return transposition(n, k, k + 1)


def all_permutations(n: int) -> Iterator[Permutation]:
    for imgs in permutations(range(1, n + 1)):
        yield Permutation(imgs)


@dataclass(frozen=True, order=True)
class Root:
    """``L_i - L_j``."""

    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j:
            raise DomainError("a root needs distinct indices")

    def is_positive(self) -> bool:
        return self.i < self.j

    def __neg__(self) -> "Root":
        return Root(self.j, self.i)

    def apply(self, w: Permutation) -> "Root":
        return Root(w(self.i), w(self.j))

    def __str__(self):
        return f"L{self.i}-L{self.j}"


def positive_roots(n: int) -> list[Root]:
    return [Root(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def simple_roots(n: int) -> list[Root]:
    return [Root(k, k + 1) for k in range(1, n)]


def inversion_set(w: Permutation) -> frozenset[Root]:
    """Positive roots sent to negative roots by ``w``."""
    n = w.n
    return frozenset(
        Root(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if w(i) > w(j)
    )


def cocycle_check(w: Permutation, wp: Permutation) -> bool:
    """``Inv(w wp) == wp^{-1}(Inv w) + Inv(wp)`` with ``{a, -a}`` pairs cancelled."""
    wpi = wp.inverse()
    pool: dict[Root, int] = {}
    for r in inversion_set(w):
        rr = r.apply(wpi)
        pool[rr] = pool.get(rr, 0) + 1
    for r in inversion_set(wp):
        pool[r] = pool.get(r, 0) + 1
    for r in [r for r in pool if not r.is_positive()]:
        k = min(pool[r], pool.get(-r, 0))
        pool[r] -= k
        if k:
            pool[-r] -= k
    remaining = {r: c for r, c in pool.items() if c}
    if any(not r.is_positive() or c != 1 for r, c in remaining.items()):
        return False
    return set(remaining) == inversion_set(w * wp)


def w0(p: int) -> Permutation:
    """``prod_{i=1}^p (i, p+1+i)``."""
    if p < 1:
        raise DomainError("p must be >= 1")
    return Permutation.from_cycles(2 * p + 1, *[(i, p + 1 + i) for i in range(1, p + 1)])


def w0_acts_as_theta(p: int) -> bool:
    """Compare ``theta = Ad(J)`` with the slot permutation ``w0`` on a basis of ``d^C``."""
    w = w0(p)
    for elt in theta_cartan_basis(p):
        m = elt.matrix
        if slots_from_diagonal(theta(m)) != w.act(elt.slots()):
            return False
        # theta negates the a-part and fixes the t-part
        if theta(elt.a_matrix) != -elt.a_matrix or theta(elt.t_matrix) != elt.t_matrix:
            return False
    return True


def theta_on_matrix_positions(p: int) -> Permutation:
    """Permutation of raw diagonal positions induced by ``Ad(J)``: ``k -> 2p+2-k``."""
    n = 2 * p + 1
    probe = diagonal_from_slots(list(range(1, n + 1)))
    diag = [probe[k, k] for k in range(n)]
    img = theta(probe)
    moved = [img[k, k] for k in range(n)]
    return Permutation(tuple(moved.index(v) + 1 for v in diag))


# ---------------------------------------------------------------------------
# signed permutations


@dataclass(frozen=True)
class SignedPermutation:
    """Element of ``S_p x| Z_2^p`` acting by ``x_k -> signs_k * x_k`` moved to slot ``perm(k)``."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(self.perm))
        object.__setattr__(self, "signs", tuple(self.signs))
        Permutation(self.perm)
        if len(self.signs) != len(self.perm) or any(s not in (1, -1) for s in self.signs):
            raise DomainError("signs must be a +-1 vector matching the permutation")

    @classmethod
    def identity(cls, p: int) -> "SignedPermutation":
        return cls(tuple(range(1, p + 1)), (1,) * p)

    @property
    def p(self) -> int:
        return len(self.perm)

    def act(self, x: Sequence):
        out = [None] * self.p
        for k, v in enumerate(x):
            out[self.perm[k] - 1] = v if self.signs[k] == 1 else -v
        return tuple(out)

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        # (self * other).act(x) == self.act(other.act(x))
        perm = tuple(self.perm[other.perm[k] - 1] for k in range(self.p))
        signs = tuple(other.signs[k] * self.signs[other.perm[k] - 1] for k in range(self.p))
        return SignedPermutation(perm, signs)

    def inverse(self) -> "SignedPermutation":
        perm = [0] * self.p
        signs = [0] * self.p
        for k in range(self.p):
            perm[self.perm[k] - 1] = k + 1
            signs[self.perm[k] - 1] = self.signs[k]
        return SignedPermutation(tuple(perm), tuple(signs))


def all_signed_permutations(p: int) -> Iterator[SignedPermutation]:
    for perm in permutations(range(1, p + 1)):
        for signs in product((1, -1), repeat=p):
            yield SignedPermutation(perm, signs)


# ---------------------------------------------------------------------------
# restricted Weyl group


def a_slot_basis(p: int) -> list[tuple[int, ...]]:
    """Cameral-slot vectors of the a-generators: ``+1`` at slot k, ``-1`` at slot p+1+k."""
    n = 2 * p + 1
    out = []
    for k in range(1, p + 1):
        v = [0] * n
        v[k - 1] = 1
        v[p + k] = -1
        out.append(tuple(v))
    return out


def _a_coordinates(v: Sequence[int], p: int) -> tuple[int, ...] | None:
    """Coordinates of ``v`` in the a-basis, or None if ``v`` is not in ``a``."""
    if v[p] != 0:
        return None
    coords = tuple(v[:p])
    if any(v[p + 1 + k] != -coords[k] for k in range(p)):
        return None
    return coords


def _induced_signed_permutation(w: Permutation, p: int) -> SignedPermutation | None:
    perm, signs = [0] * p, [0] * p
    for k, e in enumerate(a_slot_basis(p)):
        c = _a_coordinates(w.act(e), p)
        if c is None:
            return None
        nz = [(j, x) for j, x in enumerate(c) if x]
        if len(nz) != 1 or abs(nz[0][1]) != 1:
            return None
        perm[k], signs[k] = nz[0][0] + 1, nz[0][1]
    return SignedPermutation(tuple(perm), tuple(signs))


@dataclass(frozen=True)
class RestrictedWeylReport:
    p: int
    normalizer_order: int
    centralizer_order: int
    order: int
    matches_hyperoctahedral: bool


MAX_ENUMERATION_P = 3


@lru_cache(maxsize=None)
def normalizer_of_a(p: int) -> tuple[Permutation, ...]:
    if p > MAX_ENUMERATION_P:
        raise CapacityError(f"brute-force enumeration of S_{2 * p + 1} is limited to p <= {MAX_ENUMERATION_P}")
    basis = a_slot_basis(p)
    return tuple(
        w
        for w in all_permutations(2 * p + 1)
        if all(_a_coordinates(w.act(e), p) is not None for e in basis)
    )


def restricted_weyl_bruteforce(p: int) -> RestrictedWeylReport:
    """``N_W(a) / C_W(a)`` by enumerating ``S_{2p+1}``."""
    if p < 1:
        raise DomainError("p must be >= 1")
    normalizer = normalizer_of_a(p)
    basis = a_slot_basis(p)
    centralizer = [w for w in normalizer if all(w.act(e) == e for e in basis)]
    induced = {w: _induced_signed_permutation(w, p) for w in normalizer}
    ok = all(s is not None for s in induced.values())
    image = set(induced.values())
    order = len(normalizer) // len(centralizer)
    if ok:
        # homomorphism, kernel = centralizer, image = all of S_p x| Z_2^p
        ident = SignedPermutation.identity(p)
        ok = (
            all(induced[a * b] == induced[a] * induced[b] for a in normalizer for b in normalizer)
            and {w for w, s in induced.items() if s == ident} == set(centralizer)
            and image == set(all_signed_permutations(p))
            and len(image) == order == 2**p * factorial(p)
        )
    return RestrictedWeylReport(p, len(normalizer), len(centralizer), order, ok)


def left_cosets(group: Sequence[Permutation], subgroup: Sequence[Permutation]) -> list[frozenset[Permutation]]:
    seen: set[Permutation] = set()
    cosets = []
    for g in group:
        if g in seen:
            continue
        c = frozenset(g * h for h in subgroup)
        seen |= c
        cosets.append(c)
    return cosets


# ---------------------------------------------------------------------------
# weight stabilizer


def weight_stabilizer(p: int) -> list[Permutation]:
    """Stabilizer of ``delta_1 : q -> q_1`` in ``S_{2p+1}``, found by testing on a generic tuple."""
    if p > MAX_ENUMERATION_P:
        raise CapacityError(f"enumeration limited to p <= {MAX_ENUMERATION_P}")
    n = 2 * p + 1
    probe = tuple(range(1, n + 1))
    return [w for w in all_permutations(n) if w.act(probe)[0] == probe[0]]


def weight_stabilizer_check(p: int) -> bool:
    stab = weight_stabilizer(p)
    return len(stab) == factorial(2 * p) and all(w(1) == 1 for w in stab)


def negate_tuple(q: Sequence[GaussianRational]) -> tuple[GaussianRational, ...]:
    return tuple(-as_gr(x) for x in q)
