"""Cameral-cover fibers over one base point.

A fiber is the finite set of orderings of the spectrum; ``S_{2p+1}`` acts by
permuting slots (see ``weyl.Permutation.act``).  The real subcover is the
locus ``l_i = -l_{p+1+i}``, ``l_{p+1} = 0``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from math import factorial
from typing import Sequence

from .errors import CapacityError, DomainError, StructureError
from .exactnum import ZERO, GaussianRational, as_gr
from .hitchin import BaseFiberPoint, elementary_symmetric, spectral_fiber
from .weyl import (
    MAX_ENUMERATION_P,
    Permutation,
    SignedPermutation,
    all_permutations,
    all_signed_permutations,
    left_cosets,
    normalizer_of_a,
    transposition,
    w0,
    weight_stabilizer,
)


@dataclass(frozen=True)
class CameralPoint:
    p: int
    lambdas: tuple[GaussianRational, ...]

    def __post_init__(self):
        object.__setattr__(self, "lambdas", tuple(as_gr(x) for x in self.lambdas))
        if len(self.lambdas) != 2 * self.p + 1:
            raise StructureError(f"expected {2 * self.p + 1} coordinates")

    def __neg__(self) -> "CameralPoint":
        return CameralPoint(self.p, tuple(-x for x in self.lambdas))

    def act(self, w: Permutation) -> "CameralPoint":
        return CameralPoint(self.p, w.act(self.lambdas))

    def in_real_subcover(self) -> bool:
        p, lam = self.p, self.lambdas
        return not lam[p] and all(lam[i] == -lam[p + 1 + i] for i in range(p))

    def a_coordinates(self) -> tuple[GaussianRational, ...]:
        return self.lambdas[: self.p]


def check_cameral_constraints(pt: CameralPoint, base: BaseFiberPoint) -> None:
    """Sum zero, ``sigma_2i = omega_2i`` and ``sigma_{2i+1} = 0``; raises on violation."""
    e = elementary_symmetric(pt.lambdas)
    if e[1]:
        raise StructureError("coordinates do not sum to zero")
    for k in range(1, 2 * pt.p + 2):
        if k % 2:
            if e[k]:
                raise StructureError(f"sigma_{k} = {e[k]} should vanish")
        elif e[k] != base.omega[k // 2 - 1]:
            raise StructureError(f"sigma_{k} = {e[k]} differs from omega_{k}")


@dataclass(frozen=True)
class CameralFiber:
    base: BaseFiberPoint
    points: frozenset

    @property
    def p(self) -> int:
        return self.base.p

    def __len__(self):
        return len(self.points)

    def sorted_points(self) -> list[CameralPoint]:
        return sorted(self.points, key=lambda q: tuple(x.sort_key() for x in q.lambdas))


def cameral_fiber(base: BaseFiberPoint, roots: Sequence) -> CameralFiber:
    """All orderings of the verified root multiset; degenerate orderings collapse."""
    if base.p > MAX_ENUMERATION_P:
        raise CapacityError(f"cameral fibers are enumerated for p <= {MAX_ENUMERATION_P}")
    spectral_fiber(base, roots)
    roots = tuple(as_gr(r) for r in roots)
    pts = frozenset(CameralPoint(base.p, q) for q in set(permutations(roots)))
    for q in pts:
        check_cameral_constraints(q, base)
    return CameralFiber(base, pts)


def real_subcover(fiber: CameralFiber) -> frozenset:
    return frozenset(q for q in fiber.points if q.in_real_subcover())


def quotient_to_spectral(pt: CameralPoint) -> GaussianRational:
    """``delta_1``: the first coordinate."""
    return pt.lambdas[0]


@dataclass(frozen=True)
class QuotientReport:
    image: tuple[GaussianRational, ...]  # support of the image, sorted
    orbit_sizes: dict
    fibers_are_orbits: bool


def quotient_report(fiber: CameralFiber) -> QuotientReport:
    """Fibers of ``delta_1`` on the cameral fiber compared with ``W_{delta_1}``-orbits."""
    stab = weight_stabilizer(fiber.p)
    by_value: dict[GaussianRational, set] = {}
    for q in fiber.points:
        by_value.setdefault(quotient_to_spectral(q), set()).add(q)
    ok = True
    for val, pts in by_value.items():
        q0 = next(iter(pts))
        orbit = {q0.act(w) for w in stab}
        ok = ok and orbit == pts
    image = tuple(sorted(by_value, key=GaussianRational.sort_key))
    return QuotientReport(image, {v: len(s) for v, s in by_value.items()}, ok)


def translate_partition(fiber: CameralFiber) -> list[frozenset]:
    """Distinct ``W``-translates of the real subcover inside the fiber."""
    real = real_subcover(fiber)
    out: list[frozenset] = []
    for w in all_permutations(2 * fiber.p + 1):
        t = frozenset(q.act(w) for q in real)
        if t not in out:
            out.append(t)
    return out


def component_translates(p: int) -> int:
    """``|W / W(a)|`` by coset enumeration, cross-checked on a regular fiber.

    The check uses the spectrum ``{0, +-1, ..., +-p}``: the distinct
    translates of its real subcover must be pairwise disjoint, cover the
    fiber, and be as many as the cosets.
    """
    if p > MAX_ENUMERATION_P:
        raise CapacityError(f"coset enumeration limited to p <= {MAX_ENUMERATION_P}")
    group = list(all_permutations(2 * p + 1))
    cosets = left_cosets(group, normalizer_of_a(p))
    roots = [0] + [s * k for k in range(1, p + 1) for s in (1, -1)]
    fiber = cameral_fiber(BaseFiberPoint.from_spectrum(roots), roots)
    parts = translate_partition(fiber)
    covered = frozenset().union(*parts)
    disjoint = sum(len(t) for t in parts) == len(covered)
    if not (disjoint and covered == fiber.points and len(parts) == len(cosets)):
        raise StructureError("W-translates of the real subcover do not partition the fiber")
    return len(cosets)


def hyperoctahedral_action_is_simply_transitive(fiber: CameralFiber) -> bool:
    """``S_p x| Z_2^p`` on ``(l_1..l_p)`` permutes the real subcover simply transitively."""
    real = real_subcover(fiber)
    if not real:
        return False
    p = fiber.p
    by_a = {q.a_coordinates(): q for q in real}
    q0 = next(iter(real))
    images = []
    for s in all_signed_permutations(p):
        a = s.act(q0.a_coordinates())
        if a not in by_a:
            return False
        images.append(a)
    return len(set(images)) == len(images) == len(real)


# ---------------------------------------------------------------------------
# descent of the involution


@dataclass(frozen=True)
class DescentReport:
    negation_descends: bool
    minus_theta_well_defined: bool
    minus_theta_matches_negation: bool
    membership_claim: bool  # (1,2) o w0 fixes index 1
    delta_identity_claim: bool  # -delta_1 == delta_1 o s_1 on the fiber
    sample: tuple  # (q, -theta(q)) for the first point


def minus_theta(pt: CameralPoint) -> CameralPoint:
    """``-theta``: negate, then apply ``w0``."""
    return (-pt).act(w0(pt.p))


def descent_involution_report(p: int, roots: Sequence) -> DescentReport:
    """Brute-force the descent of the involution through ``delta_1``.

    (a) global negation descends to ``l -> -l`` (asserted by callers);
    (b) whether ``-theta`` induces a well-defined map on the ``W_{delta_1}``
    quotient and whether it agrees with ``l -> -l``;
    (c) the literal claims ``(1,2) o theta in W_{delta_1}`` and
    ``-delta_1 = delta_1 o s_1``, evaluated without asserting them.
    """
    base = BaseFiberPoint.from_spectrum(roots)
    if base.p != p:
        raise DomainError(f"roots describe p={base.p}, not p={p}")
    fiber = cameral_fiber(base, roots)
    pts = fiber.sorted_points()
    neg_ok = all(quotient_to_spectral(-q) == -quotient_to_spectral(q) for q in pts)
    induced: dict[GaussianRational, set] = {}
    for q in pts:
        induced.setdefault(quotient_to_spectral(q), set()).add(quotient_to_spectral(minus_theta(q)))
    well_defined = all(len(v) == 1 for v in induced.values())
    matches = well_defined and all(next(iter(v)) == -k for k, v in induced.items())
    n = 2 * p + 1
    membership = (transposition(n, 1, 2) * w0(p))(1) == 1
    s1 = transposition(n, 1, 2)
    delta_identity = all(quotient_to_spectral(q.act(s1)) == -quotient_to_spectral(q) for q in pts)
    return DescentReport(
        neg_ok, well_defined, matches, membership, delta_identity, (pts[0], minus_theta(pts[0]))
    )


# ---------------------------------------------------------------------------
# rank one example


@dataclass(frozen=True)
class SubcoverCheck:
    label: str
    locus: str  # relation on (l, l') cutting out the subcover in the family
    displayed_locus: str
    zero_slot: int
    omega: GaussianRational  # sigma_2 at the sample parameter
    displayed_omega: GaussianRational
    involution: Permutation
    involution_swaps: bool
    displayed_locus_in_fiber: bool  # does the displayed locus satisfy sigma_3 = 0


@dataclass(frozen=True)
class SU21Report:
    l: GaussianRational
    lp: GaussianRational
    eigenvalues: tuple[GaussianRational, ...]
    sigma2: GaussianRational
    sigma3: GaussianRational
    displayed_sigma2: GaussianRational
    displayed_sigma3: GaussianRational
    sigma2_matches: bool
    sigma3_matches: bool
    subcovers: tuple[SubcoverCheck, ...]
    degenerate_point_shared: bool


def _su21_family(l: GaussianRational, lp: GaussianRational) -> CameralPoint:
    return CameralPoint(1, (l + lp, -2 * l, l - lp))


def su21_paper_example(l=1, lp=0, sample=1) -> SU21Report:
    """Rank-one family ``diag(l + l', -2l, l - l')`` against the displayed invariants.

    The displayed pair ``(l^2 - l'^2 - 4 l' l, l'(l'^2 - l^2))`` and the
    displayed subcover equations are claims under test, recorded next to the
    directly expanded values.  Each double subcover is the locus in the
    family where one slot vanishes; its two points over a common base value
    (parameter ``sample`` and its negative) must be exchanged by the stated
    transposition.
    """
    l, lp, c = as_gr(l), as_gr(lp), as_gr(sample)
    pt = _su21_family(l, lp)
    e = elementary_symmetric(pt.lambdas)
    if e[1]:
        raise StructureError("trace of the family is not zero")
    shown2 = l * l - lp * lp - 4 * lp * l
    shown3 = lp * (lp * lp - l * l)
    # label, parametrized locus, displayed locus, displayed omega(l), involution
    table = [
        ("X1", lambda t: (ZERO, t), lambda t: (t, ZERO), "l = 0", "l' = 0", lambda t: t * t, (1, 3)),
        ("X2", lambda t: (t, t), lambda t: (t, t), "l' = l", "l' = l", lambda t: -4 * t * t, (1, 2)),
        ("X3", lambda t: (t, -t), lambda t: (t, -t), "l' = -l", "l' = -l", lambda t: 4 * t * t, (2, 3)),
    ]
    checks = []
    for label, param, shown_param, locus, shown_locus, shown_omega, cyc in table:
        q_plus = _su21_family(*param(c))
        q_minus = _su21_family(*param(-c))
        ep, em = elementary_symmetric(q_plus.lambdas), elementary_symmetric(q_minus.lambdas)
        if ep[3] or em[3] or ep[2] != em[2]:
            raise StructureError(f"{label}: sample points do not lie over one base value")
        zero_slot = next(k for k, x in enumerate(q_plus.lambdas, start=1) if not x)
        w = transposition(3, *cyc)
        swaps = q_plus != q_minus and q_plus.act(w) == q_minus and q_minus.act(w) == q_plus
        on_shown = not elementary_symmetric(_su21_family(*shown_param(c)).lambdas)[3]
        checks.append(
            SubcoverCheck(label, locus, shown_locus, zero_slot, ep[2], shown_omega(c), w, swaps, on_shown)
        )
    degenerate = _su21_family(ZERO, ZERO)
    shared = all(not degenerate.lambdas[chk.zero_slot - 1] for chk in checks)
    return SU21Report(
        l, lp, pt.lambdas, e[2], e[3], shown2, shown3, e[2] == shown2, e[3] == shown3,
        tuple(checks), shared,
    )
