"""Global degree arithmetic: Milnor-Wood, degree dictionaries, dimensions.

Everything here is integer numerology; no curve is built.  The one bridge to
the pointwise modules is ``count_gluing_points``, which counts branch points
of a synthetic one-parameter family through ``hitchin.spectral_fiber``.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import DomainError, StructureError
from .exactnum import PolyGR, as_gr
from .hitchin import BaseFiberPoint, spectral_fiber


def _require_genus(g: int) -> None:
    if g < 2:
        raise DomainError(f"genus must be at least 2, got {g}")


def _require_rank(p: int) -> None:
    if p < 1:
        raise DomainError(f"rank must be at least 1, got {p}")


def milnor_wood(p: int, g: int, deg_W: int) -> bool:
    _require_genus(g)
    return abs(deg_W) <= p * (g - 1)


def deg_W_from_F(p: int, g: int, deg_F_minus: int) -> int:
    return deg_F_minus - 2 * p * (p - 1) * (g - 1)


def deg_W_from_F_plus(p: int, g: int, deg_F_plus: int) -> int:
    return deg_F_plus - (2 * p * p - 2 * p + 1) * (g - 1)


def stable_bounds(p: int, g: int) -> tuple[int, int]:
    """Open window for ``deg F_-``; the lower end is negative at ``p = 1``."""
    return (2 * p * p - 3 * p) * (g - 1), (2 * p * p - p) * (g - 1)


def stable_range(p: int, g: int, deg_F_minus: int) -> bool:
    lo, hi = stable_bounds(p, g)
    ok = lo < abs(deg_F_minus) < hi
    # on the positive branch the window is the open Milnor-Wood interval for deg W
    if deg_F_minus >= 0 and ok != (abs(deg_W_from_F(p, g, deg_F_minus)) < p * (g - 1)):
        raise StructureError("stable window and Milnor-Wood interior disagree")
    return ok


def component_count(p: int, g: int) -> int:
    """Integers strictly inside the Milnor-Wood interval."""
    _require_genus(g)
    return 2 * p * (g - 1) - 1


def h0_K_power(m: int, g: int) -> int:
    """``h^0(K^m)`` for ``m >= 2`` by Riemann-Roch (the bundle is nonspecial)."""
    if m < 2:
        raise DomainError("only powers m >= 2 are nonspecial for every curve")
    return (2 * m - 1) * (g - 1)


@dataclass(frozen=True)
class DimensionReport:
    p: int
    g: int
    base_dim: int
    fiber_dim: int
    moduli_dim: int
    identity_ok: bool


def dimension_report(p: int, g: int) -> DimensionReport:
    _require_genus(g)
    _require_rank(p)
    base = sum(h0_K_power(2 * k, g) for k in range(1, p + 1))
    base_upp = base  # invariant degrees 2, 4, ..., 2p on both sides
    fiber = 4 * p * (g - 1) + (4 * p * p * (g - 1) + 1 - base_upp) - 1
    group_dim = (2 * p + 1) ** 2 - 1 - ((p + 1) ** 2 + p * p - 1)
    moduli = 2 * group_dim * (g - 1)
    assert moduli == 4 * p * (p + 1) * (g - 1)
    return DimensionReport(p, g, base, fiber, moduli, base + fiber == moduli)


def torsor_rank(p: int, g: int) -> int:
    """Gluing points of the two spectral components: ``deg K^{2p}``."""
    _require_genus(g)
    return 2 * p * (2 * g - 2)


@dataclass(frozen=True)
class NormDegrees:
    deg_L0: int
    deg_Nm_quotient: int


def norm_degrees(p: int, g: int, deg_F1: int) -> NormDegrees:
    return NormDegrees(
        -deg_F1 - p * (2 * p + 1) * (2 * g - 2),
        -p * (p - 1) * (2 * g - 2),
    )


@dataclass(frozen=True)
class E0Degree:
    deg_E0: int
    negative: bool


def E0_degree_relation(p: int, g: int, deg_W: int, deg_B_gamma: int) -> E0Degree:
    if deg_B_gamma < 0:
        raise DomainError("deg B_gamma must be nonnegative")
    d = 2 * deg_W - 2 * p * (g - 1) - deg_B_gamma
    return E0Degree(d, d < 0)


@dataclass
class DegreeLedger:
    p: int
    g: int
    deg_F_minus: Optional[int] = None
    deg_F_plus: Optional[int] = None
    derived: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)


def build_ledger(p: int, g: int, deg_F_minus: Optional[int] = None,
                 deg_F_plus: Optional[int] = None) -> DegreeLedger:
    """Fill every derived quantity the given degrees determine.

    When both degrees are supplied the two dictionaries are compared and
    ``dictionaries_agree`` records whether ``deg F_+ - deg F_- = g - 1``;
    the ledger does not insist on it.
    """
    _require_genus(g)
    _require_rank(p)
    dims = dimension_report(p, g)
    d: dict = {
        "torsor_rank": torsor_rank(p, g),
        "component_count": component_count(p, g),
        "base_dim": dims.base_dim,
        "fiber_dim": dims.fiber_dim,
        "moduli_dim": dims.moduli_dim,
        "dimension_identity_ok": dims.identity_ok,
        "deg_Nm_quotient": norm_degrees(p, g, 0).deg_Nm_quotient,
        "deg_L0_offset": -p * (2 * p + 1) * (2 * g - 2),
    }
    deg_W = None
    if deg_F_minus is not None:
        deg_W = deg_W_from_F(p, g, deg_F_minus)
        d["stable"] = stable_range(p, g, deg_F_minus)
    if deg_F_plus is not None:
        w_plus = deg_W_from_F_plus(p, g, deg_F_plus)
        if deg_W is None:
            deg_W = w_plus
        else:
            d["deg_W_from_F_plus"] = w_plus
            d["dictionaries_agree"] = w_plus == deg_W
    if deg_W is not None:
        d["deg_W"] = deg_W
        d["milnor_wood_ok"] = milnor_wood(p, g, deg_W)
        d["interior"] = abs(deg_W) < p * (g - 1)
        # the B_gamma = 0 end of the E_0 bound
        d["deg_E0_at_empty_B_gamma"] = E0_degree_relation(p, g, deg_W, 0).deg_E0
    return DegreeLedger(p, g, deg_F_minus, deg_F_plus, d)


# ---------------------------------------------------------------------------
# gluing points in a synthetic family


@dataclass(frozen=True)
class GluingCount:
    expected: int
    counted: int
    zeros: tuple[int, ...]
    off_zero_samples: int


def _family_base(p: int, s_value, tail: tuple) -> BaseFiberPoint:
    lam = PolyGR.monomial(1)
    poly = lam * (lam * lam - PolyGR([as_gr(s_value)]))
    for a in tail:
        poly = poly * (lam * lam - PolyGR([as_gr(a) * as_gr(a)]))
    n = 2 * p + 1
    return BaseFiberPoint(p, tuple(poly.coeff(n - 2 * i) for i in range(1, p + 1)))


def count_gluing_points(p: int, g: int, samples: int = 8) -> GluingCount:
    """Count spectral branch points over a family with simple zeros of ``omega_2p``.

    The family is ``lambda (lambda^2 - s(t)) prod_{i>=2} (lambda^2 - a_i^2)``
    with ``s(t) = prod_j (t - j)`` over ``4p(g-1)`` integer zeros and fixed
    distinct ``a_i``; ``omega_2p`` is a nonzero multiple of ``s``.  At each zero
    the fiber is verified to sit on the intersection; at half-integer samples
    it must not.
    """
    _require_genus(g)
    _require_rank(p)
    n_zeros = torsor_rank(p, g)
    zeros = tuple(range(1, n_zeros + 1))
    tail = tuple(range(2, p + 1))

    def s(t):
        out = Fraction(1)
        for z in zeros:
            out *= t - z
        return out

    counted = 0
    for z in zeros:
        base = _family_base(p, s(z), tail)
        if base.omega[-1] != 0:
            raise StructureError("omega_2p should vanish at a zero of s")
        roots = [0, 0, 0] + [sign * a for a in tail for sign in (1, -1)]
        if spectral_fiber(base, roots).on_intersection:
            counted += 1
    for k in range(samples):
        t = Fraction(2 * k + 1, 2)
        base = _family_base(p, s(t), tail)
        if base.char_poly().root_multiplicity(0) != 1:
            raise StructureError(f"unexpected branch point at t={t}")
    return GluingCount(n_zeros, counted, zeros, samples)
