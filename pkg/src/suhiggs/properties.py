"""Seeded property suite across all modules, plus a discrepancy appendix.

Asserted properties must hold on every trial.  Open-question checks are
evaluated on the same random data but only tallied in the appendix.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from math import factorial
from typing import Callable

from . import audit
from .cameral import (
    cameral_fiber,
    descent_involution_report,
    quotient_report,
    quotient_to_spectral,
    real_subcover,
    su21_paper_example,
)
from .exactnum import ZERO, char_poly, determinant, poly_eval_matrix
from .hitchin import (
    BaseFiberPoint,
    chevalley_jacobian_rank,
    eigenline,
    odd_coefficients,
    theta_eigenline_sign,
    upp_branch_type,
    upp_kernel_sign,
    verify_even_trace_formula,
)
from .lie_core import (
    HiggsPoint,
    cartan_m_element,
    centralizer_dim_m,
    theta_prime,
)
from .sampling import (
    degenerate_cartan_parameters,
    conjugate_higgs,
    nilpotent_sample,
    random_higgs,
    random_matrix,
    random_regular_spectrum,
    random_scalar,
    regular_semisimple,
    spectrum_of,
    su_minus_degeneration,
    upp_degeneration,
)
from .weyl import Permutation, cocycle_check, inversion_set

MAX_SUITE_P = 3
CAMERAL_SUITE_P = 2  # (2p+1)! points per fiber


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 0
    p_max: int = 2
    trials: int = 50

    def __post_init__(self):
        if not 1 <= self.p_max <= MAX_SUITE_P:
            raise ValueError(f"p_max must lie in 1..{MAX_SUITE_P}")
        if self.trials < 0:
            raise ValueError("trials must be nonnegative")


# ---------------------------------------------------------------------------
# asserted properties: (rng, p) -> bool


def _prop_field_axioms(rng, p):
    a, b, c = (random_scalar(rng, 9) for _ in range(3))
    ok = (a + b) * c == a * c + b * c and a - a == ZERO
    if b:
        ok = ok and (a / b) * b == a
    return ok and a.conjugate().conjugate() == a


def _prop_det_multiplicative(rng, p):
    n = 2 * p + 1
    a, b = random_matrix(rng, n, n), random_matrix(rng, n, n)
    return determinant(a @ b) == determinant(a) * determinant(b)


def _prop_cayley_hamilton(rng, p):
    m = random_matrix(rng, 2 * p + 1, 2 * p + 1)
    return poly_eval_matrix(char_poly(m), m).is_zero()


def _prop_odd_vanishing(rng, p):
    return not any(odd_coefficients(random_higgs(rng, p)))


def _prop_theta_prime(rng, p):
    m = random_higgs(rng, p).matrix
    return theta_prime(m) == -m and theta_prime(theta_prime(m)) == m


def _mixed_sample(rng, p) -> HiggsPoint:
    kind = rng.randrange(5)
    if kind == 0:
        return regular_semisimple(rng, p)[0]
    if kind == 1:
        return conjugate_higgs(rng, cartan_m_element(degenerate_cartan_parameters(rng, p)))
    if kind == 2:
        return nilpotent_sample(rng, p)
    if kind == 3:
        return HiggsPoint.zero(p)
    return random_higgs(rng, p, bound=1)


def _prop_regularity(rng, p):
    phi = _mixed_sample(rng, p)
    return (chevalley_jacobian_rank(phi) == p) == (centralizer_dim_m(phi.matrix) == p)


def _random_perm(rng, n):
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Permutation(tuple(images))


def _prop_cocycle(rng, p):
    n = 2 * p + 1
    return cocycle_check(_random_perm(rng, n), _random_perm(rng, n))


def _prop_length(rng, p):
    w = _random_perm(rng, 2 * p + 1)
    return w.length() == len(inversion_set(w)) == w.inverse().length()


def _prop_eigenline(rng, p):
    phi, xs = regular_semisimple(rng, p)
    m = phi.matrix
    for lam in spectrum_of(xs):
        v = eigenline(phi, lam).vector
        if m.apply(v) != tuple(lam * c for c in v):
            return False
    return True


def _prop_branch_sign(rng, p):
    kind = rng.choice(["plus", "minus"])
    d = upp_degeneration(rng, p, kind)
    want = 1 if kind == "plus" else -1
    ok = int(upp_kernel_sign(d.beta1, d.gamma1)) == want and upp_branch_type(d.beta1, d.gamma1) == kind
    if kind == "minus":
        phi = su_minus_degeneration(rng, p)
        ok = ok and int(theta_eigenline_sign(phi, 0)) == -1
    return ok


def _prop_cameral_counts(rng, p):
    p = min(p, CAMERAL_SUITE_P)
    roots = random_regular_spectrum(rng, p)
    fiber = cameral_fiber(BaseFiberPoint.from_spectrum(roots), roots)
    rep = quotient_report(fiber)
    image = Counter(quotient_to_spectral(q) for q in fiber.points)
    return (
        len(fiber) == factorial(2 * p + 1)
        and len(real_subcover(fiber)) == 2**p * factorial(p)
        and set(rep.orbit_sizes.values()) == {factorial(2 * p)}
        and rep.fibers_are_orbits
        and set(image) == set(roots)
    )


def _prop_negation_descends(rng, p):
    p = min(p, CAMERAL_SUITE_P)
    return descent_involution_report(p, random_regular_spectrum(rng, p)).negation_descends


def _prop_degree_dictionary(rng, p):
    pp, g = rng.randint(1, 5), rng.randint(2, 10)
    lo, hi = audit.stable_bounds(pp, g)
    # positive branch: the signed window lo < deg F_- < hi
    window = range(lo + 1, hi)
    passing = [f for f in window if audit.stable_range(pp, g, f)]
    inside = all(abs(audit.deg_W_from_F(pp, g, f)) < pp * (g - 1) for f in window)
    return inside and len(passing) == len(window) == audit.component_count(pp, g)


def _prop_dimension_identity(rng, p):
    pp, g = rng.randint(1, 8), rng.randint(2, 12)
    return audit.dimension_report(pp, g).identity_ok


def _prop_torsor_rank(rng, p):
    pp, g = rng.randint(1, 3), rng.randint(2, 4)
    c = audit.count_gluing_points(pp, g, samples=2)
    return c.counted == c.expected == 4 * pp * (g - 1)


PROPERTIES: dict[str, Callable] = {
    "exactnum.field_axioms": _prop_field_axioms,
    "exactnum.det_multiplicative": _prop_det_multiplicative,
    "exactnum.cayley_hamilton": _prop_cayley_hamilton,
    "lie_core.theta_prime_on_m": _prop_theta_prime,
    "hitchin.odd_vanishing": _prop_odd_vanishing,
    "hitchin.regularity_equivalence": _prop_regularity,
    "hitchin.eigenline": _prop_eigenline,
    "hitchin.branch_sign": _prop_branch_sign,
    "weyl.cocycle": _prop_cocycle,
    "weyl.length_is_inversions": _prop_length,
    "cameral.fiber_counts": _prop_cameral_counts,
    "cameral.negation_descends": _prop_negation_descends,
    "audit.degree_dictionary": _prop_degree_dictionary,
    "audit.dimension_identity": _prop_dimension_identity,
    "audit.torsor_rank": _prop_torsor_rank,
}


# ---------------------------------------------------------------------------
# report-only checks


def _appendix(rng: random.Random, p_max: int, trials: int) -> dict:
    readings: Counter = Counter()
    n_trace = 0
    for t in range(trials):
        p = 1 + t % p_max
        phi = random_higgs(rng, p)
        for i in range(1, p + 1):
            n_trace += 1
            for name in verify_even_trace_formula(phi, i).matched:
                readings[name] += 1
    descent = descent_involution_report(1, [0, 2, -2])
    su21 = su21_paper_example(1, 0)
    return {
        "trace_formula": {
            "evaluations": n_trace,
            "matches": {k: readings[k] for k in sorted(readings)},
        },
        "descent_lemma": {
            "minus_theta_well_defined": descent.minus_theta_well_defined,
            "minus_theta_matches_negation": descent.minus_theta_matches_negation,
            "membership_claim": descent.membership_claim,
            "delta_identity_claim": descent.delta_identity_claim,
        },
        "su21_example": {
            "sigma2": str(su21.sigma2),
            "displayed_sigma2": str(su21.displayed_sigma2),
            "sigma3": str(su21.sigma3),
            "displayed_sigma3": str(su21.displayed_sigma3),
            "sigma2_matches": su21.sigma2_matches,
            "sigma3_matches": su21.sigma3_matches,
            "subcovers": {
                c.label: {
                    "locus": c.locus,
                    "displayed_locus": c.displayed_locus,
                    "displayed_locus_in_fiber": c.displayed_locus_in_fiber,
                    "omega": str(c.omega),
                    "displayed_omega": str(c.displayed_omega),
                    "involution": str(c.involution),
                    "involution_swaps": c.involution_swaps,
                }
                for c in su21.subcovers
            },
        },
    }


@dataclass
class SuiteSummary:
    config: SuiteConfig
    counts: dict = field(default_factory=dict)  # name -> [passed, failed]
    failures: list = field(default_factory=list)  # (name, trial, p)
    appendix: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "seed": self.config.seed,
            "p_max": self.config.p_max,
            "trials": self.config.trials,
            "ok": self.ok,
            "counts": {k: {"passed": v[0], "failed": v[1]} for k, v in sorted(self.counts.items())},
            "failures": [list(f) for f in self.failures],
            "appendix": self.appendix,
        }


def run_property_suite(seed: int = 0, p_max: int = 2, trials: int = 50) -> SuiteSummary:
    cfg = SuiteConfig(seed, p_max, trials)
    summary = SuiteSummary(cfg, {name: [0, 0] for name in PROPERTIES})
    for name, prop in PROPERTIES.items():
        # one stream per property so adding a property does not shift the others
        rng = random.Random(f"{seed}:{name}")
        for t in range(trials):
            p = 1 + t % p_max
            try:
                ok = bool(prop(rng, p))
            except Exception as exc:  # a crash is a failure of the property
                ok = False
                summary.failures.append((name, t, p, f"{type(exc).__name__}: {exc}"))
            else:
                if not ok:
                    summary.failures.append((name, t, p, "property returned false"))
            summary.counts[name][0 if ok else 1] += 1
    if trials:
        summary.appendix = _appendix(random.Random(f"{seed}:appendix"), p_max, trials)
    return summary
