"""Pointwise Hitchin map, Chevalley Jacobian, spectral fibers and eigenlines.

Everything here works over a single point of the curve.  Eigenvalues are
never solved for: spectral fibers take claimed roots and verify the
factorization exactly.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import (
    DomainError,
    GenericityError,
    InternalInconsistencyError,
    NonRegularPointError,
    ReductionError,
    RootVerificationError,
    StructureError,
)
from .exactnum import (
    ONE,
    ZERO,
    GaussianRational,
    MatrixGR,
    PolyGR,
    as_gr,
    char_poly,
    determinant,
    kernel_basis,
    matrix_rank,
    trace_exterior_power,
)
from .lie_core import HiggsPoint, is_regular, m_positions


@dataclass(frozen=True)
class BaseFiberPoint:
    """``(omega_2, omega_4, ..., omega_2p)`` at one point of the curve."""

    p: int
    omega: tuple[GaussianRational, ...]

    def __post_init__(self):
        object.__setattr__(self, "omega", tuple(as_gr(w) for w in self.omega))
        if len(self.omega) != self.p:
            raise StructureError(f"expected {self.p} coefficients, got {len(self.omega)}")

    def char_poly(self) -> PolyGR:
        """``l^{2p+1} + sum_i omega_2i l^{2(p-i)+1}``."""
        n = 2 * self.p + 1
        cs = [ZERO] * (n + 1)
        cs[n] = ONE
        for i, w in enumerate(self.omega, start=1):
            cs[n - 2 * i] = w
        return PolyGR(cs)

    @classmethod
    def from_spectrum(cls, roots: Sequence) -> "BaseFiberPoint":
        roots = [as_gr(r) for r in roots]
        if len(roots) % 2 == 0:
            raise StructureError("need 2p+1 roots")
        p = (len(roots) - 1) // 2
        poly = PolyGR.from_roots(roots)
        n = 2 * p + 1
        if any(poly.coeff(n - k) for k in range(1, n + 1, 2)):
            raise StructureError("spectrum is not negation-symmetric")
        return cls(p, tuple(poly.coeff(n - 2 * i) for i in range(1, p + 1)))


def elementary_symmetric(values: Sequence) -> list[GaussianRational]:
    """``[e_0, e_1, ..., e_n]`` of the given values."""
    e = [ONE]
    for v in values:
        v = as_gr(v)
        e = [ONE] + [e[k] + v * e[k - 1] for k in range(1, len(e))] + [v * e[-1]]
    return e


# ---------------------------------------------------------------------------
# characteristic coefficients


def char_coefficients(phi: HiggsPoint, cross_check: bool = True) -> BaseFiberPoint:
    """Hitchin map at a point.

    The determinant route gives ``det(l - phi)``; its odd characteristic
    coefficients must vanish because ``phi`` is block off-diagonal.  With
    ``cross_check`` the even ones are recomputed as ``tr(wedge^{2i} phi)``
    (sums of principal minors) and must agree.
    """
    m = phi.matrix
    n = m.nrows
    poly = char_poly(m)
    for k in range(1, n + 1, 2):
        if poly.coeff(n - k):
            raise InternalInconsistencyError(
                f"odd characteristic coefficient a_{k} = {poly.coeff(n - k)} is nonzero"
            )
    omega = tuple(poly.coeff(n - 2 * i) for i in range(1, phi.p + 1))
    if cross_check:
        for i, w in enumerate(omega, start=1):
            if trace_exterior_power(m, 2 * i) != w:
                raise InternalInconsistencyError(f"tr(wedge^{2 * i} phi) disagrees with det route")
    return BaseFiberPoint(phi.p, omega)


def odd_coefficients(phi: HiggsPoint) -> tuple[GaussianRational, ...]:
    """All odd characteristic coefficients ``a_1, a_3, ...`` (expected zero)."""
    m = phi.matrix
    n = m.nrows
    poly = char_poly(m)
    return tuple((-1) ** k * poly.coeff(n - k) for k in range(1, n + 1, 2))


@dataclass(frozen=True)
class TraceFormulaReport:
    i: int
    lhs: GaussianRational
    candidates: dict
    matched: tuple[str, ...]


def verify_even_trace_formula(phi: HiggsPoint, i: int) -> TraceFormulaReport:
    """Compare ``tr(wedge^{2i} phi)`` with several readings of the ``beta wedge gamma`` formula.

    Reports only; on the spectrum ``{0, +-x_k}`` one has
    ``e_2i = (-1)^i e_i(x_1^2, ..., x_p^2)`` while ``gamma beta`` has
    eigenvalues ``x_k^2``.
    """
    if not 1 <= i <= phi.p:
        raise DomainError(f"i must lie in 1..{phi.p}")
    lhs = trace_exterior_power(phi.matrix, 2 * i)
    bg = phi.beta @ phi.gamma
    gb = phi.gamma @ phi.beta
    t_bg = trace_exterior_power(bg, i)
    t_gb = trace_exterior_power(gb, i)
    two = GaussianRational(2) ** i
    sgn = GaussianRational(-1) ** i
    candidates = {
        "2^i tr(wedge^i(beta gamma))": two * t_bg,
        "2^i tr(wedge^i(gamma beta))": two * t_gb,
        "tr(wedge^i(beta gamma))": t_bg,
        "(-1)^i tr(wedge^i(beta gamma))": sgn * t_bg,
        "(-1)^i tr(wedge^i(gamma beta))": sgn * t_gb,
        "(-2)^i tr(wedge^i(gamma beta))": sgn * two * t_gb,
    }
    matched = tuple(k for k, v in candidates.items() if v == lhs)
    return TraceFormulaReport(i, lhs, candidates, matched)


# ---------------------------------------------------------------------------
# Chevalley Jacobian


def _matrix_powers(m: MatrixGR, top: int) -> list[MatrixGR]:
    out = [MatrixGR.identity(m.nrows)]
    for _ in range(top):
        out.append(out[-1] @ m)
    return out


def chevalley_jacobian(phi: HiggsPoint) -> MatrixGR:
    """Jacobian of ``(a_2, ..., a_2p)`` in the ``2p(p+1)`` coordinates of ``m^C``.

    Directional derivatives are exact: ``d tr(phi^k)(E) = k tr(phi^{k-1} E)``
    and the Newton identity ``k e_k = sum_j (-1)^{j-1} e_{k-j} s_j`` is
    differentiated term by term.
    """
    m = phi.matrix
    p = phi.p
    top = 2 * p
    pw = _matrix_powers(m, top)
    s = [ZERO] + [pw[k].trace() for k in range(1, top + 1)]
    e = [ONE] + [ZERO] * top
    for k in range(1, top + 1):
        acc = ZERO
        for j in range(1, k + 1):
            term = e[k - j] * s[j]
            acc = acc + term if j % 2 else acc - term
        e[k] = acc / k
    rows = [[] for _ in range(p)]
    for a, b in m_positions(p):
        ds = [ZERO] + [k * pw[k - 1][b, a] for k in range(1, top + 1)]
        de = [ZERO] * (top + 1)
        for k in range(1, top + 1):
            acc = ZERO
            for j in range(1, k + 1):
                term = de[k - j] * s[j] + e[k - j] * ds[j]
                acc = acc + term if j % 2 else acc - term
            de[k] = acc / k
        for i in range(1, p + 1):
            rows[i - 1].append(de[2 * i])
    return MatrixGR(rows)


def chevalley_jacobian_rank(phi: HiggsPoint) -> int:
    return matrix_rank(chevalley_jacobian(phi))


# ---------------------------------------------------------------------------
# spectral fibers


def _canonical_sign(x: GaussianRational) -> bool:
    """True when ``x`` is the representative of ``{x, -x}`` (sort key larger)."""
    return x.sort_key() > (-x).sort_key()


@dataclass(frozen=True)
class SpectralFiber:
    p: int
    base: BaseFiberPoint
    eigenvalues: tuple[GaussianRational, ...]
    pairing: tuple[tuple[GaussianRational, GaussianRational], ...]
    zero_multiplicity: int

    @property
    def on_intersection(self) -> bool:
        """Over the branch locus ``omega_2p = 0``: the point lies on both components."""
        return self.zero_multiplicity >= 3

    def components(self) -> tuple[tuple[GaussianRational, str], ...]:
        """One zero goes to ``X0``; the remaining roots are points of ``X1``."""
        out = [(ZERO, "X0")]
        out += [(ZERO, "X1")] * (self.zero_multiplicity - 1)
        out += [(x, "X1") for x in self.eigenvalues if x]
        return tuple(out)

    def support(self) -> tuple[GaussianRational, ...]:
        return tuple(sorted(set(self.eigenvalues), key=GaussianRational.sort_key))


def spectral_fiber(base: BaseFiberPoint, claimed_roots: Sequence) -> SpectralFiber:
    roots = [as_gr(r) for r in claimed_roots]
    n = 2 * base.p + 1
    if len(roots) != n:
        raise StructureError(f"expected {n} roots, got {len(roots)}")
    if PolyGR.from_roots(roots) != base.char_poly():
        raise RootVerificationError("claimed roots do not factor the characteristic polynomial")
    cnt = Counter(roots)
    if cnt != Counter(-r for r in roots):
        raise StructureError("root multiset is not closed under negation")
    z = cnt[ZERO]
    if z % 2 == 0:
        raise StructureError("zero must appear with odd multiplicity")
    pairs = []
    for r in sorted(cnt, key=GaussianRational.sort_key, reverse=True):
        if r and _canonical_sign(r):
            pairs += [(r, -r)] * cnt[r]
    eig = tuple(sorted(roots, key=GaussianRational.sort_key))
    return SpectralFiber(base.p, base, eig, tuple(pairs), z)


# ---------------------------------------------------------------------------
# eigenlines


@dataclass(frozen=True)
class LineFiber:
    ambient_dim: int
    vector: tuple[GaussianRational, ...]

    @classmethod
    def from_vector(cls, v: Sequence) -> "LineFiber":
        v = [as_gr(x) for x in v]
        lead = next((x for x in v if x), None)
        if lead is None:
            raise DomainError("zero vector does not span a line")
        return cls(len(v), tuple(x / lead for x in v))

    def contains(self, v: Sequence) -> bool:
        other = LineFiber.from_vector(v)
        return other.vector == self.vector


def _single_line(m: MatrixGR, what: str) -> LineFiber:
    basis = kernel_basis(m)
    if len(basis) != 1:
        raise NonRegularPointError(f"{what} has dimension {len(basis)}, expected 1")
    return LineFiber.from_vector(basis[0])


def eigenline(phi: HiggsPoint, lam) -> LineFiber:
    """Fiber of the spectral datum at the eigenvalue ``lam``.

    At regular points ``coker(lam - phi)`` and ``ker(lam - phi)`` are both
    lines; the kernel side is returned.  For ``lam = 0`` this is ``ker phi``.
    """
    lam = as_gr(lam)
    m = phi.matrix
    if char_poly(m)(lam):
        raise DomainError(f"{lam} is not an eigenvalue")
    n = m.nrows
    shifted = MatrixGR.identity(n).scale(lam) - m
    return _single_line(shifted, f"eigenspace for {lam}")


class ThetaSign(enum.IntEnum):
    PLUS = 1
    MINUS = -1
    MIXED = 0

    def __str__(self):
        return {1: "+1", -1: "-1", 0: "mixed"}[int(self)]


def _block_sign(v: Sequence[GaussianRational], split: int) -> ThetaSign:
    upper = any(v[:split])
    lower = any(v[split:])
    if upper and not lower:
        return ThetaSign.PLUS
    if lower and not upper:
        return ThetaSign.MINUS
    return ThetaSign.MIXED


def theta_eigenline_sign(phi: HiggsPoint, lam, component: Optional[str] = None) -> ThetaSign:
    """Action of ``theta'`` on the spectral-datum fiber over ``lam``.

    Over a gluing point (``lam = 0`` with multiplicity >= 3) the relevant
    fiber for the ``X1`` component is that of the U(p,p) datum, i.e. the
    kernel of the reduced field ``phi_1``; pass ``component="X0"`` for the
    kernel of ``phi`` itself.
    """
    lam = as_gr(lam)
    if component not in (None, "X0", "X1"):
        raise DomainError("component must be 'X0' or 'X1'")
    if not lam:
        mult = char_poly(phi.matrix).root_multiplicity(ZERO)
        if component is None:
            component = "X1" if mult >= 3 else "X0"
        if component == "X1":
            if mult < 3:
                raise DomainError("0 is not a point of X1 over this base point")
            red = upp_reduction(phi)
            return upp_kernel_sign(red.beta1, red.gamma1)
    line = eigenline(phi, lam)
    return _block_sign(line.vector, phi.p + 1)


# ---------------------------------------------------------------------------
# U(p,p) reduction


@dataclass(frozen=True)
class UppReduction:
    kernel: LineFiber
    beta1: MatrixGR  # W -> V1
    gamma1: MatrixGR  # V1 -> W
    complement: tuple[int, ...] = field(default=())  # 0-based V indices spanning V1

    @property
    def phi1(self) -> MatrixGR:
        p = self.beta1.nrows
        return MatrixGR.from_blocks(
            [[MatrixGR.zeros(p), self.beta1], [self.gamma1, MatrixGR.zeros(p)]]
        )


def upp_reduction(phi: HiggsPoint) -> UppReduction:
    """Quotient by ``E0 = ker phi``: the induced ``(beta1, gamma1)`` on ``V1 + W``, ``V1 = V / E0``."""
    p = phi.p
    m = phi.matrix
    basis = kernel_basis(m)
    if len(basis) != 1:
        raise ReductionError(f"kernel of phi has dimension {len(basis)}, expected 1")
    k = LineFiber.from_vector(basis[0]).vector
    if any(k[p + 1 :]):
        raise ReductionError("kernel of phi is not contained in V")
    pivot = next(j for j in range(p + 1) if k[j])
    comp = tuple(j for j in range(p + 1) if j != pivot)
    # V -> V1: v -> (v - (v_pivot / k_pivot) k) restricted to comp
    b_rows = []
    for j in comp:
        b_rows.append([phi.beta[j, c] - phi.beta[pivot, c] * k[j] for c in range(p)])
    beta1 = MatrixGR(b_rows)
    gamma1 = phi.gamma.submatrix(range(p), comp)
    red = UppReduction(LineFiber(2 * p + 1, k), beta1, gamma1, comp)
    lam_poly = PolyGR([0, 1])
    if char_poly(m) != lam_poly * char_poly(red.phi1):
        raise InternalInconsistencyError("char_poly(phi) != l * char_poly(phi_1)")
    return red


def upp_kernel_sign(beta1: MatrixGR, gamma1: MatrixGR) -> ThetaSign:
    """``theta'`` sign on ``ker phi_1`` for U(p,p) data (+1 on V1, -1 on W)."""
    p = beta1.nrows
    phi1 = MatrixGR.from_blocks([[MatrixGR.zeros(p), beta1], [gamma1, MatrixGR.zeros(p)]])
    basis = kernel_basis(phi1)
    if not basis:
        raise DomainError("phi_1 is injective: not a ramification point")
    if len(basis) != 1:
        raise NonRegularPointError(f"ker phi_1 has dimension {len(basis)}")
    return _block_sign(basis[0], p)


def upp_branch_type(beta1: MatrixGR, gamma1: MatrixGR) -> str:
    s_beta = determinant(beta1)
    s_gamma = determinant(gamma1)
    if not s_beta and not s_gamma:
        raise GenericityError("s_beta and s_gamma vanish together; B_beta and B_gamma must be disjoint")
    if not s_beta:
        return "minus"
    if not s_gamma:
        return "plus"
    return "none"


def branch_type(phi: HiggsPoint) -> str:
    """``minus`` on ``B_beta`` (``det beta1 = 0``), ``plus`` on ``B_gamma``, else ``none``."""
    if not is_regular(phi.matrix):
        raise NonRegularPointError("branch classification requires a regular Higgs field")
    red = upp_reduction(phi)
    return upp_branch_type(red.beta1, red.gamma1)
