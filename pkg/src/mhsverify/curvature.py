"""Pointwise curvature tensors of a minimal hypersurface in the 5-sphere.

Given a diagonalized shape operator with eigenvalues lambda_1..lambda_4,
the Gauss equation determines the full Riemann tensor

    R_ijkl = (1 + lambda_i lambda_j)(delta_ik delta_jl - delta_il delta_jk),

from which the Ricci tensor, the Weyl tensor and the four-dimensional
Gauss-Bonnet-Chern integrand are assembled componentwise and compared,
exactly, against their closed forms in |A|^2 and f4.

Tensors are stored as dense 4^4 tables; at this size density keeps every
index computation auditable.  Internally the same assembly code runs over
raw backend rationals (fast path for rational spectra) or ExactScalar
values (quadratic spectra such as the Clifford ones); the field is duck
typed, so there is a single algorithm either way.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple

from .coefficients import Coefficients, DEFAULT_COEFFICIENTS
from .errors import IdentityCheckError, PreconditionError
from .exact import ExactScalar, rational
from .spectrum import Spectrum, invariants

__all__ = [
    "CurvaturePoint4",
    "PointIdentityReport",
    "StructurePredicates",
    "GbcDetail",
    "riemann_from_spectrum",
    "closed_form_check",
    "gbc_integrand",
    "gbc_integrand_detail",
    "gbc_k0_reduced_coefficients",
    "special_structure_predicates",
    "verify_point_identities",
    "clifford_s2s2_gbc_total",
]

_RANGE4 = range(4)


def _field_context(s: Spectrum) -> Tuple[List[object], Callable[..., object]]:
    """Spectrum values plus a rational embedder, on the fastest field available."""
    raw = s.raw_values()
    if raw is not None:
        return list(raw), rational
    return list(s.values), ExactScalar.from_rational


def _wrap(x: object) -> ExactScalar:
    return x if isinstance(x, ExactScalar) else ExactScalar.from_rational(x)


def _build_tables(lam: Sequence[object], q: Callable[..., object]):
    """Dense Riemann, Ricci and Weyl component tables plus scalar norms."""
    zero, one = q(0), q(1)
    half, sixth, quarter = q(1, 2), q(1, 6), q(1, 4)

    riem = [[[[zero for _ in _RANGE4] for _ in _RANGE4] for _ in _RANGE4] for _ in _RANGE4]
    for i in _RANGE4:
        for j in _RANGE4:
            if i == j:
                continue
            f = one + lam[i] * lam[j]
            riem[i][j][i][j] = f
            riem[i][j][j][i] = -f

    ric = [[sum(riem[i][k][j][k] for k in _RANGE4) for j in _RANGE4] for i in _RANGE4]
    r_m = sum(riem[i][j][i][j] for i in _RANGE4 for j in _RANGE4)
    ric2 = sum(ric[i][j] * ric[i][j] for i in _RANGE4 for j in _RANGE4)

    rm6 = r_m * sixth
    weyl = [[[[zero for _ in _RANGE4] for _ in _RANGE4] for _ in _RANGE4] for _ in _RANGE4]
    w2 = zero
    for i in _RANGE4:
        for j in _RANGE4:
            for k in _RANGE4:
                for l in _RANGE4:
                    val = riem[i][j][k][l]
                    if j == l:
                        val = val - half * ric[i][k]
                    if j == k:
                        val = val + half * ric[i][l]
                    if i == k:
                        val = val - half * ric[j][l]
                    if i == l:
                        val = val + half * ric[j][k]
                    if i == k and j == l:
                        val = val + rm6
                    if i == l and j == k:
                        val = val - rm6
                    weyl[i][j][k][l] = val
                    w2 = w2 + val * val

    ring2 = ric2 - r_m * r_m * quarter
    return riem, ric, weyl, r_m, ric2, w2, ring2


def _tensor_identity_flags(riem, ric, weyl) -> Tuple[bool, bool, bool, bool]:
    """(pair symmetries, first Bianchi, Weyl trace-free, Ricci contraction)."""
    sym_ok = all(
        riem[i][j][k][l] == -riem[j][i][k][l]
        and riem[i][j][k][l] == -riem[i][j][l][k]
        and riem[i][j][k][l] == riem[k][l][i][j]
        for i in _RANGE4
        for j in _RANGE4
        for k in _RANGE4
        for l in _RANGE4
    )
    bianchi_ok = all(
        riem[i][j][k][l] + riem[i][k][l][j] + riem[i][l][j][k] == 0
        for i in _RANGE4
        for j in _RANGE4
        for k in _RANGE4
        for l in _RANGE4
    )
    trace_ok = all(
        sum(weyl[i][k][j][k] for k in _RANGE4) == 0 for i in _RANGE4 for j in _RANGE4
    )
    ricci_ok = all(
        ric[i][j] == sum(riem[i][k][j][k] for k in _RANGE4)
        for i in _RANGE4
        for j in _RANGE4
    )
    return sym_ok, bianchi_ok, trace_ok, ricci_ok


class CurvaturePoint4:
    """Full Riemann/Ricci/Weyl component tensors at a hypersurface point."""

    __slots__ = ("spectrum", "riemann", "ricci", "weyl", "r_m", "ric2", "w2", "ring2")

    def __init__(self, spectrum: Spectrum) -> None:
        if spectrum.n != 4:
            raise PreconditionError("curvature tables are specific to n = 4")
        lam, q = _field_context(spectrum)
        riem, ric, weyl, r_m, ric2, w2, ring2 = _build_tables(lam, q)
        self.spectrum = spectrum
        self.riemann = tuple(
            tuple(tuple(tuple(_wrap(riem[i][j][k][l]) for l in _RANGE4) for k in _RANGE4) for j in _RANGE4)
            for i in _RANGE4
        )
        self.ricci = tuple(tuple(_wrap(ric[i][j]) for j in _RANGE4) for i in _RANGE4)
        self.weyl = tuple(
            tuple(tuple(tuple(_wrap(weyl[i][j][k][l]) for l in _RANGE4) for k in _RANGE4) for j in _RANGE4)
            for i in _RANGE4
        )
        self.r_m = _wrap(r_m)
        self.ric2 = _wrap(ric2)
        self.w2 = _wrap(w2)
        self.ring2 = _wrap(ring2)

    def check_invariants(self) -> None:
        """Raise unless all tensor symmetries hold exactly."""
        sym_ok, bianchi_ok, trace_ok, ricci_ok = _tensor_identity_flags(
            self.riemann, self.ricci, self.weyl
        )
        if not (sym_ok and bianchi_ok and trace_ok and ricci_ok):
            raise IdentityCheckError(
                "tensor symmetry violation: "
                f"pair={sym_ok} bianchi={bianchi_ok} weyl_trace={trace_ok} ricci={ricci_ok}"
            )


def riemann_from_spectrum(s: Spectrum) -> CurvaturePoint4:
    """Populate all curvature tables from a diagonal shape operator."""
    return CurvaturePoint4(s)


def _require_minimal(s: Spectrum) -> None:
    if not s.is_minimal:
        raise PreconditionError(f"spectrum {s} is not minimal (sigma_1 != 0)")


def _scalar_invariants(lam, q):
    a2 = sum(v * v for v in lam)
    f4 = sum(v * v * v * v for v in lam)
    return a2, f4


def closed_form_check(
    s: Spectrum, coeffs: Coefficients = DEFAULT_COEFFICIENTS
) -> Tuple[ExactScalar, ExactScalar, ExactScalar]:
    """Componentwise minus closed-form residuals for R_M, |Ric|^2, |W|^2.

    All three vanish exactly for every minimal spectrum.
    """
    _require_minimal(s)
    lam, q = _field_context(s)
    _, _, _, r_m, ric2, w2, _ = _build_tables(lam, q)
    a2, f4 = _scalar_invariants(lam, q)

    def c(name: str):
        frac = coeffs.fraction(name)
        return q(frac.numerator, frac.denominator)

    res_rm = r_m - (c("scalar_curvature.const") + c("scalar_curvature.a2") * a2)
    res_ric = ric2 - (c("ricci_norm.const") + c("ricci_norm.a2") * a2 + c("ricci_norm.f4") * f4)
    res_w = w2 - (c("weyl_norm.a4") * a2 * a2 + c("weyl_norm.f4") * f4)
    return _wrap(res_rm), _wrap(res_ric), _wrap(res_w)


@dataclass(frozen=True)
class GbcDetail:
    """Both evaluation routes of the Gauss-Bonnet-Chern integrand."""

    specialized: ExactScalar  # (3/2)|A|^4 - 3 f4 - 2|A|^2 + 12
    componentwise: ExactScalar  # R_M^2/3 - |Ric|^2 + |W|^2/2 from the tables
    residual: ExactScalar


def gbc_integrand_detail(
    s: Spectrum, coeffs: Coefficients = DEFAULT_COEFFICIENTS
) -> GbcDetail:
    _require_minimal(s)
    lam, q = _field_context(s)
    _, _, _, r_m, ric2, w2, _ = _build_tables(lam, q)
    a2, f4 = _scalar_invariants(lam, q)

    def c(name: str):
        frac = coeffs.fraction(name)
        return q(frac.numerator, frac.denominator)

    specialized = c("gbc.a4") * a2 * a2 + c("gbc.f4") * f4 + c("gbc.a2") * a2 + c("gbc.const")
    componentwise = c("gbc4d.rm2") * r_m * r_m + c("gbc4d.ric2") * ric2 + c("gbc4d.w2") * w2
    return GbcDetail(
        specialized=_wrap(specialized),
        componentwise=_wrap(componentwise),
        residual=_wrap(specialized - componentwise),
    )


def gbc_integrand(s: Spectrum, coeffs: Coefficients = DEFAULT_COEFFICIENTS) -> ExactScalar:
    """The specialized integrand value; raises if the two routes disagree."""
    detail = gbc_integrand_detail(s, coeffs)
    if detail.residual.sign() != 0:
        raise IdentityCheckError(
            "specialized and componentwise GBC integrands disagree",
            [detail.residual],
        )
    return detail.specialized


def gbc_k0_reduced_coefficients(
    coeffs: Coefficients = DEFAULT_COEFFICIENTS,
) -> Tuple[ExactScalar, ExactScalar, ExactScalar]:
    """(const, linear, quadratic) coefficients of the integrand in |A|^2
    after substituting f4 = (1/2)|A|^4 on the K = 0 slice.

    With the canonical table the quadratic term cancels and the integrand
    collapses to 12 - 2|A|^2.
    """
    quad = coeffs.exact("gbc.a4") + coeffs.exact("gbc.f4") * coeffs.exact("kzero.f4_half")
    return coeffs.exact("gbc.const"), coeffs.exact("gbc.a2"), quad


@dataclass(frozen=True)
class StructurePredicates:
    locally_conformally_flat: bool
    einstein: bool
    willmore: bool


def special_structure_predicates(
    s: Spectrum, coeffs: Coefficients = DEFAULT_COEFFICIENTS
) -> StructurePredicates:
    """Conformal flatness, Einstein and Willmore tests, each certified two ways.

    The scalar criteria (|A|^4 = (12/7) f4, 4 f4 = |A|^4, f3 = 0) are
    cross-checked against the componentwise definitions (W = 0, Ric
    proportional to the identity); a mismatch raises.
    """
    _require_minimal(s)
    lam, q = _field_context(s)
    riem, ric, weyl, r_m, ric2, w2, ring2 = _build_tables(lam, q)
    a2, f4 = _scalar_invariants(lam, q)
    f3 = sum(v * v * v for v in lam)

    def c(name: str):
        frac = coeffs.fraction(name)
        return q(frac.numerator, frac.denominator)

    lcf_formula = (a2 * a2 - c("lcf.f4_ratio") * f4) == 0
    lcf_component = all(
        weyl[i][j][k][l] == 0 for i in _RANGE4 for j in _RANGE4 for k in _RANGE4 for l in _RANGE4
    )
    if lcf_formula != lcf_component:
        raise IdentityCheckError(
            "conformal-flatness criteria disagree",
            [_wrap(a2 * a2 - c("lcf.f4_ratio") * f4)],
        )

    einstein_formula = (c("einstein.f4_ratio") * f4 - a2 * a2) == 0
    quarter_rm = r_m * q(1, 4)
    einstein_component = all(
        ric[i][j] == (quarter_rm if i == j else q(0)) for i in _RANGE4 for j in _RANGE4
    )
    ring_residual = ring2 - (f4 + c("ring.a4") * a2 * a2)
    if einstein_formula != einstein_component or ring_residual != 0:
        raise IdentityCheckError(
            "Einstein criteria disagree", [_wrap(ring_residual)]
        )

    return StructurePredicates(
        locally_conformally_flat=lcf_formula,
        einstein=einstein_formula,
        willmore=(f3 == 0),
    )


@dataclass(frozen=True)
class PointIdentityReport:
    """One-pass exact verification of every pointwise identity."""

    closed_form_residuals: Tuple[ExactScalar, ExactScalar, ExactScalar]
    gbc_residual: ExactScalar
    ring_residual: ExactScalar
    symmetries_ok: bool
    bianchi_ok: bool
    weyl_trace_ok: bool
    ricci_contraction_ok: bool

    @property
    def all_ok(self) -> bool:
        return (
            self.symmetries_ok
            and self.bianchi_ok
            and self.weyl_trace_ok
            and self.ricci_contraction_ok
            and all(r.sign() == 0 for r in self.closed_form_residuals)
            and self.gbc_residual.sign() == 0
            and self.ring_residual.sign() == 0
        )


def verify_point_identities(
    s: Spectrum, coeffs: Coefficients = DEFAULT_COEFFICIENTS
) -> PointIdentityReport:
    """Residuals and symmetry flags for one minimal spectrum, single pass."""
    _require_minimal(s)
    lam, q = _field_context(s)
    riem, ric, weyl, r_m, ric2, w2, ring2 = _build_tables(lam, q)
    a2, f4 = _scalar_invariants(lam, q)

    def c(name: str):
        frac = coeffs.fraction(name)
        return q(frac.numerator, frac.denominator)

    res_rm = r_m - (c("scalar_curvature.const") + c("scalar_curvature.a2") * a2)
    res_ric = ric2 - (c("ricci_norm.const") + c("ricci_norm.a2") * a2 + c("ricci_norm.f4") * f4)
    res_w = w2 - (c("weyl_norm.a4") * a2 * a2 + c("weyl_norm.f4") * f4)
    specialized = c("gbc.a4") * a2 * a2 + c("gbc.f4") * f4 + c("gbc.a2") * a2 + c("gbc.const")
    componentwise = c("gbc4d.rm2") * r_m * r_m + c("gbc4d.ric2") * ric2 + c("gbc4d.w2") * w2
    ring_res = ring2 - (f4 + c("ring.a4") * a2 * a2)
    sym_ok, bianchi_ok, trace_ok, ricci_ok = _tensor_identity_flags(riem, ric, weyl)
    return PointIdentityReport(
        closed_form_residuals=(_wrap(res_rm), _wrap(res_ric), _wrap(res_w)),
        gbc_residual=_wrap(specialized - componentwise),
        ring_residual=_wrap(ring_res),
        symmetries_ok=sym_ok,
        bianchi_ok=bianchi_ok,
        weyl_trace_ok=trace_ok,
        ricci_contraction_ok=ricci_ok,
    )


def clifford_s2s2_gbc_total() -> Tuple[float, float]:
    """Total GBC integral over the Clifford S^2 x S^2 versus 16 pi^2 chi.

    The integrand is constant (= 16, from the (1,1,-1,-1) spectrum) and the
    closed-form volume oracle gives vol(S^2(r)) = 4 pi r^2 with r = 1/sqrt(2),
    so the total is 16 * (2 pi)^2 against chi(S^2 x S^2) = 4.
    """
    integrand = float(gbc_integrand(Spectrum([1, 1, -1, -1])))
    sphere_area = 4.0 * math.pi * 0.5
    total = integrand * sphere_area * sphere_area
    expected = 16.0 * math.pi**2 * 4.0
    return total, expected
