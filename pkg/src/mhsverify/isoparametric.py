"""Cartan's fundamental formula and the constant-curvature case analysis.

For an isoparametric hypersurface of the unit sphere with distinct
principal curvatures mu_1 < ... < mu_g of multiplicities m_1..m_g,
Cartan's formula states, for each fixed i,

    sum_{j != i} m_j (1 + mu_i mu_j) / (mu_i - mu_j) = 0.

This module evaluates that residual exactly, clears denominators into
polynomials certified by multi-point interpolation (every equation in
scope has degree <= 3, so four sample points pin it down), and runs the
three-case contradiction showing that a minimal isoparametric
hypersurface in the 5-sphere with zero Gauss-Kronecker curvature must be
totally geodesic.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, List, Optional, Sequence, Tuple

from .certificates import Certificate, CertificateKind
from .errors import IdentityCheckError, PreconditionError
from .exact import ExactScalar, ONE, Ordering, scalar, solve_quadratic
from .polynomials import lagrange_interpolate, poly_trim, strip_zero_roots
from .spectrum import Spectrum, invariants

__all__ = [
    "IsoparametricData",
    "CaseK0",
    "cartan_residual",
    "munzner_allowed_set",
    "munzner_a2",
    "assert_case_hypotheses",
    "case_analysis_k0",
    "isoparametric_k0_conclusion",
    "clifford_spectrum",
    "clifford_data",
]

_VALID_G = (1, 2, 3, 4, 6)


@dataclass(frozen=True)
class IsoparametricData:
    """Distinct principal curvatures with multiplicities, mu strictly increasing."""

    mu: Tuple[ExactScalar, ...]
    m: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.mu) != len(self.m) or not self.mu:
            raise PreconditionError("mu and m must be nonempty and aligned")
        if any(mult < 1 for mult in self.m):
            raise PreconditionError("multiplicities must be positive")
        for a, b in zip(self.mu, self.mu[1:]):
            if a.compare(b) is not Ordering.LT:
                raise PreconditionError("distinct principal curvatures must be strictly increasing")

    @property
    def g(self) -> int:
        return len(self.mu)

    @property
    def n(self) -> int:
        return sum(self.m)

    def spectrum(self) -> Spectrum:
        values: List[ExactScalar] = []
        for value, mult in zip(self.mu, self.m):
            values.extend([value] * mult)
        return Spectrum(values)


def cartan_residual(data: IsoparametricData, i: int) -> ExactScalar:
    """sum_{j != i} m_j (1 + mu_i mu_j)/(mu_i - mu_j), i is 1-based.

    Exactly zero for genuine isoparametric data.
    """
    if not 1 <= i <= data.g:
        raise PreconditionError(f"index i must be in 1..{data.g}")
    mu_i = data.mu[i - 1]
    acc = scalar(0)
    for j, (mu_j, mult) in enumerate(zip(data.mu, data.m), start=1):
        if j == i:
            continue
        acc = acc + mult * (ONE + mu_i * mu_j) / (mu_i - mu_j)
    return acc


def munzner_allowed_set(n: int) -> Tuple[ExactScalar, ...]:
    """Possible |A|^2 values of a minimal isoparametric hypersurface."""
    return tuple(scalar(c * n) for c in (0, 1, 2, 3, 5))


def munzner_a2(g: int, n: int) -> ExactScalar:
    """|A|^2 = (g - 1) n for g distinct principal curvatures."""
    if g not in _VALID_G:
        raise PreconditionError(f"g must be one of {_VALID_G}, got {g}")
    value = scalar((g - 1) * n)
    allowed = munzner_allowed_set(n)
    if all(value.compare(v) is not Ordering.EQ for v in allowed):
        raise IdentityCheckError("(g-1)n escaped the allowed value set", [value])
    return value


class CaseK0(Enum):
    """The three shapes of a non-geodesic minimal K=0 spectrum with lambda_2 = 0."""

    LAMBDA3_ZERO = "lambda3_zero"
    LAMBDA3_EQ_LAMBDA4 = "lambda3_eq_lambda4"
    LAMBDA3_LT_LAMBDA4 = "lambda3_lt_lambda4"


def assert_case_hypotheses(s: Spectrum) -> None:
    """Guard for the case analysis: minimal, K = 0, lambda_2 = 0, not geodesic."""
    if s.n != 4:
        raise PreconditionError("case analysis lives in dimension 4")
    if not s.is_minimal:
        raise PreconditionError("case analysis requires a minimal spectrum")
    inv = invariants(s)
    if inv.k.sign() != 0:
        raise PreconditionError(f"case analysis requires zero Gauss curvature, got K = {inv.k}")
    if inv.a2.sign() == 0:
        raise PreconditionError("spectrum is totally geodesic; nothing to refute")
    if s[1].sign() != 0:
        raise PreconditionError("case normalization lambda_2 = 0 violated")


def _cleared_cartan_polynomial(
    family: Callable[[ExactScalar], IsoparametricData],
    i: int,
    samples: Sequence[ExactScalar],
) -> List[ExactScalar]:
    """Coefficients of residual(t) * prod_{j != i} (mu_i - mu_j), certified
    by interpolation at len(samples) points (degree <= len(samples) - 1)."""
    points = []
    for t in samples:
        data = family(t)
        value = cartan_residual(data, i)
        mu_i = data.mu[i - 1]
        for j, mu_j in enumerate(data.mu):
            if j != i - 1:
                value = value * (mu_i - mu_j)
        points.append((t, value))
    return lagrange_interpolate(points)


def _case_lambda3_zero(munzner_check: bool, samples: Sequence[ExactScalar]) -> Certificate:
    # g = 3, mu = (lambda_1, 0, -lambda_1), m = (1, 2, 1); equation index 1
    def family(t: ExactScalar) -> IsoparametricData:
        return IsoparametricData(mu=(t, scalar(0), -t), m=(1, 2, 1))

    for t in samples:
        assert_case_hypotheses(family(t).spectrum())
    cleared = _cleared_cartan_polynomial(family, 1, samples)
    reduced, valuation = strip_zero_roots(cleared)
    if len(reduced) - 1 > 2:
        raise IdentityCheckError("cleared Cartan equation should be at most quadratic")
    padded = list(reduced) + [scalar(0)] * (3 - len(reduced))
    roots = solve_quadratic(padded[2], padded[1], padded[0])
    negative_roots = [r for r in roots if r.sign() < 0]
    if len(negative_roots) != 1:
        raise IdentityCheckError("expected a unique negative root", roots)
    lam1 = negative_roots[0]
    # exact confirmation in the quadratic extension
    residual_at_root = cartan_residual(family(lam1), 1)
    if residual_at_root.sign() != 0:
        raise IdentityCheckError("root fails the Cartan residual", [residual_at_root])
    a2 = invariants(family(lam1).spectrum()).a2
    expected = munzner_a2(3, 4)
    details = {
        "lambda1": lam1,
        "cleared_polynomial": tuple(reduced),
        "stripped_valuation": valuation,
        "a2": a2,
        "residual_at_root": residual_at_root,
    }
    if not munzner_check:
        return Certificate(CertificateKind.CONSISTENT, details)
    if a2.compare(expected) is Ordering.EQ:
        return Certificate(CertificateKind.CONSISTENT, details)
    return Certificate(
        CertificateKind.MUNZNER_MISMATCH,
        {**details, "expected": expected, "found": a2},
    )


def _case_lambda3_eq_lambda4(samples: Sequence[ExactScalar]) -> Certificate:
    # g = 3, mu = (lambda_1, 0, -lambda_1/2), m = (1, 1, 2); equation index 2
    def family(t: ExactScalar) -> IsoparametricData:
        return IsoparametricData(mu=(t, scalar(0), -t / 2), m=(1, 1, 2))

    for t in samples:
        assert_case_hypotheses(family(t).spectrum())
    cleared = _cleared_cartan_polynomial(family, 2, samples)
    reduced, valuation = strip_zero_roots(cleared)
    if len(reduced) != 1:
        raise IdentityCheckError("expected a nonzero constant after clearing", reduced)
    # residual * lambda_1 is a constant: interpolate it for the human-readable witness
    numerator = lagrange_interpolate(
        [(t, cartan_residual(family(t), 2) * t) for t in samples]
    )
    numerator = poly_trim(numerator)
    if len(numerator) != 1:
        raise IdentityCheckError("residual * lambda1 should be constant", numerator)
    return Certificate(
        CertificateKind.NO_REAL_SOLUTION,
        {
            "residual_expression": f"{numerator[0]}/lambda1",
            "cleared_polynomial": tuple(reduced),
            "stripped_valuation": valuation,
        },
    )


def _case_lambda3_lt_lambda4(pairs: Sequence[Tuple[ExactScalar, ExactScalar]]) -> Certificate:
    # g = 4, mu = (-(l3+l4), 0, l3, l4), all simple; equation index 2
    def family(l3: ExactScalar, l4: ExactScalar) -> IsoparametricData:
        return IsoparametricData(mu=(-(l3 + l4), scalar(0), l3, l4), m=(1, 1, 1, 1))

    def cleared(l3: ExactScalar, l4: ExactScalar) -> ExactScalar:
        data = family(l3, l4)
        assert_case_hypotheses(data.spectrum())
        value = cartan_residual(data, 2)
        mu_i = data.mu[1]
        for j, mu_j in enumerate(data.mu):
            if j != 1:
                value = value * (mu_i - mu_j)
        return value

    # On a 4 x 4 grid the cleared residual (bidegree <= 3 in each variable)
    # must agree with -(l3^2 + l3 l4 + l4^2), itself rewritten as the
    # manifestly negative -( (l3 + l4/2)^2 + (3/4) l4^2 ).
    half, three_quarter = scalar("1/2"), scalar("3/4")
    sample_values = []
    for l3, l4 in pairs:
        got = cleared(l3, l4)
        form = l3 * l3 + l3 * l4 + l4 * l4
        square = (l3 + half * l4) ** 2 + three_quarter * l4 * l4
        if (got + form).sign() != 0 or (form - square).sign() != 0:
            raise IdentityCheckError(
                "cleared Cartan residual does not match the quadratic form",
                [got + form, form - square],
            )
        sample_values.append((str(l3), str(l4), form))
    return Certificate(
        CertificateKind.SIGN_IMPOSSIBILITY,
        {
            "quadratic_form": "lambda3^2 + lambda3*lambda4 + lambda4^2",
            "completed_square": "(lambda3 + lambda4/2)^2 + (3/4)*lambda4^2",
            "grid_checks": len(sample_values),
            "sample_form_values": tuple(v for _, _, v in sample_values[:3]),
        },
    )


_DEFAULT_SAMPLES = tuple(scalar(-t) for t in (2, 3, 4, 5))
_DEFAULT_PAIRS = tuple(
    (scalar(a), scalar(b)) for a in (1, 2, 3, 5) for b in (6, 7, 9, 11)
)


def case_analysis_k0(
    case: CaseK0,
    munzner_check: bool = True,
    samples: Optional[Sequence[ExactScalar]] = None,
) -> Certificate:
    """Refutation certificate for one branch of the K = 0 case analysis."""
    if case is CaseK0.LAMBDA3_ZERO:
        return _case_lambda3_zero(munzner_check, samples or _DEFAULT_SAMPLES)
    if case is CaseK0.LAMBDA3_EQ_LAMBDA4:
        return _case_lambda3_eq_lambda4(samples or _DEFAULT_SAMPLES)
    if case is CaseK0.LAMBDA3_LT_LAMBDA4:
        return _case_lambda3_lt_lambda4(samples or _DEFAULT_PAIRS)
    raise PreconditionError(f"unknown case {case!r}")


def isoparametric_k0_conclusion(munzner_check: bool = True) -> Certificate:
    """Run all three cases; totally geodesic iff each one is contradictory."""
    certs = (
        case_analysis_k0(CaseK0.LAMBDA3_ZERO, munzner_check=munzner_check),
        case_analysis_k0(CaseK0.LAMBDA3_EQ_LAMBDA4),
        case_analysis_k0(CaseK0.LAMBDA3_LT_LAMBDA4),
    )
    if all(c.is_contradiction for c in certs):
        return Certificate(
            CertificateKind.TOTALLY_GEODESIC,
            {"cases_refuted": len(certs)},
            cases=certs,
        )
    return Certificate(
        CertificateKind.CONSISTENT,
        {"note": "at least one case admits a solution under the active checks"},
        cases=certs,
    )


def clifford_spectrum(k: int) -> Spectrum:
    """Principal curvatures of S^k(sqrt(k/4)) x S^{4-k}(sqrt((4-k)/4)) in S^5."""
    if k not in (1, 2, 3):
        raise PreconditionError("Clifford parameter k must be 1, 2 or 3")
    from .exact import sqrt  # local import keeps module load light

    pos = sqrt(scalar(4 - k) / k)
    neg = -sqrt(scalar(k) / (4 - k))
    return Spectrum([pos] * k + [neg] * (4 - k))


def clifford_data(k: int) -> IsoparametricData:
    """g = 2 isoparametric data of the k-th Clifford hypersurface."""
    from .exact import sqrt

    pos = sqrt(scalar(4 - k) / k)
    neg = -sqrt(scalar(k) / (4 - k))
    return IsoparametricData(mu=(neg, pos), m=(4 - k, k))
