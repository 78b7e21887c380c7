"""First- and second-order shape-operator jets at a critical point.

The covariant derivative of the shape operator is a fully symmetric
3-tensor h_ijk (20 independent entries in dimension four), stored here on
multiset keys with multiplicity weights applied when expanding back to
ordered sums.  On the multiplicity-two spectrum (-L, -L, 0, 2L) the
critical-point gradient equations force a one-dimensional kernel, a
weighted quadratic-form identity kills four more components, and the
second-order systems for (k,l) = (3,3) and (4,4) pin h_4433 = h_3344 = 0,
which contradicts the exact commutator value h_3344 - h_4433 = -2L.

The parameter L is handled by multi-point rational evaluation: every
asserted identity in L has known degree <= 3, so exact agreement at four
sample points certifies it without a polynomial engine.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .certificates import Certificate, CertificateKind
from .coefficients import Coefficients, DEFAULT_COEFFICIENTS
from .errors import IdentityCheckError, PreconditionError
from .exact import ExactScalar, ONE, ZERO, Ordering, scalar, sqrt
from .linsys import LinearSolution, LinearSystem
from .polynomials import lagrange_interpolate, poly_trim
from .rng import Lcg64
from .spectrum import Spectrum, power_sum

__all__ = [
    "ThirdFF",
    "QuadraticForms",
    "ConstancyFlags",
    "ConstraintReport",
    "Lemma5Result",
    "SecondOrderResult",
    "MULTISETS",
    "FREE_COMPONENTS",
    "multiset_weight",
    "gradient_system",
    "multiplicity_two_relations",
    "third_ff_multiplicity_two",
    "quadratic_forms",
    "quadratic_forms_bruteforce",
    "lemma5_residual",
    "lemma5_coefficient_check",
    "simons_and_pengterng_constraints",
    "simons_pengterng_chain_residual",
    "delta_f3_critical_residuals",
    "second_order_system",
    "commutator",
    "multiplicity_two_contradiction",
    "contradiction_gap_polynomial",
    "random_third_ff",
]

MULTISETS: Tuple[Tuple[int, int, int], ...] = tuple(
    (i, j, k)
    for i in range(1, 5)
    for j in range(i, 5)
    for k in range(j, 5)
)

FREE_COMPONENTS = ("h111", "h112", "h113", "h114", "h123", "h124", "h134", "h234")


def _label(key: Tuple[int, int, int]) -> str:
    return "h" + "".join(str(i) for i in key)


def _key(label_or_key: object) -> Tuple[int, int, int]:
    if isinstance(label_or_key, str):
        digits = label_or_key.lstrip("h")
        if len(digits) != 3 or not digits.isdigit():
            raise PreconditionError(f"bad third-form label {label_or_key!r}")
        key = tuple(int(c) for c in digits)
    else:
        key = tuple(label_or_key)
    if len(key) != 3 or not all(1 <= i <= 4 for i in key):
        raise PreconditionError(f"third-form indices must lie in 1..4, got {key}")
    return tuple(sorted(key))


def multiset_weight(key: Tuple[int, int, int]) -> int:
    """Number of distinct ordered triples realizing the multiset (1, 3, or 6)."""
    distinct = len(set(key))
    return {1: 1, 2: 3, 3: 6}[distinct]


class ThirdFF:
    """Fully symmetric 3-tensor h_ijk on multiset keys.

    Full symmetry is the Codazzi relation; it is enforced by the storage
    itself, so any index order addresses the same entry.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Optional[Mapping[object, object]] = None) -> None:
        table: Dict[Tuple[int, int, int], ExactScalar] = {}
        for raw_key, value in (entries or {}).items():
            table[_key(raw_key)] = scalar(value)
        self._entries = table

    @classmethod
    def zero(cls) -> "ThirdFF":
        return cls({})

    def get(self, i: int, j: int, k: int) -> ExactScalar:
        return self._entries.get(_key((i, j, k)), ZERO)

    def items(self) -> Iterable[Tuple[Tuple[int, int, int], ExactScalar]]:
        for key in MULTISETS:
            yield key, self._entries.get(key, ZERO)

    def trace_residuals(self) -> Tuple[ExactScalar, ...]:
        """sum_i h_iik for each k; all zero under minimality with H constant."""
        out = []
        for k in range(1, 5):
            acc = ZERO
            for i in range(1, 5):
                acc = acc + self.get(i, i, k)
            out.append(acc)
        return tuple(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ThirdFF):
            return NotImplemented
        return all(
            (self.get(*key) - other.get(*key)).sign() == 0 for key in MULTISETS
        )


@dataclass(frozen=True)
class QuadraticForms:
    """|grad A|^2 and the eigenvalue-weighted sums over ordered triples.

    qa = sum lambda_i^2 h_ijk^2, qb = sum lambda_i lambda_j h_ijk^2,
    qc = sum lambda_i h_ijk^2 (all over ordered (i, j, k)).
    """

    grad_a2: ExactScalar
    qa: ExactScalar
    qb: ExactScalar
    qc: ExactScalar


def _spectrum_values(s: Spectrum) -> Tuple[ExactScalar, ...]:
    if s.n != 4:
        raise PreconditionError("jet analysis is specific to n = 4")
    return s.values


def quadratic_forms(s: Spectrum, h: ThirdFF) -> QuadraticForms:
    """Weighted-multiset evaluation of the four quadratic forms.

    For a multiset with w distinct orderings, the first index runs over the
    entries in proportion w/3, and ordered (first, second) pairs in
    proportion w/6, which turns the ordered sums into closed weights.
    """
    lam = _spectrum_values(s)
    grad = qa = qb = qc = ZERO
    third = scalar(1) / 3
    sixth = scalar(1) / 6
    for key, value in h.items():
        if value.sign() == 0:
            continue
        w = multiset_weight(key)
        v2 = value * value
        t1 = lam[key[0] - 1] + lam[key[1] - 1] + lam[key[2] - 1]
        t2 = (
            lam[key[0] - 1] * lam[key[0] - 1]
            + lam[key[1] - 1] * lam[key[1] - 1]
            + lam[key[2] - 1] * lam[key[2] - 1]
        )
        grad = grad + w * v2
        qa = qa + v2 * w * third * t2
        qc = qc + v2 * w * third * t1
        qb = qb + v2 * w * sixth * (t1 * t1 - t2)
    return QuadraticForms(grad_a2=grad, qa=qa, qb=qb, qc=qc)


def quadratic_forms_bruteforce(s: Spectrum, h: ThirdFF) -> QuadraticForms:
    """Oracle: plain summation over all 64 ordered triples."""
    lam = _spectrum_values(s)
    grad = qa = qb = qc = ZERO
    for i, j, k in itertools.product(range(1, 5), repeat=3):
        v = h.get(i, j, k)
        if v.sign() == 0:
            continue
        v2 = v * v
        grad = grad + v2
        qa = qa + lam[i - 1] * lam[i - 1] * v2
        qb = qb + lam[i - 1] * lam[j - 1] * v2
        qc = qc + lam[i - 1] * v2
    return QuadraticForms(grad_a2=grad, qa=qa, qb=qb, qc=qc)


# -- first-order (gradient) system ---------------------------------------


def gradient_system(s: Spectrum, k: int) -> LinearSolution:
    """Kernel of the power-matrix system in the unknowns (h_11k..h_44k).

    The four equations are the vanishing first derivatives of H, |A|^2,
    f3 and f4 at a critical point.  Distinct eigenvalues give a Vandermonde
    matrix and a trivial kernel.
    """
    lam = _spectrum_values(s)
    if not 1 <= k <= 4:
        raise PreconditionError("direction index k must lie in 1..4")
    labels = [_label(_key((i, i, k))) for i in range(1, 5)]
    rows = [
        [ONE] * 4,
        [lam[i] for i in range(4)],
        [lam[i] ** 2 for i in range(4)],
        [lam[i] ** 3 for i in range(4)],
    ]
    system = LinearSystem(rows, [ZERO] * 4, labels)
    return system.solve()


def _multiplicity_two_spectrum(lam: ExactScalar) -> Spectrum:
    if lam.sign() <= 0:
        raise PreconditionError("the multiplicity-two analysis needs lambda > 0")
    return Spectrum([-lam, -lam, scalar(0), 2 * lam])


def multiplicity_two_relations(lam: ExactScalar) -> Tuple[Dict[str, str], Tuple[str, ...]]:
    """Derive the kernel relations of the gradient systems on (-L,-L,0,2L).

    Returns (dependents, zeros): dependents maps a multiset label to the
    free label it equals the negative of; zeros lists forced-zero labels.
    Shapes are validated against the expected one-dimensional kernels.
    """
    s = _multiplicity_two_spectrum(lam)
    dependents: Dict[str, str] = {}
    zeros: List[str] = []
    for k in range(1, 5):
        sol = gradient_system(s, k)
        if sol.kind != "underdetermined" or sol.kernel_dimension != 1:
            raise IdentityCheckError(
                f"unexpected gradient kernel for k={k}: {sol.kind}, dim {sol.kernel_dimension}"
            )
        (vec,) = sol.kernel_basis
        lead = _label(_key((1, 1, k)))
        anti = _label(_key((2, 2, k)))
        others = [_label(_key((i, i, k))) for i in (3, 4)]
        if vec[lead].sign() == 0:
            raise IdentityCheckError(f"kernel for k={k} misses the h11k direction")
        unit = {lab: v / vec[lead] for lab, v in vec.items()}
        if (unit[anti] + ONE).sign() != 0 or any(unit[o].sign() != 0 for o in others):
            raise IdentityCheckError(f"kernel for k={k} is not span(h11k - h22k)")
        dependents[anti] = lead
        zeros.extend(others)
    return dependents, tuple(zeros)


def third_ff_multiplicity_two(
    lam: ExactScalar, free: Mapping[str, object]
) -> ThirdFF:
    """Build a ThirdFF from the eight free components, dependents filled in
    from the derived gradient-system kernels."""
    unknown = set(free) - set(FREE_COMPONENTS)
    if unknown:
        raise PreconditionError(f"not free components: {sorted(unknown)}")
    dependents, zeros = multiplicity_two_relations(lam)
    entries: Dict[str, ExactScalar] = {lab: scalar(v) for lab, v in free.items()}
    for dep, src in dependents.items():
        entries[dep] = -entries.get(src, ZERO)
    for z in zeros:
        entries[z] = ZERO
    return ThirdFF(entries)


# -- the weighted-form identity of the multiplicity-two lemma -------------


def lemma5_residual(lam: ExactScalar, free: Mapping[str, object]) -> ExactScalar:
    """3 |grad A|^2 - (2 qa + qb)/lambda^2 evaluated on a constrained ThirdFF."""
    s = _multiplicity_two_spectrum(lam)
    h = third_ff_multiplicity_two(lam, free)
    q = quadratic_forms(s, h)
    return 3 * q.grad_a2 - (2 * q.qa + q.qb) / (lam * lam)


_LEMMA5_EXPECTED: Dict[str, int] = {
    "h111": 0,
    "h112": 0,
    "h113": 8,
    "h114": 0,
    "h123": 8,
    "h124": 0,
    "h134": 2,
    "h234": 2,
}


@dataclass(frozen=True)
class Lemma5Result:
    lam: ExactScalar
    coefficients: Dict[str, ExactScalar]
    cross_terms_zero: bool
    matches_expected: bool
    forced_zero: Tuple[str, ...]


def lemma5_coefficient_check(lam: ExactScalar) -> Lemma5Result:
    """Extract the residual quadratic form coefficient by coefficient.

    The residual must equal 8(h113^2 + h123^2) + 2(h134^2 + h234^2) for
    every lambda > 0; the positive-coefficient components are therefore
    forced to vanish wherever the residual is zero.
    """
    coeffs: Dict[str, ExactScalar] = {}
    for lab in FREE_COMPONENTS:
        coeffs[lab] = lemma5_residual(lam, {lab: 1})
    cross_ok = True
    for a, b in itertools.combinations(FREE_COMPONENTS, 2):
        mixed = lemma5_residual(lam, {a: 1, b: 1}) - coeffs[a] - coeffs[b]
        if mixed.sign() != 0:
            cross_ok = False
            break
    matches = cross_ok and all(
        (coeffs[lab] - _LEMMA5_EXPECTED[lab]).sign() == 0 for lab in FREE_COMPONENTS
    )
    forced = tuple(lab for lab in FREE_COMPONENTS if coeffs[lab].sign() > 0)
    return Lemma5Result(
        lam=lam,
        coefficients=coeffs,
        cross_terms_zero=cross_ok,
        matches_expected=matches,
        forced_zero=forced,
    )


# -- Simons / Peng-Terng constraints --------------------------------------


@dataclass(frozen=True)
class ConstancyFlags:
    """Which scalar quantities are constant (or critical at the point)."""

    scalar_curvature: bool = False
    f3: bool = False
    f4: bool = False


@dataclass(frozen=True)
class ConstraintReport:
    residuals: Dict[str, ExactScalar]
    required_grad_a2: Optional[ExactScalar]


def simons_and_pengterng_constraints(
    s: Spectrum,
    h: ThirdFF,
    flags: ConstancyFlags,
    coeffs: Coefficients = DEFAULT_COEFFICIENTS,
) -> ConstraintReport:
    """Residuals of the Simons identity and the two Peng-Terng identities.

    With constant scalar curvature: |grad A|^2 = |A|^2 (|A|^2 - 4).
    At a critical/constant point of f3: 0 = 3(4 - |A|^2) f3 + 6 qc.
    With constant f4: 0 = 4(4 - |A|^2) f4 + 4(2 qa + qb).
    """
    q = quadratic_forms(s, h)
    a2 = power_sum(s, 2)
    residuals: Dict[str, ExactScalar] = {}
    required: Optional[ExactScalar] = None
    if flags.scalar_curvature:
        required = a2 * (a2 - coeffs.exact("simons.gap"))
        residuals["simons"] = q.grad_a2 - required
    if flags.f3:
        f3 = power_sum(s, 3)
        residuals["delta_f3"] = 3 * (coeffs.exact("pengterng.f3_gap") - a2) * f3 + 6 * q.qc
    if flags.f4:
        f4 = power_sum(s, 4)
        residuals["delta_f4"] = (
            4 * (coeffs.exact("pengterng.f4_gap") - a2) * f4 + 4 * (2 * q.qa + q.qb)
        )
    return ConstraintReport(residuals=residuals, required_grad_a2=required)


def simons_pengterng_chain_residual(
    lam: ExactScalar, coeffs: Coefficients = DEFAULT_COEFFICIENTS
) -> ExactScalar:
    """The equality chain 3|A|^2(|A|^2-4) = (1/lambda^2)(|A|^2-4) f4 on the
    multiplicity-two spectrum, with f4 = |A|^4/2 from K = 0.

    Zero for every lambda with the canonical coefficient table; any
    perturbation of the Simons gap, the Peng-Terng gap or the K = 0
    substitution breaks it.
    """
    s = _multiplicity_two_spectrum(lam)
    a2 = power_sum(s, 2)
    lhs = 3 * a2 * (a2 - coeffs.exact("simons.gap"))
    f4 = coeffs.exact("kzero.f4_half") * a2 * a2
    rhs = (a2 - coeffs.exact("pengterng.f4_gap")) * f4 / (lam * lam)
    return lhs - rhs


def delta_f3_critical_residuals(
    coeffs: Coefficients = DEFAULT_COEFFICIENTS,
) -> Dict[str, ExactScalar]:
    """Anchor for the Delta f3 relation at the |A|^2 = 4 pinch.

    At lambda = sqrt(2/3) the multiplicity-two spectrum has |A|^2 = 4, so
    Simons forces |grad A|^2 = 0, hence qc = 0, and the criticality
    relation collapses to 3(4 - |A|^2) f3 = 0 with f3 = 4 lambda != 0.
    Both residuals vanish only with the canonical gap values.
    """
    lam = sqrt(scalar(2) / 3)
    s = Spectrum([-lam, -lam, scalar(0), 2 * lam])
    a2 = power_sum(s, 2)
    f3 = power_sum(s, 3)
    if (a2 - 4).sign() != 0 or f3.sign() == 0:
        raise IdentityCheckError("pinch spectrum sanity check failed", [a2, f3])
    return {
        "simons_grad_at_pinch": a2 * (a2 - coeffs.exact("simons.gap")),
        "delta_f3_at_pinch": 3 * (coeffs.exact("pengterng.f3_gap") - a2) * f3,
    }


# -- second-order systems --------------------------------------------------


def _validate_lemma2_conclusions(lam: ExactScalar, h: ThirdFF) -> None:
    dependents, zeros = multiplicity_two_relations(lam)
    for z in zeros + ("h113", "h123", "h134", "h234"):
        if h.get(*_key(z)).sign() != 0:
            raise PreconditionError(f"component {z} must vanish by the lemma's conclusions")
    for dep, src in dependents.items():
        if (h.get(*_key(dep)) + h.get(*_key(src))).sign() != 0:
            raise PreconditionError(f"components {dep} and {src} must be opposite")


@dataclass(frozen=True)
class SecondOrderResult:
    kl: Tuple[int, int]
    system: LinearSystem
    solution: LinearSolution
    target_label: str
    forced_value: Optional[ExactScalar]


def second_order_system(
    lam: ExactScalar,
    kl: Tuple[int, int],
    h: ThirdFF,
    include_middle: bool = True,
) -> SecondOrderResult:
    """The vanishing-second-derivative system for the unknowns h_ij(kl).

    Unknowns carry only the displayed (i, j) symmetry.  The systems are
    underdetermined; the interesting conclusions (h_4433 = 0 for (3,3),
    h_3344 = 0 for (4,4)) are extracted with the row-space criterion, so
    they hold in *every* solution.  ``include_middle`` drops the middle
    displayed equation to probe whether the forcing survives without it.
    """
    if kl not in ((3, 3), (4, 4)):
        raise PreconditionError("only the (3,3) and (4,4) systems are in scope")
    s = _multiplicity_two_spectrum(lam)
    _validate_lemma2_conclusions(lam, h)
    lam_vec = s.values
    k, l = kl
    pairs = [(i, j) for i in range(1, 5) for j in range(i, 5)]
    labels = [f"h{i}{j}{k}{l}" for i, j in pairs]

    def diag_row(weights: Sequence[ExactScalar]) -> List[ExactScalar]:
        return [weights[i - 1] if i == j else ZERO for i, j in pairs]

    prod_sum = ZERO  # sum over ordered (i, j) of h_ijk h_ijl
    weighted_sum = ZERO  # sum over ordered (i, j) of (2 lam_i^2 + lam_i lam_j) h_ijk h_ijl
    for i in range(1, 5):
        for j in range(1, 5):
            hk = h.get(i, j, k)
            hl = h.get(i, j, l)
            if hk.sign() == 0 or hl.sign() == 0:
                continue
            term = hk * hl
            prod_sum = prod_sum + term
            li, lj = lam_vec[i - 1], lam_vec[j - 1]
            weighted_sum = weighted_sum + (2 * li * li + li * lj) * term

    rows = [diag_row([ONE] * 4)]
    rhs = [ZERO]
    if include_middle:
        rows.append(diag_row(lam_vec))
        rhs.append(-prod_sum)
    rows.append(diag_row([v**3 for v in lam_vec]))
    rhs.append(-weighted_sum)

    system = LinearSystem(rows, rhs, labels)
    solution = system.solve()
    target = "h4433" if kl == (3, 3) else "h3344"
    forced = system.forced_value(target)
    return SecondOrderResult(
        kl=kl, system=system, solution=solution, target_label=target, forced_value=forced
    )


def commutator(s: Spectrum, i: int, j: int, k: int, l: int) -> ExactScalar:
    """h_ijkl - h_ijlk by the Gauss/Ricci commutation rule:
    (lambda_i - lambda_j)(1 + lambda_i lambda_j)(d_ik d_jl - d_il d_jk)."""
    lam = _spectrum_values(s)
    for idx in (i, j, k, l):
        if not 1 <= idx <= 4:
            raise PreconditionError("indices must lie in 1..4")
    delta = (1 if (i == k and j == l) else 0) - (1 if (i == l and j == k) else 0)
    if delta == 0:
        return ZERO
    li, lj = lam[i - 1], lam[j - 1]
    return (li - lj) * (ONE + li * lj) * delta


# -- the assembled contradiction -------------------------------------------

_SECOND_ORDER_SAMPLES: Tuple[Dict[str, int], ...] = (
    {},
    {"h114": 1},
    {"h124": 1},
    {"h111": 2, "h112": 1, "h114": 2, "h124": 3},
)


def multiplicity_two_contradiction(lam: ExactScalar) -> Certificate:
    """Full pipeline for one lambda > 0: gradient kernels, the weighted-form
    identity, both second-order systems, and the commutator gap.

    The second-order right-hand sides are linear in Q = h114^2 + h124^2, so
    forcing checked at several sample jets certifies it for all admissible
    jets.  The contradiction pair is h_3344 - h_4433 = 0 from the systems
    against -2 lambda from the commutator (using that h_ijk stays totally
    symmetric after one more derivative, since Codazzi holds identically).
    """
    lam = scalar(lam)
    s = _multiplicity_two_spectrum(lam)
    lemma5 = lemma5_coefficient_check(lam)
    if not lemma5.matches_expected:
        raise IdentityCheckError("lemma5 residual form does not match the expected display")
    if set(lemma5.forced_zero) != {"h113", "h123", "h134", "h234"}:
        raise IdentityCheckError(f"unexpected forced-zero set {lemma5.forced_zero}")
    for free in _SECOND_ORDER_SAMPLES:
        h = third_ff_multiplicity_two(lam, free)
        for kl in ((3, 3), (4, 4)):
            result = second_order_system(lam, kl, h)
            if result.solution.kind == "inconsistent":
                raise IdentityCheckError(f"second-order system {kl} inconsistent")
            if result.forced_value is None or result.forced_value.sign() != 0:
                raise IdentityCheckError(
                    f"{result.target_label} not forced to zero", [result.forced_value]
                )
    gap = commutator(s, 3, 4, 3, 4)
    if (gap + 2 * lam).sign() != 0:
        raise IdentityCheckError("commutator gap should equal -2 lambda", [gap])
    return Certificate(
        CertificateKind.SIGN_IMPOSSIBILITY,
        {
            "lambda": lam,
            "second_order_difference": ZERO,
            "commutator_difference": gap,
            "forced_zero_components": lemma5.forced_zero,
        },
    )


def contradiction_gap_polynomial(
    samples: Sequence[object] = (1, 2, 3, 5),
) -> List[ExactScalar]:
    """Interpolate the commutator gap as a polynomial in lambda.

    Four sample points determine any identity of degree <= 3 in lambda;
    the result must be the coefficient list of -2*lambda, nonzero for every
    lambda > 0.
    """
    points = []
    for raw in samples:
        lam = scalar(raw)
        cert = multiplicity_two_contradiction(lam)
        gap = cert.details["commutator_difference"] - cert.details["second_order_difference"]
        points.append((lam, gap))
    coeffs = poly_trim(lagrange_interpolate(points))
    expected = [ZERO, scalar(-2)]
    if len(coeffs) != 2 or any((a - b).sign() != 0 for a, b in zip(coeffs, expected)):
        raise IdentityCheckError("gap polynomial is not -2*lambda", coeffs)
    return coeffs


def random_third_ff(rng: Lcg64, bound: int = 5) -> ThirdFF:
    """Random rational ThirdFF over all 20 multisets (for oracle tests)."""
    return ThirdFF(
        {key: ExactScalar.from_rational(rng.rational(bound)) for key in MULTISETS}
    )
