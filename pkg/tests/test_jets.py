"""Jet systems: gradient kernels, weighted forms, second order, commutator."""

from __future__ import annotations

import itertools

import pytest

from mhsverify.certificates import CertificateKind
from mhsverify.coefficients import DEFAULT_COEFFICIENTS
from mhsverify.errors import IdentityCheckError, PreconditionError
from mhsverify.exact import Ordering, scalar
from mhsverify.jets import (
    FREE_COMPONENTS,
    MULTISETS,
    ConstancyFlags,
    ThirdFF,
    commutator,
    contradiction_gap_polynomial,
    delta_f3_critical_residuals,
    gradient_system,
    lemma5_coefficient_check,
    lemma5_residual,
    multiplicity_two_contradiction,
    multiplicity_two_relations,
    multiset_weight,
    quadratic_forms,
    quadratic_forms_bruteforce,
    random_third_ff,
    second_order_system,
    simons_and_pengterng_constraints,
    simons_pengterng_chain_residual,
    third_ff_multiplicity_two,
)
from mhsverify.rng import Lcg64
from mhsverify.spectrum import Spectrum


M2 = Spectrum([-1, -1, 0, 2])


def test_multiset_inventory():
    assert len(MULTISETS) == 20
    assert multiset_weight((1, 1, 1)) == 1
    assert multiset_weight((1, 1, 2)) == 3
    assert multiset_weight((1, 2, 3)) == 6
    assert sum(multiset_weight(k) for k in MULTISETS) == 64


def test_third_ff_symmetric_storage():
    h = ThirdFF({(3, 1, 2): "7/2"})
    for perm in itertools.permutations((1, 2, 3)):
        assert h.get(*perm) == scalar("7/2")
    assert h.get(1, 1, 1).sign() == 0


def test_gradient_system_kernels():
    assert gradient_system(Spectrum([-3, -1, 1, 3]), 1).kernel_dimension == 0
    sol = gradient_system(M2, 2)
    assert sol.kernel_dimension == 1
    assert gradient_system(Spectrum([0, 0, 0, 0]), 1).kernel_dimension == 3


def test_multiplicity_two_relations_shape():
    dependents, zeros = multiplicity_two_relations(scalar(1))
    assert dependents == {"h122": "h111", "h222": "h112", "h223": "h113", "h224": "h114"}
    assert set(zeros) == {"h133", "h144", "h233", "h244", "h333", "h344", "h334", "h444"}


def test_quadratic_forms_examples():
    h = third_ff_multiplicity_two(scalar(1), {"h111": 1})
    q = quadratic_forms(M2, h)
    assert q.grad_a2 == scalar(4)
    h2 = third_ff_multiplicity_two(scalar(1), {"h123": 1})
    q2 = quadratic_forms(M2, h2)
    assert q2.grad_a2 == scalar(6)
    assert q2.qc == scalar(-4)
    zero = quadratic_forms(M2, ThirdFF.zero())
    assert all(v.sign() == 0 for v in (zero.grad_a2, zero.qa, zero.qb, zero.qc))


def test_quadratic_forms_match_bruteforce_oracle():
    rng = Lcg64(77)
    spectra = [M2, Spectrum([-3, -1, 1, 3]), Spectrum(["-1/2", "1/3", "2", "-11/6"])]
    for trial in range(40):
        h = random_third_ff(rng)
        s = spectra[trial % len(spectra)]
        fast = quadratic_forms(s, h)
        slow = quadratic_forms_bruteforce(s, h)
        for a, b in (
            (fast.grad_a2, slow.grad_a2),
            (fast.qa, slow.qa),
            (fast.qb, slow.qb),
            (fast.qc, slow.qc),
        ):
            assert (a - b).sign() == 0


def test_lemma5_unit_vectors():
    assert lemma5_residual(scalar(1), {"h113": 1}) == scalar(8)
    assert lemma5_residual(scalar(1), {"h114": 1}).sign() == 0
    assert lemma5_residual(scalar(2), {"h134": 1}) == scalar(2)


@pytest.mark.parametrize("lam", ["1", "1/2", "3"])
def test_lemma5_full_form(lam):
    result = lemma5_coefficient_check(scalar(lam))
    assert result.cross_terms_zero
    assert result.matches_expected
    assert result.forced_zero == ("h113", "h123", "h134", "h234")
    expected = {"h113": 8, "h123": 8, "h134": 2, "h234": 2}
    for lab in FREE_COMPONENTS:
        assert result.coefficients[lab] == scalar(expected.get(lab, 0))


def test_simons_pengterng_constraints():
    report = simons_and_pengterng_constraints(
        M2, ThirdFF.zero(), ConstancyFlags(scalar_curvature=True)
    )
    assert report.required_grad_a2 == scalar(12)
    all_flags = ConstancyFlags(scalar_curvature=True, f3=True, f4=True)
    clifford = simons_and_pengterng_constraints(
        Spectrum([1, 1, -1, -1]), ThirdFF.zero(), all_flags
    )
    assert all(r.sign() == 0 for r in clifford.residuals.values())
    geodesic = simons_and_pengterng_constraints(
        Spectrum([0, 0, 0, 0]), ThirdFF.zero(), all_flags
    )
    assert all(r.sign() == 0 for r in geodesic.residuals.values())


def test_chain_residual_and_pinch_anchors():
    for lam in ("1", "1/2", "3", "5"):
        assert simons_pengterng_chain_residual(scalar(lam)).sign() == 0
    anchors = delta_f3_critical_residuals()
    assert all(r.sign() == 0 for r in anchors.values())
    mutated = DEFAULT_COEFFICIENTS.with_overrides({"pengterng.f3_gap": "5"})
    assert delta_f3_critical_residuals(mutated)["delta_f3_at_pinch"].sign() != 0
    mut2 = DEFAULT_COEFFICIENTS.with_overrides({"simons.gap": "5"})
    assert simons_pengterng_chain_residual(scalar(1), mut2).sign() != 0


def test_second_order_systems_force_targets():
    h0 = third_ff_multiplicity_two(scalar(1), {})
    r33 = second_order_system(scalar(1), (3, 3), h0)
    assert r33.solution.kind == "underdetermined"
    assert r33.forced_value is not None and r33.forced_value.sign() == 0
    # h_1133 + h_2233 + h_3333 = 0 holds in every solution once h_4433 = 0
    functional = r33.system.forced_functional({"h1133": 1, "h2233": 1, "h3333": 1})
    assert functional is not None and functional.sign() == 0
    h114 = third_ff_multiplicity_two(scalar(1), {"h114": 1})
    r44 = second_order_system(scalar(1), (4, 4), h114)
    assert r44.forced_value is not None and r44.forced_value.sign() == 0


def test_second_order_middle_equation_is_load_bearing():
    # dropping the middle displayed equation loses the forced values, which
    # is why it stays in the constraint matrices by default
    h0 = third_ff_multiplicity_two(scalar(1), {})
    relaxed = second_order_system(scalar(1), (3, 3), h0, include_middle=False)
    assert relaxed.forced_value is None
    relaxed44 = second_order_system(scalar(1), (4, 4), h0, include_middle=False)
    assert relaxed44.forced_value is None


def test_second_order_rejects_nonconforming_jets():
    bad = ThirdFF({"h113": 1})
    with pytest.raises(PreconditionError):
        second_order_system(scalar(1), (3, 3), bad)
    with pytest.raises(PreconditionError):
        second_order_system(scalar(1), (2, 2), ThirdFF.zero())


def test_commutator():
    assert commutator(M2, 3, 4, 3, 4) == scalar(-2)
    assert commutator(M2, 2, 2, 3, 4).sign() == 0  # i = j
    assert commutator(M2, 3, 4, 3, 3).sign() == 0  # k = l
    for i, j, k, l in itertools.product(range(1, 5), repeat=4):
        forward = commutator(M2, i, j, k, l)
        assert (forward + commutator(M2, j, i, k, l)).sign() == 0
        assert (forward + commutator(M2, i, j, l, k)).sign() == 0


@pytest.mark.parametrize(
    "lam, gap", [("1", "-2"), ("1/2", "-1"), ("3", "-6")]
)
def test_multiplicity_two_contradiction(lam, gap):
    cert = multiplicity_two_contradiction(scalar(lam))
    assert cert.kind is CertificateKind.SIGN_IMPOSSIBILITY
    assert str(cert.details["commutator_difference"]) == gap
    assert cert.details["second_order_difference"].sign() == 0


def test_contradiction_gap_polynomial():
    coeffs = contradiction_gap_polynomial()
    assert [str(c) for c in coeffs] == ["0", "-2"]


def test_contradiction_requires_positive_lambda():
    with pytest.raises(PreconditionError):
        multiplicity_two_contradiction(scalar(-1))


def test_trace_residuals():
    h = third_ff_multiplicity_two(scalar(1), {"h111": 3, "h112": "-1/2"})
    assert all(r.sign() == 0 for r in h.trace_residuals())
