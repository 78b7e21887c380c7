"""Cartan residuals, Muenzner values, the K = 0 case analysis, Clifford data."""

from __future__ import annotations

from fractions import Fraction

import pytest

from mhsverify.certificates import CertificateKind
from mhsverify.errors import PreconditionError
from mhsverify.exact import ExactScalar, Ordering, scalar, sqrt
from mhsverify.isoparametric import (
    CaseK0,
    IsoparametricData,
    assert_case_hypotheses,
    cartan_residual,
    case_analysis_k0,
    clifford_data,
    clifford_spectrum,
    isoparametric_k0_conclusion,
    munzner_a2,
    munzner_allowed_set,
)
from mhsverify.spectrum import Spectrum, invariants


def test_cartan_residual_clifford_g2():
    data = IsoparametricData(mu=(scalar(-1), scalar(1)), m=(2, 2))
    assert cartan_residual(data, 1).sign() == 0
    assert cartan_residual(data, 2).sign() == 0


def test_cartan_residual_g3_parametrized():
    lam = scalar(-3)
    data = IsoparametricData(mu=(lam, scalar(0), -lam), m=(1, 2, 1))
    # 2/lambda1 + (1 - lambda1^2)/(2 lambda1) at lambda1 = -3
    expected = 2 * (scalar(1) / lam) + (scalar(1) - lam * lam) / (2 * lam)
    assert (cartan_residual(data, 1) - expected).sign() == 0
    # zero exactly at lambda1 = -sqrt(5)
    root = -sqrt(5)
    data5 = IsoparametricData(mu=(root, scalar(0), -root), m=(1, 2, 1))
    assert cartan_residual(data5, 1).sign() == 0


def test_cartan_residual_never_zero_branch():
    for t in (-2, -3, "-7/2"):
        lam = scalar(t)
        data = IsoparametricData(mu=(lam, scalar(0), -lam / 2), m=(1, 1, 2))
        got = cartan_residual(data, 2)
        assert (got - 3 / lam).sign() == 0
        assert got.sign() != 0


def test_cartan_antisymmetry_under_global_flip():
    data = IsoparametricData(
        mu=(scalar("-5/2"), scalar(0), scalar(1), scalar(4)), m=(1, 1, 1, 1)
    )
    flipped = IsoparametricData(
        mu=tuple(-v for v in reversed(data.mu)), m=tuple(reversed(data.m))
    )
    g = data.g
    for i in range(1, g + 1):
        a = cartan_residual(data, i)
        b = cartan_residual(flipped, g + 1 - i)
        assert (a + b).sign() == 0


def test_munzner_values():
    assert munzner_a2(3, 4) == scalar(8)
    assert munzner_a2(1, 4) == scalar(0)
    assert munzner_a2(4, 4) == scalar(12)
    assert [str(v) for v in munzner_allowed_set(4)] == ["0", "4", "8", "12", "20"]
    with pytest.raises(PreconditionError):
        munzner_a2(5, 4)


def test_case_lambda3_zero():
    cert = case_analysis_k0(CaseK0.LAMBDA3_ZERO)
    assert cert.kind is CertificateKind.MUNZNER_MISMATCH
    lam1 = cert.details["lambda1"]
    assert lam1.compare(-sqrt(5)) is Ordering.EQ
    a, b, d = lam1.quad_parts
    assert (a, b, d) == (0, -1, 5)  # honestly in Q(sqrt 5)
    assert cert.details["found"] == scalar(10)
    assert cert.details["expected"] == scalar(8)
    assert cert.details["residual_at_root"].sign() == 0


def test_case_lambda3_zero_without_munzner_is_consistent():
    cert = case_analysis_k0(CaseK0.LAMBDA3_ZERO, munzner_check=False)
    assert cert.kind is CertificateKind.CONSISTENT
    assert cert.details["lambda1"].compare(-sqrt(5)) is Ordering.EQ


def test_case_lambda3_eq_lambda4():
    cert = case_analysis_k0(CaseK0.LAMBDA3_EQ_LAMBDA4)
    assert cert.kind is CertificateKind.NO_REAL_SOLUTION
    assert cert.details["residual_expression"] == "3/lambda1"


def test_case_lambda3_lt_lambda4():
    cert = case_analysis_k0(CaseK0.LAMBDA3_LT_LAMBDA4)
    assert cert.kind is CertificateKind.SIGN_IMPOSSIBILITY
    assert "lambda3^2" in cert.details["quadratic_form"]


def test_conclusion():
    cert = isoparametric_k0_conclusion()
    assert cert.kind is CertificateKind.TOTALLY_GEODESIC
    assert len(cert.cases) == 3
    relaxed = isoparametric_k0_conclusion(munzner_check=False)
    assert relaxed.kind is CertificateKind.CONSISTENT


def test_case_hypothesis_guard():
    with pytest.raises(PreconditionError, match="Gauss"):
        assert_case_hypotheses(Spectrum([1, 1, -1, -1]))
    with pytest.raises(PreconditionError, match="minimal"):
        assert_case_hypotheses(Spectrum([0, 0, 0, 1]))
    with pytest.raises(PreconditionError, match="geodesic"):
        assert_case_hypotheses(Spectrum([0, 0, 0, 0]))
    # invalid sample for the lambda3 = 0 family: positive t breaks ordering
    with pytest.raises(PreconditionError):
        case_analysis_k0(CaseK0.LAMBDA3_ZERO, samples=[scalar(2)])


def test_isoparametric_data_validation():
    with pytest.raises(PreconditionError):
        IsoparametricData(mu=(scalar(1), scalar(1)), m=(2, 2))
    with pytest.raises(PreconditionError):
        IsoparametricData(mu=(scalar(1), scalar(2)), m=(0, 4))


def test_clifford_family():
    expected_k = {1: Fraction(-1, 3), 2: Fraction(1), 3: Fraction(-1, 3)}
    for k in (1, 2, 3):
        spectrum = clifford_spectrum(k)
        data = clifford_data(k)
        assert spectrum.is_minimal
        for i in (1, 2):
            assert cartan_residual(data, i).sign() == 0
        inv = invariants(spectrum)
        assert inv.a2 == scalar(4)
        assert inv.a2.compare(munzner_a2(2, 4)) is Ordering.EQ
        assert inv.k.compare(ExactScalar.from_rational(expected_k[k])) is Ordering.EQ
        assert inv.k.sign() != 0
