"""Curvature tables, closed forms, GBC, structure predicates."""

from __future__ import annotations

import math

import pytest

from mhsverify.coefficients import DEFAULT_COEFFICIENTS
from mhsverify.curvature import (
    clifford_s2s2_gbc_total,
    closed_form_check,
    gbc_integrand,
    gbc_integrand_detail,
    gbc_k0_reduced_coefficients,
    riemann_from_spectrum,
    special_structure_predicates,
    verify_point_identities,
)
from mhsverify.errors import IdentityCheckError, PreconditionError
from mhsverify.exact import scalar, sqrt
from mhsverify.rng import Lcg64
from mhsverify.spectrum import Spectrum, invariants, k0_spectrum_stream, minimal_spectrum_stream


def test_riemann_components_totally_geodesic():
    point = riemann_from_spectrum(Spectrum([0, 0, 0, 0]))
    for i in range(4):
        for j in range(4):
            for k in range(4):
                for l in range(4):
                    expected = (1 if (i == k and j == l) else 0) - (
                        1 if (i == l and j == k) else 0
                    )
                    assert point.riemann[i][j][k][l] == scalar(expected)


def test_riemann_components_clifford():
    point = riemann_from_spectrum(Spectrum([1, 1, -1, -1]))
    # sorted spectrum is (-1,-1,1,1): R_1212 = 1 + 1 = 2, R_1313 = 1 - 1 = 0
    assert point.riemann[0][1][0][1] == scalar(2)
    assert point.riemann[0][2][0][2] == scalar(0)
    point.check_invariants()


def test_closed_form_check_examples():
    assert all(r.sign() == 0 for r in closed_form_check(Spectrum([1, 1, -1, -1])))
    assert all(r.sign() == 0 for r in closed_form_check(Spectrum([0, 0, 0, 0])))
    p = riemann_from_spectrum(Spectrum([1, 1, -1, -1]))
    assert str(p.ric2) == "16"
    assert str(p.w2) == "64/3"


def test_closed_form_check_requires_minimal():
    with pytest.raises(PreconditionError):
        closed_form_check(Spectrum([1, 1, 1, 1]))


def test_gbc_examples():
    assert gbc_integrand(Spectrum([1, 1, -1, -1])) == scalar(16)
    assert gbc_integrand(Spectrum([0, 0, 0, 0])) == scalar(12)
    assert gbc_integrand(Spectrum([-1, -1, 0, 2])) == scalar(0)


def test_gbc_k0_family_reduces_to_linear():
    const, linear, quad = gbc_k0_reduced_coefficients()
    assert quad.sign() == 0
    assert str(const) == "12" and str(linear) == "-2"
    stream = k0_spectrum_stream(Lcg64(21), 8)
    for _ in range(40):
        s = next(stream)
        inv = invariants(s)
        assert (gbc_integrand(s) - (scalar(12) - 2 * inv.a2)).sign() == 0
    # vanishing iff |A|^2 = 6
    assert gbc_integrand(Spectrum([-1, -1, 0, 2])).sign() == 0
    assert invariants(Spectrum([-1, -1, 0, 2])).a2 == scalar(6)


def test_gbc_two_route_agreement_fault_injected():
    bad = DEFAULT_COEFFICIENTS.with_overrides({"gbc.f4": "-2"})
    detail = gbc_integrand_detail(Spectrum([1, 1, -1, -1]), bad)
    assert detail.residual.sign() != 0
    with pytest.raises(IdentityCheckError):
        gbc_integrand(Spectrum([1, 1, -1, -1]), bad)


def test_structure_predicates():
    geo = special_structure_predicates(Spectrum([0, 0, 0, 0]))
    assert (geo.locally_conformally_flat, geo.einstein, geo.willmore) == (True, True, True)
    cliff = special_structure_predicates(Spectrum([1, 1, -1, -1]))
    assert (cliff.locally_conformally_flat, cliff.einstein, cliff.willmore) == (
        False,
        True,
        True,
    )
    jet = special_structure_predicates(Spectrum([-1, -1, 0, 2]))
    assert jet.willmore is False
    lcf = special_structure_predicates(Spectrum([-3, 1, 1, 1]))
    assert lcf.locally_conformally_flat is True
    # componentwise W = 0 on the conformally flat witness
    point = riemann_from_spectrum(Spectrum([-3, 1, 1, 1]))
    assert point.w2.sign() == 0


def test_ring_norm_matches_closed_form_and_nonnegative():
    stream = minimal_spectrum_stream(Lcg64(31), 10)
    for _ in range(50):
        s = next(stream)
        point = riemann_from_spectrum(s)
        inv = invariants(s)
        assert (point.ring2 - (inv.f4 - inv.a2 * inv.a2 / 4)).sign() == 0
        assert point.ring2.sign() >= 0


def test_identity_battery_random():
    stream = minimal_spectrum_stream(Lcg64(41), 10)
    for _ in range(150):
        assert verify_point_identities(next(stream)).all_ok


def test_identity_battery_quadratic_spectrum():
    r3 = sqrt(3)
    assert verify_point_identities(Spectrum([r3, -r3 / 3, -r3 / 3, -r3 / 3])).all_ok


def test_clifford_s2s2_total_integral():
    total, expected = clifford_s2s2_gbc_total()
    assert expected == pytest.approx(16 * math.pi**2 * 4)
    assert abs(total - expected) <= 1e-9
