"""Spectra, power sums, symmetric functions, invariants, PRNG."""

from __future__ import annotations

import pytest

from mhsverify.errors import PreconditionError
from mhsverify.exact import ExactScalar, Ordering, scalar, sqrt
from mhsverify.rng import Lcg64
from mhsverify.spectrum import (
    Spectrum,
    elementary_symmetric,
    invariants,
    k0_spectrum_stream,
    minimal_spectrum_stream,
    newton_relations_check,
    power_sum,
    random_minimal_spectrum,
)


def test_power_sum_examples():
    assert power_sum(Spectrum([1, 1, -1, -1]), 2) == scalar(4)
    assert power_sum(Spectrum([0, 0, 0, 0]), 7) == scalar(0)
    assert power_sum(Spectrum([-1, -1, 0, 2]), 3) == scalar(6)


def test_elementary_symmetric_examples():
    assert elementary_symmetric(Spectrum([1, 1, -1, -1]), 4) == scalar(1)
    assert elementary_symmetric(Spectrum([-1, -1, 0, 2]), 4) == scalar(0)
    s = Spectrum(["1/2", "-2/3", "5", "7/3"])
    assert elementary_symmetric(s, 1) == power_sum(s, 1)


def test_newton_relations_on_examples():
    for values in ([1, 1, -1, -1], [-1, -1, 0, 2], ["1/3", "-7/5", "2", "0"]):
        assert all(r.sign() == 0 for r in newton_relations_check(Spectrum(values)))


def test_newton_relations_property():
    stream = minimal_spectrum_stream(Lcg64(99), 10)
    for _ in range(250):
        assert all(r.sign() == 0 for r in newton_relations_check(next(stream)))


def test_invariants_examples():
    inv = invariants(Spectrum([1, 1, -1, -1]))
    assert [str(x) for x in (inv.h, inv.a2, inv.r_m, inv.f3, inv.f4, inv.k)] == [
        "0", "4", "8", "0", "4", "1",
    ]
    inv0 = invariants(Spectrum([0, 0, 0, 0]))
    assert (str(inv0.a2), str(inv0.r_m), str(inv0.k)) == ("0", "12", "0")
    inv2 = invariants(Spectrum([-1, -1, 0, 2]))
    assert (str(inv2.a2), str(inv2.f3), str(inv2.f4), str(inv2.k)) == ("6", "6", "18", "0")
    # f4 = |A|^4 / 2 on the K = 0 spectrum
    assert (inv2.f4 - inv2.a2 * inv2.a2 / 2).sign() == 0


def test_invariants_requires_dimension_four():
    with pytest.raises(PreconditionError):
        invariants(Spectrum([1, -1]))


def test_sorting_and_duplicates():
    s = Spectrum([2, -1, 0, -1])
    assert str(s) == "(-1, -1, 0, 2)"
    s_quad = Spectrum([sqrt(3), -sqrt(3) / 3, -sqrt(3) / 3, -sqrt(3) / 3])
    assert s_quad.is_minimal
    assert s_quad[3].compare(sqrt(3)) is Ordering.EQ


def test_reflection_involution():
    s = Spectrum([-1, -1, 0, 2])
    r = s.reflected()
    assert str(r) == "(-2, 0, 1, 1)"
    assert str(r.reflected()) == str(s)
    assert invariants(r).a2 == invariants(s).a2


def test_random_minimal_spectrum_determinism():
    a = random_minimal_spectrum(1)
    b = random_minimal_spectrum(1)
    assert a == b
    assert random_minimal_spectrum(2) != a


def test_random_minimal_spectrum_contract():
    for seed in range(20):
        s = random_minimal_spectrum(seed, bound=7)
        assert s.is_minimal
        raw = s.raw_values()
        assert raw is not None
        for v in raw:
            assert abs(v) <= 7
            assert v.denominator <= 1000
        for x, y in zip(s.values, s.values[1:]):
            assert x.compare(y) in (Ordering.LT, Ordering.EQ)


def test_k0_stream_contract():
    stream = k0_spectrum_stream(Lcg64(4), 9)
    for _ in range(30):
        s = next(stream)
        assert s.is_minimal
        assert elementary_symmetric(s, 4).sign() == 0


def test_power_sum_positivity():
    stream = minimal_spectrum_stream(Lcg64(11), 10)
    for _ in range(50):
        s = next(stream)
        p2 = power_sum(s, 2)
        assert p2.sign() >= 0
        if p2.sign() == 0:
            assert all(v.sign() == 0 for v in s)
