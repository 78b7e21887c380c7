"""Cubic bound margin, classification, and the circle-scan oracle."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mhsverify.errors import PreconditionError
from mhsverify.exact import ExactScalar, Ordering, scalar
from mhsverify.extremal import (
    SCAN_BACKEND,
    Triple,
    TripleClass,
    analytic_extreme,
    brute_force_extremes,
    classify,
    cubic_bound_check,
    cubic_margin,
    f3_maximality_check,
    zero_sum_triple_stream,
)
from mhsverify.rng import Lcg64
from mhsverify.spectrum import Spectrum

rationals = st.fractions(
    min_value=Fraction(-30), max_value=Fraction(30), max_denominator=25
)


def test_upper_equality_example():
    t = Triple.of(-1, -1, 2)
    bound = cubic_bound_check(t)
    assert bound.lhs == scalar(6)
    assert bound.rhs_upper.compare(scalar(6)) is Ordering.EQ
    assert bound.margin.sign() == 0
    assert classify(t) is TripleClass.UPPER_EQUALITY


def test_lower_equality_example():
    t = Triple.of(-2, 1, 1)
    assert cubic_bound_check(t).lhs == scalar(-6)
    assert cubic_bound_check(t).margin.sign() == 0
    assert classify(t) is TripleClass.LOWER_EQUALITY


def test_zero_sum_example():
    t = Triple.of(-1, 0, 1)
    bound = cubic_bound_check(t)
    assert bound.lhs.sign() == 0
    assert bound.margin == scalar("4/3")
    assert classify(t) is TripleClass.ZERO_SUM


def test_interior_example():
    t = Triple.of(-3, 1, 2)
    assert classify(t) is TripleClass.INTERIOR
    assert cubic_bound_check(t).margin == scalar("400/3")
    assert cubic_bound_check(t).lhs == scalar(-18)


def test_triple_validation():
    with pytest.raises(PreconditionError):
        Triple(scalar(1), scalar(0), scalar(-1))  # unordered
    with pytest.raises(PreconditionError):
        Triple.of(1, 1, 1)  # not zero-sum


def test_negation_swaps_equality_classes():
    assert classify(Triple.of(-2, 1, 1).negated()) is TripleClass.UPPER_EQUALITY
    assert classify(Triple.of(-1, -1, 2).negated()) is TripleClass.LOWER_EQUALITY
    assert classify(Triple.of(-3, 0, 3).negated()) is TripleClass.ZERO_SUM
    assert classify(Triple.of(-3, 1, 2).negated()) is TripleClass.INTERIOR


@given(a=rationals, b=rationals)
@settings(max_examples=200, deadline=None)
def test_margin_nonnegative_with_equality_classification(a, b):
    t = Triple.of(ExactScalar.from_rational(a), ExactScalar.from_rational(b),
                  ExactScalar.from_rational(-(a + b)))
    margin = cubic_margin(t)
    assert margin.sign() >= 0
    in_equality = classify(t) in (TripleClass.LOWER_EQUALITY, TripleClass.UPPER_EQUALITY)
    assert (margin.sign() == 0) == in_equality


def test_scan_brackets_analytic_bound():
    for s2 in (1, 6):
        result = brute_force_extremes(s2, 10**4)
        target = analytic_extreme(s2)
        assert abs(result.max_value - target) <= 1e-4
        assert abs(result.min_value + target) <= 1e-4
        assert math.isclose(result.min_value, -result.max_value, rel_tol=1e-9)


def test_scan_convergence_rate():
    for resolution in (10**3, 10**4, 10**5):
        result = brute_force_extremes(6, resolution)
        bound = 10 * (math.pi / resolution) ** 2 * 6.0 + 1e-12
        assert abs(result.max_value - 6.0) <= bound


def test_scan_rejects_small_resolution():
    with pytest.raises(PreconditionError):
        brute_force_extremes(6, 999)


def test_scan_backends_agree():
    py = brute_force_extremes(6, 20000, backend="python")
    if SCAN_BACKEND == "compiled":
        fast = brute_force_extremes(6, 20000, backend="compiled")
        assert fast.max_value == pytest.approx(py.max_value, rel=1e-12)
        assert fast.argmax == pytest.approx(py.argmax, rel=1e-12)
    assert py.backend == "python"


def test_f3_maximality():
    assert f3_maximality_check(Spectrum([-1, -1, 0, 2])) is True
    assert f3_maximality_check(Spectrum([-2, 0, -1, 3])) is False
    assert f3_maximality_check(Spectrum([0, 0, 0, 0])) is True
    with pytest.raises(PreconditionError):
        f3_maximality_check(Spectrum([1, 1, -1, -1]))  # K != 0


def test_zero_sum_stream_determinism():
    a = [str(cubic_margin(t)) for t in _take(zero_sum_triple_stream(Lcg64(9)), 5)]
    b = [str(cubic_margin(t)) for t in _take(zero_sum_triple_stream(Lcg64(9)), 5)]
    assert a == b


def _take(stream, n):
    return [next(stream) for _ in range(n)]
