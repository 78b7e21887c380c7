"""Exact scalar arithmetic: representations, comparisons, parsing."""

from __future__ import annotations

from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mhsverify.errors import (
    DivisionByZeroError,
    ScalarParseError,
    UncertifiedComparisonError,
    UncertifiedNonzeroError,
)
from mhsverify.exact import (
    ExactScalar,
    ONE,
    Ordering,
    ZERO,
    parse_scalar,
    scalar,
    solve_quadratic,
    sqrt,
    squarefree_decompose,
)

rationals = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=40
)


def rat(p, q=1):
    return ExactScalar.from_rational(Fraction(p, q))


def test_rational_arithmetic_example():
    assert rat(1, 2) + rat(1, 3) == rat(5, 6)


def test_quad_multiplication_rule():
    r5 = sqrt(5)
    assert (r5 * r5).compare(rat(5)) is Ordering.EQ
    # (a + b sqrt d)(a' + b' sqrt d) expanded against the defining rule
    x = ExactScalar.quad(2, 3, 5)
    y = ExactScalar.quad(-1, Fraction(1, 2), 5)
    expect = ExactScalar.quad(2 * -1 + 3 * Fraction(1, 2) * 5, 2 * Fraction(1, 2) + 3 * -1, 5)
    assert (x * y).compare(expect) is Ordering.EQ


def test_interval_enclosure_of_one_plus_sqrt5():
    value = ONE + sqrt(5)
    lo, hi = value.bounds(256)
    width = hi - lo
    assert width <= Fraction(1, 10**30)
    mpmath.mp.dps = 120
    reference = 1 + mpmath.sqrt(5)
    assert mpmath.mpf(int(lo.numerator)) / int(lo.denominator) <= reference
    assert reference <= mpmath.mpf(int(hi.numerator)) / int(hi.denominator)


def test_compare_examples():
    assert (-sqrt(5)).compare(rat(-2)) is Ordering.LT
    assert rat(20, 3).compare(rat(6)) is Ordering.GT
    assert ZERO.compare(ZERO) is Ordering.EQ


def test_quad_normalization():
    assert ExactScalar.quad(1, 2, 9).is_rational  # 1 + 2*3
    assert ExactScalar.quad(1, 0, 5).is_rational
    value = ExactScalar.quad(0, 1, 12)  # sqrt(12) = 2 sqrt(3)
    a, b, d = value.quad_parts
    assert (a, b, d) == (0, 2, 3)


def test_mixed_radicals_demote_to_interval():
    mixed = sqrt(5) + sqrt(3)
    assert mixed.is_interval
    assert mixed.compare(rat(3)) is Ordering.GT
    assert mixed.compare(rat(4)) is Ordering.LT


def test_division_errors_are_distinct():
    with pytest.raises(DivisionByZeroError):
        ONE / (sqrt(5) - sqrt(5))  # exact zero in Q(sqrt 5)
    straddling = sqrt(2) + sqrt(3) - sqrt(2) - sqrt(3)  # interval around zero
    with pytest.raises(UncertifiedNonzeroError):
        ONE / straddling


def test_interval_comparison_uncertified_on_overlap():
    tiny = sqrt(2) + sqrt(3) - sqrt(2) - sqrt(3)
    assert tiny.compare(ZERO) is Ordering.UNCERTIFIED
    with pytest.raises(UncertifiedComparisonError):
        bool(tiny == ZERO)


def test_interval_refinement_separates_close_values():
    # sqrt(2) + sqrt(3) vs a rational below it by ~1e-25: only a refined
    # interval can tell them apart
    mpmath.mp.dps = 60
    close = Fraction(
        int(mpmath.floor((mpmath.sqrt(2) + mpmath.sqrt(3)) * 10**25)), 10**25
    )
    assert (sqrt(2) + sqrt(3)).compare(rat(close)) is Ordering.GT


def test_squarefree_decompose():
    assert squarefree_decompose(1) == (1, 1)
    assert squarefree_decompose(12) == (2, 3)
    assert squarefree_decompose(49) == (7, 1)
    assert squarefree_decompose(30) == (1, 30)


def test_sqrt_exact_forms():
    assert sqrt(rat(9, 4)) == rat(3, 2)
    v = sqrt(rat(1, 3))  # sqrt(3)/3
    a, b, d = v.quad_parts
    assert (a, b, d) == (0, Fraction(1, 3), 3)
    with pytest.raises(ValueError):
        sqrt(rat(-1))


def test_sqrt_hard_radicand_falls_back_to_interval():
    hard = rat(72057594037927941, 72057594037927943)  # two large primes
    v = sqrt(hard)
    assert v.is_interval
    lo, hi = (v * v).bounds(128)
    assert lo <= Fraction(72057594037927941, 72057594037927943) <= hi


def test_solve_quadratic():
    roots = solve_quadratic(-1, 0, 5)
    assert [str(r) for r in roots] == ["-sqrt(5)", "sqrt(5)"]
    assert solve_quadratic(1, 0, 1) == ()
    (double,) = solve_quadratic(1, -2, 1)
    assert double == ONE
    (linear,) = solve_quadratic(0, 2, -4)
    assert linear == rat(2)


@pytest.mark.parametrize(
    "text",
    ["5/6", "-3", "0.25", "7", "sqrt(5)", "-sqrt(5)", "1+2*sqrt(3)",
     "1/2-3/4*sqrt(6)", "-1/3+sqrt(7)", "2*sqrt(10)"],
)
def test_parse_emit_round_trip(text):
    value = parse_scalar(text)
    again = parse_scalar(str(value))
    assert again.compare(value) is Ordering.EQ


def test_parse_decimals_are_exact_rationals():
    assert parse_scalar("3.2361") == rat(32361, 10000)


@pytest.mark.parametrize("bad", ["", "sqrt()", "1+*sqrt(3)", "x+1", "sqrt(-3)"])
def test_parse_errors(bad):
    with pytest.raises(ScalarParseError):
        parse_scalar(bad)


@given(a=rationals, b=rationals, c=rationals)
@settings(max_examples=150, deadline=None)
def test_field_axioms_on_rationals(a, b, c):
    x, y, z = rat(a), rat(b), rat(c)
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x
    if c != 0:
        assert (x / z) * z == x


@given(a=rationals, b=rationals, c=rationals, d2=rationals)
@settings(max_examples=150, deadline=None)
def test_field_axioms_on_quadratic_extension(a, b, c, d2):
    x = ExactScalar.quad(a, b, 5)
    y = ExactScalar.quad(c, d2, 5)
    z = ExactScalar.quad(b, a, 5)
    assert ((x + y) + z).compare(x + (y + z)) is Ordering.EQ
    assert ((x * y) * z).compare(x * (y * z)) is Ordering.EQ
    assert (x * (y + z)).compare(x * y + x * z) is Ordering.EQ
    if not (c == 0 and d2 == 0):
        assert ((x / y) * y).compare(x) is Ordering.EQ


@given(vals=st.lists(st.tuples(rationals, rationals), min_size=2, max_size=6))
@settings(max_examples=100, deadline=None)
def test_compare_is_a_total_order_on_one_extension(vals):
    scalars = [ExactScalar.quad(a, b, 5) for a, b in vals]
    for x in scalars:
        for y in scalars:
            xy, yx = x.compare(y), y.compare(x)
            assert xy is not Ordering.UNCERTIFIED
            assert (xy, yx) in (
                (Ordering.LT, Ordering.GT),
                (Ordering.GT, Ordering.LT),
                (Ordering.EQ, Ordering.EQ),
            )
            for z in scalars:
                if xy is Ordering.LT and y.compare(z) is Ordering.LT:
                    assert x.compare(z) is Ordering.LT


def _leq_b_sqrt_d(t: Fraction, b: Fraction, d: int) -> bool:
    """Exact test of t <= b*sqrt(d) over the rationals."""
    if b == 0:
        return t <= 0
    if b > 0:
        return t <= 0 or t * t <= b * b * d
    return t < 0 and t * t >= b * b * d


@given(a=rationals, b=rationals)
@settings(max_examples=100, deadline=None)
def test_interval_demotion_is_sound(a, b):
    value = ExactScalar.quad(a, b, 7)
    if value.is_rational:  # b folded away (b == 0)
        return
    lo, hi = value.bounds(96)
    lo, hi = Fraction(int(lo.numerator), int(lo.denominator)), Fraction(
        int(hi.numerator), int(hi.denominator)
    )
    assert _leq_b_sqrt_d(lo - a, b, 7)  # lo <= a + b sqrt(7)
    assert _leq_b_sqrt_d(-(hi - a), -b, 7)  # a + b sqrt(7) <= hi
    assert hi - lo <= Fraction(abs(b)) * Fraction(1, 2**95)


def test_pow_and_float():
    assert rat(2) ** 10 == rat(1024)
    assert rat(2) ** 0 == ONE
    assert abs(float(sqrt(5)) - 5**0.5) < 1e-15
    assert float(rat(1, 3)) == pytest.approx(1 / 3)


def test_scalar_coercion_rejects_floats():
    with pytest.raises(TypeError):
        scalar(0.5)
