"""Exact scalar arithmetic: rationals, quadratic extensions, certified intervals.

Every number in this package is an :class:`ExactScalar` in one of three
representations:

* ``rational`` -- an arbitrary-precision rational p/q;
* ``quad`` -- a + b*sqrt(d) with rational a, b and a square-free integer
  d >= 2, i.e. an element of the field Q(sqrt(d));
* ``interval`` -- a certified enclosure [lo, hi] with exact rational
  endpoints, optionally refinable to higher precision.

Arithmetic is exact whenever both operands live in Q or in the same
Q(sqrt(d)).  Mixing two different radicals (or touching an interval)
demotes the result to an interval.  Interval endpoints are rationals, so
interval *arithmetic* is itself exact; outward rounding only happens where
a radical is enclosed, controlled by the working precision.  Comparisons
that land on overlapping intervals retry with the precision doubled up to
a hard cap before giving up with ``Ordering.UNCERTIFIED``.

The rational layer is backed by ``gmpy2.mpq`` when available (a compiled
GMP core) and falls back to ``fractions.Fraction`` from the standard
library.  Set ``MHS_RATIONAL_BACKEND=fractions`` or ``=gmpy2`` to force a
backend.  ``MHS_PRECISION_BITS`` overrides the default interval working
precision (256 bits).
"""

from __future__ import annotations

import math
import os
from enum import Enum
from fractions import Fraction
from typing import Callable, Optional, Tuple, Union

from .errors import (
    DivisionByZeroError,
    ScalarParseError,
    UncertifiedComparisonError,
    UncertifiedNonzeroError,
)

__all__ = [
    "ExactScalar",
    "Ordering",
    "RATIONAL_BACKEND",
    "rational",
    "scalar",
    "sqrt",
    "solve_quadratic",
    "parse_scalar",
    "squarefree_decompose",
    "default_precision_bits",
    "max_precision_bits",
    "ZERO",
    "ONE",
]

_requested_backend = os.environ.get("MHS_RATIONAL_BACKEND", "auto").lower()
if _requested_backend in ("auto", "gmpy2"):
    try:
        from gmpy2 import mpq as _Q

        RATIONAL_BACKEND = "gmpy2"
    except ImportError:
        if _requested_backend == "gmpy2":
            raise ImportError("MHS_RATIONAL_BACKEND=gmpy2 but gmpy2 is not importable")
        _Q = Fraction
        RATIONAL_BACKEND = "fractions"
elif _requested_backend == "fractions":
    _Q = Fraction
    RATIONAL_BACKEND = "fractions"
else:
    raise ImportError(f"unknown MHS_RATIONAL_BACKEND: {_requested_backend!r}")

Rat = Union[Fraction, "_Q"]  # backend rational; duck-compatible with Fraction
RationalInput = Union[int, Fraction, str]

_BASE_PRECISION = 256
_ESCALATION_CAP = 4096


def rational(p: object = 0, q: object = 1) -> Rat:
    """Backend rational p/q, normalized (coprime, positive denominator)."""
    if q == 1:
        return _Q(p)
    return _Q(p, q)


_R0 = rational(0)
_R1 = rational(1)


def default_precision_bits() -> int:
    """Working precision for interval enclosures (env-overridable)."""
    raw = os.environ.get("MHS_PRECISION_BITS")
    if not raw:
        return _BASE_PRECISION
    try:
        bits = int(raw)
    except ValueError as exc:
        raise ScalarParseError(f"MHS_PRECISION_BITS must be an integer, got {raw!r}") from exc
    if bits < 8:
        raise ScalarParseError("MHS_PRECISION_BITS must be at least 8")
    return bits


def max_precision_bits() -> int:
    """Cap for the precision-doubling escalation on uncertified comparisons."""
    return max(_ESCALATION_CAP, default_precision_bits())


def _trial_square_decompose(
    n: int, trial_limit: Optional[int]
) -> Optional[Tuple[int, int]]:
    if n < 1:
        raise ValueError("square decomposition requires n >= 1")
    r = math.isqrt(n)
    if r * r == n:
        return r, 1
    root, core, m, p = 1, 1, n, 2
    while p * p <= m:
        if trial_limit is not None and p > trial_limit:
            # the leftover cofactor m >= trial_limit^2 has no small factor;
            # unless it is a perfect square its square-freeness is unknown
            s = math.isqrt(m)
            if s * s == m:
                return root * s, core
            return None
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            root *= p ** (e // 2)
            if e % 2:
                core *= p
        p += 1 if p == 2 else 2
    return root, core * m


def squarefree_decompose(n: int) -> Tuple[int, int]:
    """Return (r, c) with n == r*r*c and c square-free, for n >= 1."""
    result = _trial_square_decompose(n, None)
    assert result is not None
    return result


_SQRT_TRIAL_LIMIT = 10_000


def _sqrt_bounds(x: Rat, bits: int) -> Tuple[Rat, Rat]:
    """Certified rational enclosure of sqrt(x) for rational x >= 0.

    Width is at most 2**-bits.
    """
    num, den = int(x.numerator), int(x.denominator)
    if num < 0:
        raise ValueError("sqrt of a negative rational")
    if num == 0:
        return _R0, _R0
    n = num * den  # sqrt(num/den) == sqrt(num*den)/den
    shifted = n << (2 * bits)
    s = math.isqrt(shifted)
    scale = den << bits
    lo = rational(s, scale)
    if s * s == shifted:
        return lo, lo
    return lo, rational(s + 1, scale)


class Ordering(Enum):
    """Result of an exact comparison."""

    LT = -1
    EQ = 0
    GT = 1
    UNCERTIFIED = 2


_KIND_RATIONAL = "rational"
_KIND_QUAD = "quad"
_KIND_INTERVAL = "interval"

Refiner = Callable[[int], Tuple[Rat, Rat]]


class ExactScalar:
    """An immutable exact scalar (rational, quadratic, or certified interval)."""

    __slots__ = ("_kind", "_a", "_b", "_d", "_lo", "_hi", "_refine")

    def __init__(self) -> None:  # pragma: no cover - defensive
        raise TypeError("use ExactScalar.from_rational / .quad / .interval / scalar()")

    # -- constructors -------------------------------------------------

    @classmethod
    def _new(cls, kind: str) -> "ExactScalar":
        self = object.__new__(cls)
        self._kind = kind
        self._a = self._b = self._lo = self._hi = self._refine = None
        self._d = 0
        return self

    @classmethod
    def from_rational(cls, p: object = 0, q: object = 1) -> "ExactScalar":
        self = cls._new(_KIND_RATIONAL)
        self._a = rational(p, q)
        return self

    @classmethod
    def quad(cls, a: object, b: object, d: int) -> "ExactScalar":
        """The value a + b*sqrt(d); normalizes to rational when possible."""
        if d < 0:
            raise ValueError("quadratic extensions Q(sqrt(d)) require d >= 0")
        a_r, b_r = rational(a), rational(b)
        if d == 0:
            return cls.from_rational(a_r)
        decomposed = _trial_square_decompose(d, _SQRT_TRIAL_LIMIT)
        if decomposed is None:
            raise ValueError(f"cannot certify the square-free part of d = {d}")
        root, core = decomposed
        b_r = b_r * root
        if core == 1:
            return cls.from_rational(a_r + b_r)
        if b_r == 0:
            return cls.from_rational(a_r)
        self = cls._new(_KIND_QUAD)
        self._a, self._b, self._d = a_r, b_r, core
        return self

    @classmethod
    def interval(cls, lo: object, hi: object, refine: Optional[Refiner] = None) -> "ExactScalar":
        lo_r, hi_r = rational(lo), rational(hi)
        if lo_r > hi_r:
            raise ValueError("interval requires lo <= hi")
        self = cls._new(_KIND_INTERVAL)
        self._lo, self._hi, self._refine = lo_r, hi_r, refine
        return self

    # -- inspection ---------------------------------------------------

    @property
    def kind(self) -> str:
        return self._kind

    @property
    def is_rational(self) -> bool:
        return self._kind == _KIND_RATIONAL

    @property
    def is_quad(self) -> bool:
        return self._kind == _KIND_QUAD

    @property
    def is_interval(self) -> bool:
        return self._kind == _KIND_INTERVAL

    @property
    def rational_value(self) -> Rat:
        if self._kind != _KIND_RATIONAL:
            raise ValueError(f"not a rational scalar: {self}")
        return self._a

    @property
    def quad_parts(self) -> Tuple[Rat, Rat, int]:
        """(a, b, d) for a quad value a + b*sqrt(d)."""
        if self._kind != _KIND_QUAD:
            raise ValueError(f"not a quadratic scalar: {self}")
        return self._a, self._b, self._d

    def bounds(self, bits: Optional[int] = None) -> Tuple[Rat, Rat]:
        """Certified rational enclosure [lo, hi] of the exact value."""
        if bits is None:
            bits = default_precision_bits()
        if self._kind == _KIND_RATIONAL:
            return self._a, self._a
        if self._kind == _KIND_QUAD:
            s_lo, s_hi = _sqrt_bounds(rational(self._d), bits)
            if self._b >= 0:
                return self._a + self._b * s_lo, self._a + self._b * s_hi
            return self._a + self._b * s_hi, self._a + self._b * s_lo
        if self._refine is not None:
            return self._refine(bits)
        return self._lo, self._hi

    # -- comparison ---------------------------------------------------

    def compare(self, other: object) -> Ordering:
        """Exact trichotomy where possible, UNCERTIFIED otherwise."""
        rhs = _coerce(other)
        if rhs is NotImplemented:
            raise TypeError(f"cannot compare ExactScalar with {type(other).__name__}")
        ka, kb = self._kind, rhs._kind
        if ka == _KIND_RATIONAL and kb == _KIND_RATIONAL:
            if self._a < rhs._a:
                return Ordering.LT
            if self._a > rhs._a:
                return Ordering.GT
            return Ordering.EQ
        if _KIND_INTERVAL not in (ka, kb):
            d = self._d if ka == _KIND_QUAD else rhs._d
            if not (ka == _KIND_QUAD and kb == _KIND_QUAD and self._d != rhs._d):
                a1, b1 = _as_quad_parts(self, d)
                a2, b2 = _as_quad_parts(rhs, d)
                sign = _quad_sign(a1 - a2, b1 - b2, d)
                return Ordering(sign)
        bits = default_precision_bits()
        cap = max_precision_bits()
        while True:
            lo1, hi1 = self.bounds(bits)
            lo2, hi2 = rhs.bounds(bits)
            if hi1 < lo2:
                return Ordering.LT
            if hi2 < lo1:
                return Ordering.GT
            if lo1 == hi1 == lo2 == hi2:
                return Ordering.EQ
            if bits >= cap:
                return Ordering.UNCERTIFIED
            bits *= 2

    def sign(self) -> int:
        """-1, 0 or +1; raises if the sign cannot be certified."""
        order = self.compare(ZERO)
        if order is Ordering.UNCERTIFIED:
            raise UncertifiedComparisonError(f"sign of {self} uncertified at max precision")
        return order.value

    @property
    def is_zero(self) -> bool:
        return self.sign() == 0

    def _certified(self, order: Ordering) -> Ordering:
        if order is Ordering.UNCERTIFIED:
            raise UncertifiedComparisonError("comparison uncertified at max precision")
        return order

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (ExactScalar, int, Fraction)) and not _is_backend_rat(other):
            return NotImplemented
        return self._certified(self.compare(other)) is Ordering.EQ

    def __lt__(self, other: object) -> bool:
        return self._certified(self.compare(other)) is Ordering.LT

    def __le__(self, other: object) -> bool:
        return self._certified(self.compare(other)) in (Ordering.LT, Ordering.EQ)

    def __gt__(self, other: object) -> bool:
        return self._certified(self.compare(other)) is Ordering.GT

    def __ge__(self, other: object) -> bool:
        return self._certified(self.compare(other)) in (Ordering.GT, Ordering.EQ)

    def __hash__(self) -> int:
        if self._kind == _KIND_RATIONAL:
            return hash(self._a)
        if self._kind == _KIND_QUAD:
            return hash((self._a, self._b, self._d))
        raise TypeError("interval scalars are unhashable")

    def __bool__(self) -> bool:
        return self.sign() != 0

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: object) -> "ExactScalar":
        rhs = _coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return _add(self, rhs)

    __radd__ = __add__

    def __sub__(self, other: object) -> "ExactScalar":
        rhs = _coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return _add(self, _neg(rhs))

    def __rsub__(self, other: object) -> "ExactScalar":
        lhs = _coerce(other)
        if lhs is NotImplemented:
            return NotImplemented
        return _add(lhs, _neg(self))

    def __mul__(self, other: object) -> "ExactScalar":
        rhs = _coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return _mul(self, rhs)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "ExactScalar":
        rhs = _coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return _div(self, rhs)

    def __rtruediv__(self, other: object) -> "ExactScalar":
        lhs = _coerce(other)
        if lhs is NotImplemented:
            return NotImplemented
        return _div(lhs, self)

    def __neg__(self) -> "ExactScalar":
        return _neg(self)

    def __pos__(self) -> "ExactScalar":
        return self

    def __abs__(self) -> "ExactScalar":
        return _neg(self) if self.sign() < 0 else self

    def __pow__(self, n: int) -> "ExactScalar":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return _div(ONE, self.__pow__(-n))
        result = ONE
        base = self
        k = n
        while k:
            if k & 1:
                result = _mul(result, base)
            base = _mul(base, base)
            k >>= 1
        return result

    # -- conversion / display ------------------------------------------

    def __float__(self) -> float:
        if self._kind == _KIND_RATIONAL:
            return int(self._a.numerator) / int(self._a.denominator)
        if self._kind == _KIND_QUAD:
            return float(ExactScalar.from_rational(self._a)) + float(
                ExactScalar.from_rational(self._b)
            ) * math.sqrt(self._d)
        lo, hi = self.bounds()
        mid = (lo + hi) / 2
        return int(mid.numerator) / int(mid.denominator)

    def __str__(self) -> str:
        if self._kind == _KIND_RATIONAL:
            return str(self._a)
        if self._kind == _KIND_QUAD:
            return _format_quad(self._a, self._b, self._d)
        lo, hi = self.bounds()
        return f"interval[{float(ExactScalar.from_rational(lo))!r}, {float(ExactScalar.from_rational(hi))!r}]"

    def __repr__(self) -> str:
        return f"ExactScalar({str(self)!r})"


def _is_backend_rat(x: object) -> bool:
    return isinstance(x, (Fraction, _Q))


def _coerce(x: object) -> "ExactScalar":
    if isinstance(x, ExactScalar):
        return x
    if isinstance(x, (int, Fraction)) or _is_backend_rat(x):
        return ExactScalar.from_rational(x)
    return NotImplemented


def _as_quad_parts(x: ExactScalar, d: int) -> Tuple[Rat, Rat]:
    if x._kind == _KIND_RATIONAL:
        return x._a, _R0
    return x._a, x._b


def _quad_sign(a: Rat, b: Rat, d: int) -> int:
    """Exact sign of a + b*sqrt(d) for square-free d >= 2."""
    if b == 0:
        return (a > 0) - (a < 0)
    if a == 0:
        return 1 if b > 0 else -1
    if a > 0 and b > 0:
        return 1
    if a < 0 and b < 0:
        return -1
    t = a * a - b * b * d
    # t == 0 would force sqrt(d) rational, impossible for square-free d >= 2
    if t == 0:
        raise ArithmeticError(f"sqrt({d}) behaved rationally; corrupt quad value")
    if a > 0:  # b < 0
        return 1 if t > 0 else -1
    return -1 if t > 0 else 1


def _make_quad(a: Rat, b: Rat, d: int) -> ExactScalar:
    # internal: d already square-free >= 2
    if b == 0:
        return ExactScalar.from_rational(a)
    self = ExactScalar._new(_KIND_QUAD)
    self._a, self._b, self._d = a, b, d
    return self


def _neg(x: ExactScalar) -> ExactScalar:
    if x._kind == _KIND_RATIONAL:
        return ExactScalar.from_rational(-x._a)
    if x._kind == _KIND_QUAD:
        return _make_quad(-x._a, -x._b, x._d)

    def refine(bits: int, _x: ExactScalar = x) -> Tuple[Rat, Rat]:
        lo, hi = _x.bounds(bits)
        return -hi, -lo

    lo, hi = x.bounds()
    return ExactScalar.interval(-hi, -lo, refine=refine)


def _iv_add(p: Tuple[Rat, Rat], q: Tuple[Rat, Rat]) -> Tuple[Rat, Rat]:
    return p[0] + q[0], p[1] + q[1]


def _iv_mul(p: Tuple[Rat, Rat], q: Tuple[Rat, Rat]) -> Tuple[Rat, Rat]:
    products = (p[0] * q[0], p[0] * q[1], p[1] * q[0], p[1] * q[1])
    return min(products), max(products)


def _iv_combine(x: ExactScalar, y: ExactScalar, fn) -> ExactScalar:
    def refine(bits: int, _x: ExactScalar = x, _y: ExactScalar = y, _fn=fn) -> Tuple[Rat, Rat]:
        return _fn(_x.bounds(bits), _y.bounds(bits))

    lo, hi = refine(default_precision_bits())
    return ExactScalar.interval(lo, hi, refine=refine)


def _add(x: ExactScalar, y: ExactScalar) -> ExactScalar:
    ka, kb = x._kind, y._kind
    if ka == _KIND_RATIONAL and kb == _KIND_RATIONAL:
        return ExactScalar.from_rational(x._a + y._a)
    if _KIND_INTERVAL not in (ka, kb):
        if ka == _KIND_QUAD and kb == _KIND_QUAD and x._d != y._d:
            return _iv_combine(x, y, _iv_add)
        d = x._d if ka == _KIND_QUAD else y._d
        a1, b1 = _as_quad_parts(x, d)
        a2, b2 = _as_quad_parts(y, d)
        return _make_quad(a1 + a2, b1 + b2, d)
    return _iv_combine(x, y, _iv_add)


def _mul(x: ExactScalar, y: ExactScalar) -> ExactScalar:
    ka, kb = x._kind, y._kind
    if ka == _KIND_RATIONAL and kb == _KIND_RATIONAL:
        return ExactScalar.from_rational(x._a * y._a)
    if _KIND_INTERVAL not in (ka, kb):
        if ka == _KIND_QUAD and kb == _KIND_QUAD and x._d != y._d:
            return _iv_combine(x, y, _iv_mul)
        d = x._d if ka == _KIND_QUAD else y._d
        a1, b1 = _as_quad_parts(x, d)
        a2, b2 = _as_quad_parts(y, d)
        return _make_quad(a1 * a2 + b1 * b2 * d, a1 * b2 + a2 * b1, d)
    return _iv_combine(x, y, _iv_mul)


def _div(x: ExactScalar, y: ExactScalar) -> ExactScalar:
    ka, kb = x._kind, y._kind
    if kb == _KIND_RATIONAL:
        if y._a == 0:
            raise DivisionByZeroError("division by exact zero")
        if ka == _KIND_RATIONAL:
            return ExactScalar.from_rational(x._a / y._a)
        if ka == _KIND_QUAD:
            return _make_quad(x._a / y._a, x._b / y._a, x._d)
    elif kb == _KIND_QUAD:
        if ka != _KIND_INTERVAL and (ka == _KIND_RATIONAL or x._d == y._d):
            d = y._d
            a1, b1 = _as_quad_parts(x, d)
            a2, b2 = y._a, y._b
            norm = a2 * a2 - b2 * b2 * d
            # norm == 0 iff a2 == b2 == 0 for square-free d; b2 != 0 here
            return _make_quad(
                (a1 * a2 - b1 * b2 * d) / norm, (b1 * a2 - a1 * b2) / norm, d
            )
    # interval route; certify the divisor away from zero, escalating precision
    bits = default_precision_bits()
    cap = max_precision_bits()
    while True:
        lo2, hi2 = y.bounds(bits)
        if lo2 > 0 or hi2 < 0:
            break
        if lo2 == 0 and hi2 == 0:
            raise DivisionByZeroError("division by exact zero (point interval)")
        if bits >= cap:
            raise UncertifiedNonzeroError(
                f"divisor {y} cannot be certified nonzero at {cap} bits"
            )
        bits *= 2
    min_bits = bits

    def refine(b: int, _x: ExactScalar = x, _y: ExactScalar = y, _mb: int = min_bits) -> Tuple[Rat, Rat]:
        b = max(b, _mb)
        lo1, hi1 = _x.bounds(b)
        lo2_, hi2_ = _y.bounds(b)
        quotients = (lo1 / lo2_, lo1 / hi2_, hi1 / lo2_, hi1 / hi2_)
        return min(quotients), max(quotients)

    lo, hi = refine(default_precision_bits())
    return ExactScalar.interval(lo, hi, refine=refine)


ZERO = ExactScalar.from_rational(0)
ONE = ExactScalar.from_rational(1)


def scalar(x: object) -> ExactScalar:
    """Coerce an int, Fraction, backend rational, str or ExactScalar."""
    if isinstance(x, ExactScalar):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    coerced = _coerce(x)
    if coerced is NotImplemented:
        raise TypeError(
            f"cannot build an ExactScalar from {type(x).__name__}; "
            "pass exact data (int, Fraction, str), not floats"
        )
    return coerced


def sqrt(x: object) -> ExactScalar:
    """Square root: rational or quad result for rational input when the
    radicand factors within budget, a certified interval otherwise."""
    v = scalar(x)
    if v.is_rational:
        r = v.rational_value
        if r < 0:
            raise ValueError("sqrt of a negative value")
        if r == 0:
            return ZERO
        num, den = int(r.numerator), int(r.denominator)
        decomposed = _trial_square_decompose(num * den, _SQRT_TRIAL_LIMIT)
        if decomposed is not None:
            root, core = decomposed
            if core == 1:
                return ExactScalar.from_rational(root, den)
            return _make_quad(_R0, rational(root, den), core)
        # radicand resists factoring; fall through to the interval enclosure

    def refine(bits: int, _v: ExactScalar = v) -> Tuple[Rat, Rat]:
        lo, hi = _v.bounds(bits)
        if hi < 0:
            raise ValueError("sqrt of a provably negative value")
        lo = max(lo, _R0)
        return _sqrt_bounds(lo, bits)[0], _sqrt_bounds(hi, bits)[1]

    lo, hi = refine(default_precision_bits())
    return ExactScalar.interval(lo, hi, refine=refine)


def solve_quadratic(c2: object, c1: object, c0: object) -> Tuple[ExactScalar, ...]:
    """Real roots of c2*x**2 + c1*x + c0 = 0, ascending, for rational coefficients.

    Roots land in Q or Q(sqrt(d)).  Raises on the degenerate identically-zero
    equation.
    """
    a, b, c = scalar(c2), scalar(c1), scalar(c0)
    for coeff in (a, b, c):
        if not coeff.is_rational:
            raise ValueError("solve_quadratic expects rational coefficients")
    if a.rational_value == 0:
        if b.rational_value == 0:
            if c.rational_value == 0:
                raise ValueError("identically zero equation has no root set")
            return ()
        return (ExactScalar.from_rational(-c.rational_value / b.rational_value),)
    disc = b * b - ExactScalar.from_rational(4) * a * c
    s = disc.sign()
    if s < 0:
        return ()
    if s == 0:
        return (-b / (2 * a),)
    r = sqrt(disc)
    lo, hi = (-b - r) / (2 * a), (-b + r) / (2 * a)
    return (lo, hi) if lo.compare(hi) is Ordering.LT else (hi, lo)


# -- text round-trip ----------------------------------------------------


def _parse_rational_text(text: str) -> Rat:
    text = text.strip()
    if not text:
        raise ScalarParseError("empty rational literal")
    try:
        return rational(Fraction(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ScalarParseError(f"bad rational literal {text!r}") from exc


def parse_scalar(text: str) -> ExactScalar:
    """Parse "p/q", decimal literals, and "a+b*sqrt(d)" forms.

    Decimal literals are parsed as exact rationals.  Mirrors ``str()`` on
    rational and quad values.
    """
    s = text.strip()
    if "sqrt" not in s:
        return ExactScalar.from_rational(_parse_rational_text(s))
    idx = s.index("sqrt")
    head, tail = s[:idx].strip(), s[idx + 4 :].strip()
    if not (tail.startswith("(") and tail.endswith(")")):
        raise ScalarParseError(f"malformed sqrt term in {text!r}")
    try:
        d = int(tail[1:-1].strip())
    except ValueError as exc:
        raise ScalarParseError(f"sqrt argument must be an integer in {text!r}") from exc
    if d < 0:
        raise ScalarParseError(f"sqrt argument must be nonnegative in {text!r}")
    # split head into "a <sign>" and a coefficient for the sqrt term
    if head.endswith("*"):
        coeff_txt = head[:-1].strip()
        split_at = -1
        for i in range(len(coeff_txt) - 1, 0, -1):
            if coeff_txt[i] in "+-" and coeff_txt[i - 1] not in "eE+-*/":
                split_at = i
                break
        if split_at > 0:
            a_txt = coeff_txt[:split_at]
            b_txt = coeff_txt[split_at] + coeff_txt[split_at + 1 :]
        else:
            a_txt, b_txt = "0", coeff_txt
    elif head in ("", "+"):
        a_txt, b_txt = "0", "1"
    elif head == "-":
        a_txt, b_txt = "0", "-1"
    elif head.endswith("+"):
        a_txt, b_txt = head[:-1], "1"
    elif head.endswith("-"):
        a_txt, b_txt = head[:-1], "-1"
    else:
        raise ScalarParseError(f"malformed scalar {text!r}")
    a = _parse_rational_text(a_txt)
    b = _parse_rational_text(b_txt)
    return ExactScalar.quad(a, b, d)


def _format_quad(a: Rat, b: Rat, d: int) -> str:
    if b == 1:
        term = f"sqrt({d})"
    elif b == -1:
        term = f"-sqrt({d})"
    else:
        term = f"{b}*sqrt({d})"
    if a == 0:
        return term
    return f"{a}+{term}" if b > 0 else f"{a}-{term[1:]}"
