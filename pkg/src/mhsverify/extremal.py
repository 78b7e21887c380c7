"""The constrained cubic extremum bound and its brute-force oracle.

For reals a <= b <= c with a + b + c = 0,

    |a^3 + b^3 + c^3| <= (a^2 + b^2 + c^2)^(3/2) / sqrt(6),

with equality on the lower side iff b = c = -a/2, on the upper side iff
a = b = -c/2, and value zero iff b = 0, a = -c.  The bound is verified in
squared form over the rationals (margin = s2^3/6 - (sum of cubes)^2 >= 0)
so the hot path never touches the radical; the signed statement follows
from the sign of the cubic sum.

The independent oracle scans the constraint circle with a float kernel.
The kernel has a compiled (Cython) core with a pure-Python fallback,
selected at import; ``SCAN_BACKEND`` records which one is active.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Tuple

from .errors import PreconditionError, UncertifiedComparisonError
from .exact import ExactScalar, Ordering, scalar, sqrt
from .rng import Lcg64
from .spectrum import Spectrum, elementary_symmetric, power_sum

try:  # pragma: no cover - exercised through whichever backend built
    from ._cubescan import scan_cubic_extremes as _scan_compiled

    SCAN_BACKEND = "compiled"
except ImportError:  # pragma: no cover
    _scan_compiled = None
    SCAN_BACKEND = "python"

from ._cubescan_py import scan_cubic_extremes as _scan_python

__all__ = [
    "Triple",
    "TripleClass",
    "CubicBound",
    "ScanResult",
    "SCAN_BACKEND",
    "cubic_bound_check",
    "cubic_margin",
    "classify",
    "brute_force_extremes",
    "analytic_extreme",
    "f3_maximality_check",
    "zero_sum_triple_stream",
]


class TripleClass(Enum):
    LOWER_EQUALITY = "LowerEquality"
    UPPER_EQUALITY = "UpperEquality"
    ZERO_SUM = "ZeroSum"
    INTERIOR = "Interior"


def _cmp_exact(u: ExactScalar, v: ExactScalar) -> int:
    order = u.compare(v)
    if order is Ordering.UNCERTIFIED:
        raise UncertifiedComparisonError("cannot order triple entries")
    return order.value


@dataclass(frozen=True)
class Triple:
    """a <= b <= c with a + b + c = 0, all exact."""

    a: ExactScalar
    b: ExactScalar
    c: ExactScalar

    def __post_init__(self) -> None:
        if self.a.compare(self.b) is Ordering.GT or self.b.compare(self.c) is Ordering.GT:
            raise PreconditionError("triple must be ordered a <= b <= c")
        if (self.a + self.b + self.c).sign() != 0:
            raise PreconditionError("triple must sum to zero exactly")

    @classmethod
    def of(cls, x: object, y: object, z: object) -> "Triple":
        vals = sorted(
            (scalar(x), scalar(y), scalar(z)), key=functools.cmp_to_key(_cmp_exact)
        )
        return cls(*vals)

    def negated(self) -> "Triple":
        """(-c, -b, -a): the order-reversing sign flip."""
        return Triple(-self.c, -self.b, -self.a)

    def power_sums(self) -> Tuple[ExactScalar, ExactScalar]:
        """(s2, s3) = (sum of squares, sum of cubes)."""
        s2 = self.a * self.a + self.b * self.b + self.c * self.c
        s3 = self.a**3 + self.b**3 + self.c**3
        return s2, s3


@dataclass(frozen=True)
class CubicBound:
    lhs: ExactScalar  # a^3 + b^3 + c^3
    rhs_upper: ExactScalar  # s2^(3/2)/sqrt(6): exact quad, or an interval
    # when the radicand resists factoring
    margin: ExactScalar  # s2^3/6 - lhs^2, exact rational


def cubic_margin(t: Triple) -> ExactScalar:
    """s2^3/6 - (a^3+b^3+c^3)^2, exact and radical-free (the battery path)."""
    s2, s3 = t.power_sums()
    return s2**3 / 6 - s3 * s3


def cubic_bound_check(t: Triple) -> CubicBound:
    """Squared-form margin of the cubic bound; nonnegative, zero exactly at
    the equality triples."""
    s2, s3 = t.power_sums()
    return CubicBound(
        lhs=s3, rhs_upper=sqrt(s2**3 / 6), margin=s2**3 / 6 - s3 * s3
    )


def classify(t: Triple) -> TripleClass:
    """Equality-case classification by exact comparisons.

    The all-zero triple satisfies every equality clause at once; it is
    reported as LOWER_EQUALITY so that zero margin corresponds exactly to
    the two equality classes.
    """
    if (t.b - t.c).sign() == 0 and (t.a + 2 * t.b).sign() == 0:
        return TripleClass.LOWER_EQUALITY
    if (t.a - t.b).sign() == 0 and (t.c + 2 * t.a).sign() == 0:
        return TripleClass.UPPER_EQUALITY
    if t.b.sign() == 0 and (t.a + t.c).sign() == 0:
        return TripleClass.ZERO_SUM
    return TripleClass.INTERIOR


@dataclass(frozen=True)
class ScanResult:
    min_value: float
    max_value: float
    argmin: float
    argmax: float
    resolution: int
    backend: str


def brute_force_extremes(
    s2: object, resolution: int, backend: str = "auto"
) -> ScanResult:
    """Scan the circle {a+b+c = 0, a^2+b^2+c^2 = s2} at `resolution` angles.

    Pure float oracle, independent of the exact-margin route.  The sampled
    extremes bracket +-(1/sqrt 6) s2^(3/2) within 10 (pi/resolution)^2
    relative error (the objective is a pure third harmonic on the circle,
    so the peak curvature bounds the grid error).
    """
    if resolution < 1000:
        raise PreconditionError("resolution must be at least 1000")
    s2_value = float(scalar(s2)) if not isinstance(s2, float) else s2
    if s2_value <= 0:
        raise PreconditionError("s2 must be positive")
    if backend == "auto":
        backend = SCAN_BACKEND
    if backend == "compiled":
        if _scan_compiled is None:
            raise PreconditionError("compiled scan kernel is not available")
        kernel = _scan_compiled
    elif backend == "python":
        kernel = _scan_python
    else:
        raise PreconditionError(f"unknown scan backend {backend!r}")
    worst, best, arg_worst, arg_best = kernel(s2_value, resolution)
    return ScanResult(
        min_value=worst,
        max_value=best,
        argmin=arg_worst,
        argmax=arg_best,
        resolution=resolution,
        backend=backend,
    )


def analytic_extreme(s2: object) -> float:
    """(1/sqrt 6) s2^(3/2) as a float, for oracle comparisons."""
    v = float(scalar(s2)) if not isinstance(s2, float) else s2
    return v ** 1.5 / math.sqrt(6.0)


def f3_maximality_check(s: Spectrum) -> bool:
    """Whether a minimal K = 0 spectrum realizes f3 = |A|^3 / sqrt(6).

    The zero eigenvalue is peeled off and the remaining zero-sum triple is
    tested for the upper equality case via f3^2 = |A|^6 / 6 exactly.
    """
    if s.n != 4:
        raise PreconditionError("f3_maximality_check is specific to n = 4")
    if not s.is_minimal:
        raise PreconditionError("spectrum must be minimal")
    if elementary_symmetric(s, 4).sign() != 0:
        raise PreconditionError("spectrum must have a zero eigenvalue (K = 0)")
    a2 = power_sum(s, 2)
    f3 = power_sum(s, 3)
    return (f3 * f3 - a2**3 / 6).sign() == 0


def zero_sum_triple_stream(rng: Lcg64, bound: int = 10) -> Iterator[Triple]:
    """Endless deterministic stream of rational zero-sum triples."""
    if bound <= 0:
        raise PreconditionError("bound must be positive")
    while True:
        while True:
            den = rng.randint(1, 1000)
            pa = rng.randint(-bound * den, bound * den)
            pb = rng.randint(-bound * den, bound * den)
            pc = -(pa + pb)
            if abs(pc) <= bound * den:
                break
        yield Triple.of(
            ExactScalar.from_rational(pa, den),
            ExactScalar.from_rational(pb, den),
            ExactScalar.from_rational(pc, den),
        )
