"""Principal-curvature spectra and their scalar invariants.

A :class:`Spectrum` is the ordered list of principal curvatures of a
hypersurface point with the shape operator already diagonalized; all
derived quantities (power sums f_k, elementary symmetric functions
sigma_k, mean curvature, |A|^2, scalar curvature, Gauss-Kronecker
curvature) are computed exactly from it.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import IdentityCheckError, PreconditionError, UncertifiedComparisonError
from .exact import ExactScalar, Ordering, Rat, parse_scalar, rational, scalar
from .rng import Lcg64

__all__ = [
    "Spectrum",
    "InvariantSet",
    "power_sum",
    "elementary_symmetric",
    "newton_relations_check",
    "invariants",
    "random_minimal_spectrum",
    "minimal_spectrum_stream",
    "k0_spectrum_stream",
]


def _cmp(x: ExactScalar, y: ExactScalar) -> int:
    order = x.compare(y)
    if order is Ordering.UNCERTIFIED:
        raise UncertifiedComparisonError("cannot sort spectrum values")
    return order.value


class Spectrum:
    """Ordered principal curvatures lambda_1 <= ... <= lambda_n (n >= 2)."""

    __slots__ = ("_values", "_raw")

    def __init__(self, values: Iterable[object]) -> None:
        vals = [scalar(v) for v in values]
        if len(vals) < 2:
            raise PreconditionError("a spectrum needs at least two principal curvatures")
        vals.sort(key=functools.cmp_to_key(_cmp))
        self._values = tuple(vals)
        raw: Optional[Tuple[Rat, ...]]
        if all(v.is_rational for v in vals):
            raw = tuple(v.rational_value for v in vals)
        else:
            raw = None
        self._raw = raw

    @classmethod
    def from_text(cls, text: str) -> "Spectrum":
        return cls(parse_scalar(part) for part in text.split(","))

    @property
    def values(self) -> Tuple[ExactScalar, ...]:
        return self._values

    @property
    def n(self) -> int:
        return len(self._values)

    def raw_values(self) -> Optional[Tuple[Rat, ...]]:
        """Backend rationals when every entry is rational, else None."""
        return self._raw

    @property
    def is_minimal(self) -> bool:
        if self._raw is not None:
            return sum(self._raw) == 0
        total = self._values[0]
        for v in self._values[1:]:
            total = total + v
        return total.sign() == 0

    def reflected(self) -> "Spectrum":
        """Negate-and-reverse involution mapping the smallest curvature
        analysis onto the largest."""
        return Spectrum(-v for v in self._values)

    def __iter__(self) -> Iterator[ExactScalar]:
        return iter(self._values)

    def __len__(self) -> int:
        return len(self._values)

    def __getitem__(self, i: int) -> ExactScalar:
        return self._values[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Spectrum):
            return NotImplemented
        return len(self) == len(other) and all(
            a.compare(b) is Ordering.EQ for a, b in zip(self, other)
        )

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self._values) + ")"

    def __repr__(self) -> str:
        return f"Spectrum{self}"


@dataclass(frozen=True)
class InvariantSet:
    """Scalar invariants of a 4-spectrum in the unit 5-sphere."""

    h: ExactScalar  # mean curvature
    a2: ExactScalar  # |A|^2
    r_m: ExactScalar  # scalar curvature
    f3: ExactScalar
    f4: ExactScalar
    k: ExactScalar  # Gauss-Kronecker curvature, sigma_4

    def as_dict(self) -> dict:
        return {
            "H": str(self.h),
            "A2": str(self.a2),
            "R_M": str(self.r_m),
            "f3": str(self.f3),
            "f4": str(self.f4),
            "K": str(self.k),
        }


def power_sum(s: Spectrum, k: int) -> ExactScalar:
    """f_k = sum of lambda_i**k."""
    if k < 1:
        raise PreconditionError("power_sum needs k >= 1")
    raw = s.raw_values()
    if raw is not None:
        return ExactScalar.from_rational(sum(v**k for v in raw))
    acc = s[0] ** k
    for v in s.values[1:]:
        acc = acc + v**k
    return acc


def elementary_symmetric(s: Spectrum, k: int) -> ExactScalar:
    """sigma_k, via the coefficient recurrence of prod_i (1 + lambda_i t)."""
    if not 1 <= k <= s.n:
        raise PreconditionError("elementary_symmetric needs 1 <= k <= n")
    raw = s.raw_values()
    if raw is not None:
        coeffs: List[Rat] = [rational(1)] + [rational(0)] * k
        for v in raw:
            for j in range(k, 0, -1):
                coeffs[j] = coeffs[j] + v * coeffs[j - 1]
        return ExactScalar.from_rational(coeffs[k])
    coeffs_e: List[ExactScalar] = [scalar(1)] + [scalar(0)] * k
    for v in s.values:
        for j in range(k, 0, -1):
            coeffs_e[j] = coeffs_e[j] + v * coeffs_e[j - 1]
    return coeffs_e[k]


def newton_relations_check(s: Spectrum) -> Tuple[ExactScalar, ...]:
    """Residuals of the four power-sum/elementary-symmetric identities (n=4).

    All four vanish for every spectrum; nonzero residuals indicate a bug.
    """
    if s.n != 4:
        raise PreconditionError("newton_relations_check is specific to n = 4")
    f = [power_sum(s, k) for k in (1, 2, 3, 4)]
    e = [elementary_symmetric(s, k) for k in (1, 2, 3, 4)]
    s1, s2, s3, s4 = e
    return (
        f[0] - s1,
        f[1] - (s1**2 - 2 * s2),
        f[2] - (s1**3 - 3 * s1 * s2 + 3 * s3),
        f[3] - (s1**4 - 4 * s1**2 * s2 + 4 * s1 * s3 + 2 * s2**2 - 4 * s4),
    )


def invariants(s: Spectrum) -> InvariantSet:
    """All scalar invariants of a 4-spectrum, with internal checks.

    Minimality is not required, but the closed forms R_M = 12 - |A|^2 and
    f4 = |A|^4/2 - 4K are asserted exactly whenever H = 0.
    """
    if s.n != 4:
        raise PreconditionError("invariants() is specific to n = 4")
    s1 = elementary_symmetric(s, 1)
    a2 = power_sum(s, 2)
    f3 = power_sum(s, 3)
    f4 = power_sum(s, 4)
    k = elementary_symmetric(s, 4)
    h = s1 / 4
    # Gauss-equation trace: sum_{i != j} (1 + lambda_i lambda_j)
    r_m = scalar(12) + s1 * s1 - a2
    if a2.sign() < 0:
        raise IdentityCheckError("|A|^2 must be nonnegative", [a2])
    if h.sign() == 0:
        res_rm = r_m - (scalar(12) - a2)
        res_f4 = f4 - (a2 * a2 / 2 - 4 * k)
        if res_rm.sign() != 0 or res_f4.sign() != 0:
            raise IdentityCheckError(
                "minimal-spectrum invariants violated", [res_rm, res_f4]
            )
        # K = 0 iff f4 = |A|^4 / 2, both directions
        if (k.sign() == 0) != ((f4 - a2 * a2 / 2).sign() == 0):
            raise IdentityCheckError("K = 0 <=> f4 = |A|^4/2 failed", [k])
    return InvariantSet(h=h, a2=a2, r_m=r_m, f3=f3, f4=f4, k=k)


def minimal_spectrum_stream(rng: Lcg64, bound: int = 10) -> Iterator[Spectrum]:
    """Endless stream of rational 4-spectra with sigma_1 = 0 exactly.

    Three entries are drawn with denominator <= 1000 and the fourth is the
    negated sum, rejection-sampled back into [-bound, bound] so all entries
    respect the bound and keep small denominators.
    """
    if bound <= 0:
        raise PreconditionError("bound must be positive")
    while True:
        while True:
            # common denominator keeps every entry's reduced denominator <= 1000
            den = rng.randint(1, 1000)
            nums = [rng.randint(-bound * den, bound * den) for _ in range(3)]
            last = -sum(nums)
            if abs(last) <= bound * den:
                nums.append(last)
                break
        yield Spectrum(ExactScalar.from_rational(p, den) for p in nums)


def k0_spectrum_stream(rng: Lcg64, bound: int = 10) -> Iterator[Spectrum]:
    """Minimal rational 4-spectra with Gauss-Kronecker curvature zero.

    One principal curvature is pinned to zero and the remaining three are a
    zero-sum triple, which exhausts the K = 0 minimal shapes up to ordering.
    """
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
        yield Spectrum(
            [
                scalar(0),
                ExactScalar.from_rational(pa, den),
                ExactScalar.from_rational(pb, den),
                ExactScalar.from_rational(pc, den),
            ]
        )


def random_minimal_spectrum(seed: int, bound: int = 10) -> Spectrum:
    """Deterministic pseudo-random minimal rational 4-spectrum."""
    return next(minimal_spectrum_stream(Lcg64(seed), bound))
