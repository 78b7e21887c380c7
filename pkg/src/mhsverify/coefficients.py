"""Registry of every closed-form coefficient used by the verifier.

Each named constant feeds exactly one closed-form identity.  The verifier
re-derives every identity from componentwise computations, so perturbing
any single entry (fault injection) must flip the corresponding check to a
nonzero residual.  A verifier that cannot fail is untrustworthy; the
mutation suite in the tests exercises precisely this table.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Mapping, Tuple

from .exact import ExactScalar, scalar

__all__ = ["Coefficients", "DEFAULT_COEFFICIENTS", "COEFFICIENT_NAMES"]

_DEFAULTS: Dict[str, Fraction] = {
    # scalar curvature: R_M = 12 - |A|^2 (minimal, n = 4)
    "scalar_curvature.const": Fraction(12),
    "scalar_curvature.a2": Fraction(-1),
    # |Ric|^2 = 36 - 6|A|^2 + f4
    "ricci_norm.const": Fraction(36),
    "ricci_norm.a2": Fraction(-6),
    "ricci_norm.f4": Fraction(1),
    # |W|^2 = (7/3)|A|^4 - 4 f4
    "weyl_norm.a4": Fraction(7, 3),
    "weyl_norm.f4": Fraction(-4),
    # trace-free Ricci: |Ric - (R_M/4) Id|^2 = f4 - |A|^4/4
    "ring.a4": Fraction(-1, 4),
    # specialized four-dimensional Gauss-Bonnet-Chern integrand
    "gbc.a4": Fraction(3, 2),
    "gbc.f4": Fraction(-3),
    "gbc.a2": Fraction(-2),
    "gbc.const": Fraction(12),
    # general four-dimensional integrand R_M^2/3 - |Ric|^2 + |W|^2/2
    "gbc4d.rm2": Fraction(1, 3),
    "gbc4d.ric2": Fraction(-1),
    "gbc4d.w2": Fraction(1, 2),
    # K = 0  <=>  f4 = (1/2)|A|^4
    "kzero.f4_half": Fraction(1, 2),
    # Simons with constant scalar curvature: |grad A|^2 = |A|^2 (|A|^2 - 4)
    "simons.gap": Fraction(4),
    # Peng-Terng: 0 = 3(4 - |A|^2) f3 + 6C and 0 = 4(4 - |A|^2) f4 + 4(2A + B)
    "pengterng.f3_gap": Fraction(4),
    "pengterng.f4_gap": Fraction(4),
    # structure predicates
    "lcf.f4_ratio": Fraction(12, 7),
    "einstein.f4_ratio": Fraction(4),
    # cited lower bound for constant-|A|^2, constant-f4 hypersurfaces
    "cheng_yang.bound": Fraction(20, 3),
}

COEFFICIENT_NAMES: Tuple[str, ...] = tuple(sorted(_DEFAULTS))


class Coefficients:
    """Immutable name -> exact rational coefficient table."""

    __slots__ = ("_table",)

    def __init__(self, table: Mapping[str, Fraction]) -> None:
        unknown = set(table) - set(_DEFAULTS)
        if unknown:
            raise KeyError(f"unknown coefficient name(s): {sorted(unknown)}")
        merged = dict(_DEFAULTS)
        merged.update(table)
        self._table = merged

    def fraction(self, name: str) -> Fraction:
        return self._table[name]

    def exact(self, name: str) -> ExactScalar:
        return ExactScalar.from_rational(self._table[name])

    def overrides(self) -> Dict[str, str]:
        """Entries that differ from the defaults, stringified."""
        return {
            name: str(value)
            for name, value in sorted(self._table.items())
            if value != _DEFAULTS[name]
        }

    def with_overrides(self, overrides: Mapping[str, object]) -> "Coefficients":
        table = dict(self._table)
        for name, value in overrides.items():
            if name not in _DEFAULTS:
                raise KeyError(f"unknown coefficient name: {name!r}")
            exact = scalar(value) if not isinstance(value, ExactScalar) else value
            table[name] = Fraction(int(exact.rational_value.numerator), int(exact.rational_value.denominator))
        return Coefficients(table)


DEFAULT_COEFFICIENTS = Coefficients({})
