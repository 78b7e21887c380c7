"""Small exact univariate polynomial helpers.

Polynomials are coefficient lists, constant term first.  Just enough
machinery for multi-point certification: several of the verified claims
are polynomial identities of known small degree, so exact agreement at
degree+1 sample points proves them without a symbolic engine.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

from .exact import ExactScalar, ZERO, ONE, scalar


def poly_eval(coeffs: Sequence[ExactScalar], x: ExactScalar) -> ExactScalar:
    acc = ZERO
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def poly_trim(coeffs: Sequence[ExactScalar]) -> List[ExactScalar]:
    out = list(coeffs)
    while out and out[-1].sign() == 0:
        out.pop()
    return out


def poly_degree(coeffs: Sequence[ExactScalar]) -> int:
    """Degree, with the zero polynomial reported as -1."""
    return len(poly_trim(coeffs)) - 1


def lagrange_interpolate(
    points: Sequence[Tuple[object, object]]
) -> List[ExactScalar]:
    """Exact interpolating polynomial through distinct-abscissa points.

    Returns coefficients (constant first) of the unique polynomial of
    degree < len(points).
    """
    xs = [scalar(x) for x, _ in points]
    ys = [scalar(y) for _, y in points]
    n = len(points)
    if len({str(x) for x in xs}) != n:
        raise ValueError("interpolation abscissae must be distinct")
    coeffs: List[ExactScalar] = [ZERO] * n
    for i in range(n):
        # basis polynomial prod_{j != i} (X - x_j) / (x_i - x_j)
        basis: List[ExactScalar] = [ONE]
        denom = ONE
        for j in range(n):
            if j == i:
                continue
            basis = [ZERO] + basis  # multiply by X
            for k in range(len(basis) - 1):
                basis[k] = basis[k] - xs[j] * basis[k + 1]
            denom = denom * (xs[i] - xs[j])
        w = ys[i] / denom
        for k in range(len(basis)):
            coeffs[k] = coeffs[k] + w * basis[k]
    return coeffs


def strip_zero_roots(coeffs: Sequence[ExactScalar]) -> Tuple[List[ExactScalar], int]:
    """Factor out X**v; returns (reduced coefficients, valuation v)."""
    out = poly_trim(coeffs)
    v = 0
    while out and out[0].sign() == 0:
        out.pop(0)
        v += 1
    return out, v
