"""Pure-Python fallback for the cubic circle-scan kernel.

Kept in lockstep with the Cython extension ``_cubescan``; the compiled
variant is preferred at import time when it built successfully.
"""

from __future__ import annotations

import math

_INV_SQRT2 = 1.0 / math.sqrt(2.0)
_INV_SQRT6 = 1.0 / math.sqrt(6.0)


def scan_cubic_extremes(s2: float, resolution: int) -> tuple:
    """Extremes of a^3 + b^3 + c^3 on {a+b+c = 0, a^2+b^2+c^2 = s2}.

    Samples `resolution` uniformly spaced angles of the constraint circle
    using the fixed orthonormal plane basis u = (1,-1,0)/sqrt2,
    v = (1,1,-2)/sqrt6.  Returns (min, max, argmin_theta, argmax_theta).
    """
    r = math.sqrt(s2)
    two_pi = 2.0 * math.pi
    best = -math.inf
    worst = math.inf
    arg_best = 0.0
    arg_worst = 0.0
    for t in range(resolution):
        theta = two_pi * t / resolution
        cu = r * math.cos(theta) * _INV_SQRT2
        sv = r * math.sin(theta) * _INV_SQRT6
        a = cu + sv
        b = -cu + sv
        c = -2.0 * sv
        g = a * a * a + b * b * b + c * c * c
        if g > best:
            best = g
            arg_best = theta
        if g < worst:
            worst = g
            arg_worst = theta
    return worst, best, arg_worst, arg_best
