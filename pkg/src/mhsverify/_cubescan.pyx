# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled cubic circle-scan kernel (see _cubescan_py for the fallback)."""

from libc.math cimport cos, sin, sqrt, M_PI, INFINITY


def scan_cubic_extremes(double s2, long resolution):
    """Extremes of a^3 + b^3 + c^3 on {a+b+c = 0, a^2+b^2+c^2 = s2}.

    Samples `resolution` uniformly spaced angles of the constraint circle
    using the fixed orthonormal plane basis u = (1,-1,0)/sqrt2,
    v = (1,1,-2)/sqrt6.  Returns (min, max, argmin_theta, argmax_theta).
    """
    cdef double inv_sqrt2 = 1.0 / sqrt(2.0)
    cdef double inv_sqrt6 = 1.0 / sqrt(6.0)
    cdef double r = sqrt(s2)
    cdef double two_pi = 2.0 * M_PI
    cdef double best = -INFINITY
    cdef double worst = INFINITY
    cdef double arg_best = 0.0
    cdef double arg_worst = 0.0
    cdef double theta, cu, sv, a, b, c, g
    cdef long t
    for t in range(resolution):
        theta = two_pi * t / resolution
        cu = r * cos(theta) * inv_sqrt2
        sv = r * sin(theta) * inv_sqrt6
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
