"""Golden-section search for one-dimensional unimodal maximization."""

import math

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
_INV_PHI2 = (3.0 - math.sqrt(5.0)) / 2.0


def golden_section_max(f, lo, hi, tol):
    """Locate the maximum of a unimodal function on ``[lo, hi]``.

    Returns the final bracket ``(a, b)`` with ``b - a <= tol``; the
    maximizer lies inside it. Only interior points are evaluated, so
    ``f`` may be undefined at the endpoints themselves.
    """
    if hi <= lo:
        raise ValueError("empty search bracket")
    a, b = lo, hi
    h = b - a
    if h <= tol:
        return a, b
    n = max(2, int(math.ceil(math.log(tol / h) / math.log(_INV_PHI))))
    c = a + _INV_PHI2 * h
    d = a + _INV_PHI * h
    yc = f(c)
    yd = f(d)
    for _ in range(n - 1):
        h *= _INV_PHI
        if yc > yd:
            b, d, yd = d, c, yc
            c = a + _INV_PHI2 * h
            yc = f(c)
        else:
            a, c, yc = c, d, yd
            d = a + _INV_PHI * h
            yd = f(d)
    return (a, d) if yc > yd else (c, b)
