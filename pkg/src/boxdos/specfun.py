"""Zeros of Bessel functions and half-integer factorials.

Roots are located by scanning for a sign change (consecutive zeros of
J_l and j_l are separated by roughly pi, and the first zero lies above
l) and then refined by bisection.  This is derivative-free and fully
deterministic.

Note that j_0(r) = sin(r)/r, so the zeros of the order-0 spherical
function are exactly n*pi; some published tables quote other values for
them, which are erroneous.
"""

from __future__ import annotations

import math

from scipy.special import jv, spherical_jn

__all__ = ["bessel_zero", "half_integer_factorial", "ConvergenceError"]


class ConvergenceError(RuntimeError):
    """Root search failed to bracket or refine a zero."""


_KINDS = ("ordinary", "spherical")

# Zeros of J_l (and of j_l = sqrt(pi/2r) J_{l+1/2}) are spaced by more
# than 1 for every order, so a unit scan step cannot skip a pair.
_SCAN_STEP = 1.0


def _evaluate(kind: str, order: int, x: float) -> float:
    if kind == "ordinary":
        return float(jv(order, x))
    return float(spherical_jn(order, x))


def bessel_zero(kind: str, order: int, index: int) -> float:
    """Return the index-th positive root of J_order (ordinary) or j_order (spherical).

    Accurate to 1e-10 relative or better; raises ConvergenceError if the
    scan fails (does not happen for order <= 200, index <= 200).
    """
    if kind not in _KINDS:
        raise ValueError(f"kind must be one of {_KINDS}, got {kind!r}")
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    if index < 1:
        raise ValueError(f"index must be >= 1, got {index}")

    if kind == "spherical" and order == 0:
        # j_0(r) = sin(r)/r vanishes exactly at multiples of pi.
        return index * math.pi

    # All positive zeros lie above the order, so start the scan there.
    a = max(float(order), 0.5)
    fa = _evaluate(kind, order, a)
    found = 0
    # Generous cap: index-th zero sits near order + index*pi.
    max_steps = int((order + (index + 4) * math.pi) / _SCAN_STEP) + 64
    for _ in range(max_steps):
        b = a + _SCAN_STEP
        fb = _evaluate(kind, order, b)
        if fa == 0.0:
            found += 1
            if found == index:
                return a
        elif fa * fb < 0.0:
            found += 1
            if found == index:
                return _bisect(kind, order, a, b, fa)
        a, fa = b, fb
    raise ConvergenceError(
        f"failed to locate zero {index} of {kind} Bessel function of order {order}"
    )


def _bisect(kind: str, order: int, a: float, b: float, fa: float) -> float:
    tol = 1e-12
    while b - a > max(tol, 8 * math.ulp(b)):
        m = 0.5 * (a + b)
        fm = _evaluate(kind, order, m)
        if fm == 0.0:
            return m
        if fa * fm < 0.0:
            b = m
        else:
            a, fa = m, fm
    return 0.5 * (a + b)


def half_integer_factorial(x: float) -> float:
    """Gamma(x + 1) for x in half-integer steps, x >= -1/2.

    Exact for integer x (up to float overflow); built from the product
    x * (x-1) * ... * (1/2) * sqrt(pi) for proper half-integers, so e.g.
    (1/2)! = sqrt(pi)/2.
    """
    doubled = 2.0 * x
    k = round(doubled)
    if abs(doubled - k) > 1e-9:
        raise ValueError(f"{x} is not a half-integer")
    if k < -1:
        raise ValueError(f"argument must be >= -1/2, got {x}")

    if k % 2 == 0:
        try:
            return float(math.factorial(k // 2))
        except OverflowError:
            raise OverflowError(f"factorial of {x} overflows a float") from None

    result = math.sqrt(math.pi)
    t = x
    while t >= 0.5:
        result *= t
        t -= 1.0
    if math.isinf(result):
        raise OverflowError(f"factorial of {x} overflows a float")
    return result
