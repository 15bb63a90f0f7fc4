"""Quadrature rules on the reference triangle and the reference interval.

The reference triangle is T = {(x, y) : x >= 0, y >= 0, x + y <= 1} with
area 1/2.  Triangle rules are built from collapsed (Duffy) tensor products
of Gauss-Legendre rules, which gives positive weights and polynomial
exactness for any requested degree without tabulated coefficients.
"""

import numpy as np
from numpy.polynomial.legendre import leggauss

MAX_DEGREE = 60


def interval_rule(degree):
    """Gauss-Legendre rule on [-1, 1] exact for polynomials of `degree`."""
    if degree < 0 or degree > MAX_DEGREE:
        raise ValueError(f"unsupported 1d quadrature degree {degree}")
    n = degree // 2 + 1
    return leggauss(n)


def triangle_rule(degree):
    """Quadrature points and weights on the reference triangle.

    Uses the Duffy transform x = u, y = v (1 - u), which maps the unit
    square onto the triangle with Jacobian (1 - u).  A monomial x^a y^b of
    total degree d becomes u^a (1-u)^(b+1) v^b, of degree at most d + 1 in
    u and d in v, so Gauss rules with ceil((d+2)/2) points per direction
    are exact.

    Returns
    -------
    points : (n, 2) array
    weights : (n,) array, positive, summing to 1/2
    """
    if degree < 0 or degree > MAX_DEGREE:
        raise ValueError(f"unsupported triangle quadrature degree {degree}")
    nu = (degree + 1) // 2 + 1
    nv = degree // 2 + 1
    xu, wu = leggauss(nu)
    xv, wv = leggauss(nv)
    # map [-1, 1] -> [0, 1]
    u = 0.5 * (xu + 1.0)
    v = 0.5 * (xv + 1.0)
    wu = 0.5 * wu
    wv = 0.5 * wv
    U, V = np.meshgrid(u, v, indexing="ij")
    WU, WV = np.meshgrid(wu, wv, indexing="ij")
    x = U
    y = V * (1.0 - U)
    w = WU * WV * (1.0 - U)
    return np.column_stack([x.ravel(), y.ravel()]), w.ravel()


def exact_monomial_integral(a, b):
    """Closed form of the monomial integral x^a y^b over the reference triangle."""
    from math import factorial

    return factorial(a) * factorial(b) / factorial(a + b + 2)
