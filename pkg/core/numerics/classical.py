"""
Classical orthogonal polynomials by forward recurrence.

The same recurrences serve two purposes: numeric evaluation (x is a float or
ndarray) and power-basis coefficients (x is numpy's Polynomial([0, 1])), the
latter feeding the Cartesian eigenfunction reconstruction.
"""

from math import factorial
from typing import Literal, Optional

import numpy as np
from numpy.polynomial import Legendre, Polynomial

ClassicalKind = Literal["gegenbauer", "assoc_legendre", "jacobi", "chebyshev2"]


def _gegenbauer(n: int, x, u: float):
    prev, curr = 1.0 + 0.0 * x, 2.0 * u * x
    if n == 0:
        return prev
    for k in range(1, n):
        prev, curr = curr, (2.0 * (k + u) * x * curr - (k + 2.0 * u - 1.0) * prev) / (k + 1)
    return curr


def _chebyshev2(n: int, x):
    prev, curr = 1.0 + 0.0 * x, 2.0 * x
    if n == 0:
        return prev
    for _ in range(1, n):
        prev, curr = curr, 2.0 * x * curr - prev
    return curr


def _jacobi(n: int, x, alpha: float, beta: float):
    prev = 1.0 + 0.0 * x
    if n == 0:
        return prev
    curr = (alpha + 1.0) + 0.5 * (alpha + beta + 2.0) * (x - 1.0)
    ab = alpha + beta
    for k in range(2, n + 1):
        c = 2.0 * k + ab
        a1 = 2.0 * k * (k + ab) * (c - 2.0)
        a2 = (c - 1.0) * (c * (c - 2.0) * x + alpha**2 - beta**2)
        a3 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * c
        prev, curr = curr, (a2 * curr - a3 * prev) / a1
    return curr


def _assoc_legendre(ell: int, m: int, x):
    """P_ell^m with the Condon–Shortley phase, m >= 0."""
    x = np.asarray(x, dtype=float)
    double_factorial = np.prod(np.arange(2 * m - 1, 0, -2, dtype=float)) if m > 0 else 1.0
    pmm = (-1.0) ** m * double_factorial * (1.0 - x * x) ** (0.5 * m)
    if ell == m:
        return pmm
    pmm1 = x * (2 * m + 1) * pmm
    for k in range(m + 1, ell):
        pmm, pmm1 = pmm1, ((2 * k + 1) * x * pmm1 - (k + m) * pmm) / (k - m + 1)
    return pmm1


def eval_classical(
    kind: ClassicalKind,
    n: int,
    x,
    u: Optional[float] = None,
    m: Optional[int] = None,
    alpha: Optional[float] = None,
    beta: Optional[float] = None,
):
    """
    Evaluate a classical orthogonal polynomial.

    Args:
        kind: One of "gegenbauer", "assoc_legendre", "jacobi", "chebyshev2"
        n: Degree (for assoc_legendre, the degree ell)
        x: Evaluation point(s)
        u: Gegenbauer parameter, u > 0
        m: Order of the associated Legendre function, |m| <= n
        alpha, beta: Jacobi parameters, both > -1

    Returns:
        Value(s) at x

    Raises:
        ValueError: On invalid degree or parameters
    """
    if n < 0:
        raise ValueError(f"Degree must be nonnegative, got {n}")
    if kind == "gegenbauer":
        if u is None or u <= 0:
            raise ValueError("gegenbauer requires u > 0")
        return _gegenbauer(n, np.asarray(x, dtype=float), u)
    elif kind == "chebyshev2":
        return _chebyshev2(n, np.asarray(x, dtype=float))
    elif kind == "jacobi":
        if alpha is None or beta is None or alpha <= -1 or beta <= -1:
            raise ValueError("jacobi requires alpha, beta > -1")
        return _jacobi(n, np.asarray(x, dtype=float), alpha, beta)
    elif kind == "assoc_legendre":
        if m is None or abs(m) > n:
            raise ValueError("assoc_legendre requires |m| <= degree")
        if np.any(np.abs(np.asarray(x)) > 1.0):
            raise ValueError("assoc_legendre requires |x| <= 1")
        value = _assoc_legendre(n, abs(m), x)
        if m < 0:
            value = (-1.0) ** m * factorial(n + m) / factorial(n - m) * value
        return value
    else:
        raise ValueError(f"Unsupported classical polynomial: {kind}")


def classical_coefficients(
    kind: ClassicalKind,
    n: int,
    u: Optional[float] = None,
    m: Optional[int] = None,
    alpha: Optional[float] = None,
    beta: Optional[float] = None,
) -> np.ndarray:
    """
    Power-basis coefficients (ascending) of a classical polynomial.

    For "assoc_legendre" the polynomial part d^m/dx^m P_n(x) is returned, i.e.
    P_n^m(x) = (-1)^m (1 - x^2)^(m/2) times this polynomial.
    """
    z = Polynomial([0.0, 1.0])
    if kind == "gegenbauer":
        if u is None or u <= 0:
            raise ValueError("gegenbauer requires u > 0")
        poly = _gegenbauer(n, z, u)
    elif kind == "chebyshev2":
        poly = _chebyshev2(n, z)
    elif kind == "jacobi":
        if alpha is None or beta is None:
            raise ValueError("jacobi requires alpha and beta")
        poly = _jacobi(n, z, alpha, beta)
    elif kind == "assoc_legendre":
        order = abs(m or 0)
        if order > n:
            raise ValueError("assoc_legendre requires |m| <= degree")
        poly = Legendre.basis(n).convert(kind=Polynomial).deriv(order)
    else:
        raise ValueError(f"Unsupported classical polynomial: {kind}")
    poly = poly if isinstance(poly, Polynomial) else Polynomial([float(poly)])
    coef = np.zeros(n + 1)
    coef[: len(poly.coef)] = poly.coef[: n + 1]
    return coef
