"""
Sparse homogeneous polynomials in Cartesian coordinates.

Terms are stored as {exponent tuple: coefficient}; zero coefficients are never
stored. Every term has the same total degree, which is kept on the object so
that the zero polynomial still knows its degree.
"""

from itertools import combinations_with_replacement
from math import comb, factorial
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from scipy.special import gammaln

from core.utils.exceptions import InvalidProblem, MixedParity

Exponent = Tuple[int, ...]


class HomogPoly:
    """
    Homogeneous polynomial in nvars variables.

    Example:
        terms = {(2, 0, 0, 0): 1.0, (0, 2, 0, 0): -1.0}

    is x1^2 - x2^2 of degree 2 in four variables.
    """

    __slots__ = ("nvars", "degree", "terms")

    def __init__(self, nvars: int, degree: int, terms: Optional[Dict[Exponent, float]] = None):
        self.nvars = nvars
        self.degree = degree
        self.terms: Dict[Exponent, float] = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise ValueError(f"Exponent {exp} does not have {nvars} entries")
            if sum(exp) != degree:
                raise ValueError(f"Exponent {exp} is not of degree {degree}")
            if coeff != 0.0:
                self.terms[exp] = float(coeff)

    @classmethod
    def constant(cls, nvars: int, value: float = 1.0) -> "HomogPoly":
        return cls(nvars, 0, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "HomogPoly":
        exp = [0] * nvars
        exp[index] = 1
        return cls(nvars, 1, {tuple(exp): 1.0})

    @classmethod
    def radius_squared(cls, nvars: int, indices: Optional[Sequence[int]] = None) -> "HomogPoly":
        """Sum of x_i^2 over `indices` (all variables by default)."""
        indices = range(nvars) if indices is None else indices
        terms = {}
        for i in indices:
            exp = [0] * nvars
            exp[i] = 2
            terms[tuple(exp)] = 1.0
        return cls(nvars, 2, terms)

    def __repr__(self) -> str:
        return f"HomogPoly(nvars={self.nvars}, degree={self.degree}, terms={len(self.terms)})"

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _check_compatible(self, other: "HomogPoly"):
        if other.nvars != self.nvars:
            raise ValueError(f"Variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "HomogPoly") -> "HomogPoly":
        self._check_compatible(other)
        if other.is_zero():
            return self.copy()
        if self.is_zero():
            return other.copy()
        if other.degree != self.degree:
            raise ValueError(f"Cannot add degree {self.degree} and degree {other.degree}")
        terms = dict(self.terms)
        for exp, coeff in other.terms.items():
            value = terms.get(exp, 0.0) + coeff
            if value == 0.0:
                terms.pop(exp, None)
            else:
                terms[exp] = value
        return HomogPoly(self.nvars, self.degree, terms)

    def __neg__(self) -> "HomogPoly":
        return self.scale(-1.0)

    def __sub__(self, other: "HomogPoly") -> "HomogPoly":
        return self + (-other)

    def __mul__(self, other) -> "HomogPoly":
        if not isinstance(other, HomogPoly):
            return self.scale(float(other))
        self._check_compatible(other)
        terms: Dict[Exponent, float] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                terms[exp] = terms.get(exp, 0.0) + c1 * c2
        return HomogPoly(self.nvars, self.degree + other.degree, terms)

    def __rmul__(self, other) -> "HomogPoly":
        return self.scale(float(other))

    def __pow__(self, power: int) -> "HomogPoly":
        if not isinstance(power, int) or power < 0:
            raise ValueError(f"Power must be a nonnegative integer, got {power}")
        result = HomogPoly.constant(self.nvars)
        base = self
        while power:
            if power & 1:
                result = result * base
            power >>= 1
            if power:
                base = base * base
        return result

    def scale(self, factor: float) -> "HomogPoly":
        return HomogPoly(self.nvars, self.degree, {e: c * factor for e, c in self.terms.items()})

    def copy(self) -> "HomogPoly":
        return HomogPoly(self.nvars, self.degree, self.terms)

    def norm(self) -> float:
        """Euclidean norm of the coefficient vector."""
        return float(np.sqrt(sum(c * c for c in self.terms.values())))

    def prune(self, rel_tol: float = 1e-14) -> "HomogPoly":
        """Drop coefficients below rel_tol times the largest one."""
        if not self.terms:
            return self.copy()
        cutoff = rel_tol * max(abs(c) for c in self.terms.values())
        return HomogPoly(self.nvars, self.degree, {e: c for e, c in self.terms.items() if abs(c) > cutoff})

    def leading(self) -> Tuple[Exponent, float]:
        """Lexicographically largest stored term."""
        if not self.terms:
            raise InvalidProblem("The zero polynomial has no leading term")
        exp = max(self.terms)
        return exp, self.terms[exp]

    def normalized(self) -> "HomogPoly":
        """Scaled so that the leading stored coefficient is 1."""
        _, coeff = self.leading()
        return self.scale(1.0 / coeff)

    def evaluate(self, x: Sequence[float]) -> float:
        x = np.asarray(x, dtype=float)
        return float(sum(c * np.prod(x ** np.asarray(e)) for e, c in self.terms.items()))

    def derivative(self, index: int) -> "HomogPoly":
        terms: Dict[Exponent, float] = {}
        for exp, coeff in self.terms.items():
            if exp[index] == 0:
                continue
            new = list(exp)
            new[index] -= 1
            terms[tuple(new)] = coeff * exp[index]
        return HomogPoly(self.nvars, self.degree - 1, terms)

    def permute(self, perm: Sequence[int]) -> "HomogPoly":
        """Relabel variables: x_i of the result is x_{perm[i]} of self."""
        if sorted(perm) != list(range(self.nvars)):
            raise InvalidProblem(f"{tuple(perm)} is not a permutation of {self.nvars} variables")
        return HomogPoly(self.nvars, self.degree, {tuple(e[p] for p in perm): c for e, c in self.terms.items()})


def laplacian(p: HomogPoly) -> HomogPoly:
    """Sum of second derivatives, term by term; the zero polynomial for D < 2."""
    terms: Dict[Exponent, float] = {}
    for exp, coeff in p.terms.items():
        for i, e in enumerate(exp):
            if e < 2:
                continue
            new = list(exp)
            new[i] -= 2
            key = tuple(new)
            terms[key] = terms.get(key, 0.0) + coeff * e * (e - 1)
    return HomogPoly(p.nvars, max(p.degree - 2, 0), terms)


def classify_symmetry(p: HomogPoly) -> Tuple[int, ...]:
    """
    Parity of p under x_i -> -x_i for every axis.

    Raises:
        InvalidProblem: If p is zero
        MixedParity: If some axis has terms of both parities
    """
    if p.is_zero():
        raise InvalidProblem("Symmetry of the zero polynomial is undefined")
    bits = []
    for i in range(p.nvars):
        parities = {exp[i] % 2 for exp in p.terms}
        if len(parities) > 1:
            raise MixedParity(f"Polynomial has both parities about x{i + 1}")
        bits.append(parities.pop())
    return tuple(bits)


def monomial_basis(nvars: int, degree: int) -> List[Exponent]:
    """All exponents of total degree D, in descending lexicographic order."""
    basis = []
    for combo in combinations_with_replacement(range(nvars), degree):
        exp = [0] * nvars
        for i in combo:
            exp[i] += 1
        basis.append(tuple(exp))
    basis.sort(reverse=True)
    return basis


def coefficient_vector(p: HomogPoly, basis: Sequence[Exponent]) -> np.ndarray:
    index = {exp: k for k, exp in enumerate(basis)}
    vec = np.zeros(len(basis))
    for exp, coeff in p.terms.items():
        vec[index[exp]] = coeff
    return vec


def from_coefficients(nvars: int, degree: int, basis: Sequence[Exponent], vec: Iterable[float]) -> HomogPoly:
    return HomogPoly(nvars, degree, {exp: float(c) for exp, c in zip(basis, vec)})


def sphere_moment(exp: Sequence[int]) -> float:
    """
    Integral of x^exp over the unit sphere S^{n-1} in R^n.

    Zero unless every exponent is even, otherwise
    2 prod_i Gamma((a_i+1)/2) / Gamma((|a|+n)/2).
    """
    exp = np.asarray(exp)
    if np.any(exp % 2):
        return 0.0
    b = (exp + 1) / 2.0
    return float(2.0 * np.exp(np.sum(gammaln(b)) - gammaln(np.sum(b))))


def sphere_gram(basis: Sequence[Exponent]) -> np.ndarray:
    """Gram matrix of the monomials in `basis` for the L2 product on the sphere."""
    n = len(basis)
    gram = np.zeros((n, n))
    for i in range(n):
        for j in range(i, n):
            value = sphere_moment(tuple(a + b for a, b in zip(basis[i], basis[j])))
            gram[i, j] = gram[j, i] = value
    return gram


def sphere_inner(p: HomogPoly, q: HomogPoly) -> float:
    """L2 inner product on the unit sphere."""
    p._check_compatible(q)
    total = 0.0
    for e1, c1 in p.terms.items():
        for e2, c2 in q.terms.items():
            total += c1 * c2 * sphere_moment(tuple(a + b for a, b in zip(e1, e2)))
    return total


def homogenize(coef: Sequence[float], nvars: int, index: int, radius_sq: HomogPoly) -> HomogPoly:
    """
    R^n P(x_index / R) for a polynomial P of degree n with parity n.

    Args:
        coef: Ascending power-basis coefficients of P
        nvars: Number of Cartesian variables
        index: Variable playing the role of x_index
        radius_sq: The quadratic form R^2

    Returns:
        sum_k c_k x_index^k (R^2)^((n-k)/2) over k with n-k even
    """
    coef = np.asarray(coef, dtype=float)
    n = len(coef) - 1
    x = HomogPoly.variable(nvars, index)
    result = HomogPoly(nvars, n)
    for k in range(n % 2, n + 1, 2):
        if coef[k] == 0.0:
            continue
        result = result + (x**k) * (radius_sq ** ((n - k) // 2)) * coef[k]
    return result


def phase_part(nvars: int, ia: int, ib: int, m: int) -> HomogPoly:
    """Re (x_a + i x_b)^|m| for m >= 0, Im (x_a + i x_b)^|m| for m < 0."""
    k = abs(m)
    start = 0 if m >= 0 else 1
    terms = {}
    for j in range(start, k + 1, 2):
        exp = [0] * nvars
        exp[ia] = k - j
        exp[ib] = j
        sign = (-1) ** ((j - start) // 2)
        terms[tuple(exp)] = sign * comb(k, j)
    return HomogPoly(nvars, k, terms)


def monomial(nvars: int, exp: Sequence[int]) -> HomogPoly:
    return HomogPoly(nvars, int(sum(exp)), {tuple(exp): 1.0})


def to_text(p: HomogPoly) -> str:
    """One "coeff  i j k l" line per term, sorted by exponent."""
    lines = []
    for exp in sorted(p.terms):
        lines.append(f"{p.terms[exp]:.17g}  " + " ".join(str(e) for e in exp))
    return "\n".join(lines) + ("\n" if lines else "")


def fischer_weight(exp: Sequence[int]) -> float:
    """prod_i a_i!, the weight of x^a in the Fischer inner product."""
    return float(np.prod([factorial(int(e)) for e in exp]))


def fischer_inner(p: HomogPoly, q: HomogPoly) -> float:
    """
    sum_a a! p_a q_a. x_i and d/dx_i are adjoint for this product, and on
    harmonic polynomials of one degree it is proportional to the L2 product
    on the sphere.
    """
    p._check_compatible(q)
    return float(sum(c * q.terms[e] * fischer_weight(e) for e, c in p.terms.items() if e in q.terms))
