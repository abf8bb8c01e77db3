"""
Exact integer/rational algebra: characteristic polynomials, root multiplicities
against monic integer minimal polynomials, and exact ranks.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
from sympy import QQ, ZZ, Poly
from sympy.abc import x as _x
from sympy.polys.matrices import DomainMatrix

from .graphs import Graph

logger = logging.getLogger(__name__)

Number = Union[int, Fraction, float]


class ExactAlgebraError(Exception):
    pass


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial, constant term first, no trailing zeros."""

    coeffs: Tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = [int(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "IntPolynomial":
        return cls(tuple(coeffs))

    @classmethod
    def linear(cls, root: int) -> "IntPolynomial":
        """x - root"""
        return cls((-root, 1))

    @classmethod
    def parse(cls, text: str) -> "IntPolynomial":
        """``"-1,1,1"`` -> x^2 + x - 1 (constant term first); a leading -1 is negated."""
        try:
            coeffs = [int(tok) for tok in text.replace(" ", "").split(",") if tok]
        except ValueError as exc:
            raise ExactAlgebraError(f"bad minimal polynomial {text!r}: {exc}") from exc
        poly = cls(tuple(coeffs))
        if poly.degree >= 0 and poly.coeffs[-1] == -1:
            poly = -poly
        return poly

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __call__(self, x: Number) -> Number:
        acc: Number = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (size - len(self.coeffs))
        b = other.coeffs + (0,) * (size - len(other.coeffs))
        return IntPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def divmod_monic(self, divisor: "IntPolynomial") -> Tuple["IntPolynomial", "IntPolynomial"]:
        """Exact long division by a monic divisor (stays in Z[x])."""
        if not divisor.is_monic:
            raise ExactAlgebraError(f"divisor {divisor} is not monic")
        rem = list(self.coeffs)
        d = divisor.degree
        if len(rem) - 1 < d:
            return IntPolynomial(()), self
        quot = [0] * (len(rem) - d)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k]
            if c:
                quot[k - d] = c
                for j, b in enumerate(divisor.coeffs):
                    rem[k - d + j] -= c * b
        return IntPolynomial(tuple(quot)), IntPolynomial(tuple(rem[:d]))

    def float_roots(self) -> np.ndarray:
        if self.degree < 1:
            return np.array([])
        return np.roots([float(c) for c in reversed(self.coeffs)])

    def to_json(self) -> List[str]:
        return [str(c) for c in self.coeffs]

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for d in range(self.degree, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                var = "x" if d == 1 else f"x^{d}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)


X = IntPolynomial((0, 1))


def _check_irreducible(poly: IntPolynomial) -> None:
    if poly.degree == 2:
        _, b, _ = poly.coeffs
        disc = b * b - 4 * poly.coeffs[0]
        if disc >= 0 and isqrt(disc) ** 2 == disc:
            raise ExactAlgebraError(f"{poly} is reducible over the rationals (discriminant {disc})")
    elif poly.degree > 2:
        logger.warning("irreducibility of degree-%d polynomial %s is taken on trust", poly.degree, poly)


@dataclass(frozen=True)
class AlgebraicNumber:
    """A real root of a monic irreducible integer polynomial, pinned by ``approx``."""

    minpoly: IntPolynomial
    approx: float
    isolation_radius: float

    def __post_init__(self) -> None:
        if not self.minpoly.is_monic or self.minpoly.degree < 1:
            raise ExactAlgebraError(f"minimal polynomial {self.minpoly} must be monic of degree >= 1")
        if self.isolation_radius <= 0:
            raise ExactAlgebraError("isolation radius must be positive")
        roots = self.minpoly.float_roots()
        real = [r.real for r in roots if abs(r.imag) <= 1e-9 * max(1.0, abs(r))]
        inside = [r for r in real if abs(r - self.approx) <= self.isolation_radius]
        if len(inside) != 1:
            raise ExactAlgebraError(
                f"{self.approx!r} does not isolate exactly one real root of {self.minpoly} "
                f"within {self.isolation_radius} (found {len(inside)})"
            )

    @classmethod
    def from_minpoly(
        cls, minpoly: IntPolynomial, approx: Optional[float] = None, irreducible: bool = False
    ) -> "AlgebraicNumber":
        """``irreducible=True`` skips the check for factors that came out of a factorization."""
        if not minpoly.is_monic:
            raise ExactAlgebraError(f"minimal polynomial {minpoly} is not monic")
        if not irreducible:
            _check_irreducible(minpoly)
        roots = minpoly.float_roots()
        real = sorted(
            float(r.real) for r in roots if abs(r.imag) <= 1e-9 * max(1.0, abs(r))
        )
        if not real:
            raise ExactAlgebraError(f"{minpoly} has no real root")
        if approx is None:
            approx = real[-1]
        nearest = min(real, key=lambda r: abs(r - approx))
        others = [abs(r - nearest) for r in real if r != nearest]
        radius = min(others) / 2 if others else 1.0
        return cls(minpoly, float(nearest), radius)

    @classmethod
    def integer(cls, value: int) -> "AlgebraicNumber":
        return cls(IntPolynomial.linear(value), float(value), 0.5)

    @property
    def degree(self) -> int:
        return self.minpoly.degree

    @property
    def is_rational(self) -> bool:
        return self.minpoly.degree == 1

    @property
    def rational_value(self) -> Optional[Fraction]:
        if not self.is_rational:
            return None
        return Fraction(-self.minpoly.coeffs[0])

    def negated(self) -> "AlgebraicNumber":
        """-λ, with minimal polynomial (-1)^d f(-x)."""
        d = self.minpoly.degree
        flipped = [c if k % 2 == 0 else -c for k, c in enumerate(self.minpoly.coeffs)]
        if d % 2:
            flipped = [-c for c in flipped]
        return AlgebraicNumber(IntPolynomial(tuple(flipped)), -self.approx, self.isolation_radius)

    def to_json(self) -> dict:
        return {"minpoly": self.minpoly.to_json(), "approx": self.approx}

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.rational_value)
        return f"root of {self.minpoly} near {self.approx:.10g}"


ZERO = AlgebraicNumber.integer(0)
MINUS_ONE = AlgebraicNumber.integer(-1)
ONE = AlgebraicNumber.integer(1)
OMEGA = AlgebraicNumber.from_minpoly(IntPolynomial((-1, 1, 1)), 0.6180339887)
MINUS_OMEGA = AlgebraicNumber.from_minpoly(IntPolynomial((-1, -1, 1)), -0.6180339887)

NAMED = {"omega": OMEGA, "-omega": MINUS_OMEGA}


def parse_eigenvalue(token: str) -> AlgebraicNumber:
    """``0``, ``-1``, ``omega``, ``-omega`` or any integer."""
    key = token.strip().lower()
    if key in NAMED:
        return NAMED[key]
    try:
        return AlgebraicNumber.integer(int(key))
    except ValueError as exc:
        raise ExactAlgebraError(f"bad eigenvalue token {token!r}") from exc


# -------------------------------
# Characteristic polynomial and multiplicities
# -------------------------------


@lru_cache(maxsize=4096)
def _char_poly_of(order: int, packed: bytes) -> IntPolynomial:
    rows = np.frombuffer(packed, dtype=np.int8).reshape(order, order).astype(int).tolist()
    highest_first = DomainMatrix.from_list(rows, ZZ).charpoly()
    return IntPolynomial(tuple(int(c) for c in reversed(highest_first)))


def char_poly(graph: Graph) -> IntPolynomial:
    """phi(x; G), cached on the adjacency matrix (vertex-deleted graphs recur across eigenvalues)."""
    if graph.order == 0:
        return IntPolynomial((1,))
    adj = np.ascontiguousarray(graph.adjacency, dtype=np.int8)
    return _char_poly_of(graph.order, adj.tobytes())


def irreducible_factors(p: IntPolynomial) -> List[Tuple[IntPolynomial, int]]:
    """Monic irreducible factors of a monic integer polynomial, with exponents."""
    if not p.is_monic:
        raise ExactAlgebraError(f"{p} is not monic")
    if p.degree < 1:
        return []
    _, factors = Poly(list(reversed(p.coeffs)), _x, domain=ZZ).factor_list()
    out = []
    for factor, k in factors:
        poly = IntPolynomial(tuple(int(c) for c in reversed(factor.all_coeffs())))
        if poly.coeffs[-1] == -1:
            poly = -poly
        out.append((poly, int(k)))
    return out


def exact_eigenvalue(graph: Graph, value: float, tol: float) -> Optional[AlgebraicNumber]:
    """
    The eigenvalue of ``graph`` nearest ``value`` as a root of an irreducible
    factor of phi(x; G), or None when no real root lies within ``tol``.
    """
    best: Optional[Tuple[float, IntPolynomial, float]] = None
    for factor, _ in irreducible_factors(char_poly(graph)):
        for root in factor.float_roots():
            if abs(root.imag) > 1e-9 * max(1.0, abs(root)):
                continue
            gap = abs(float(root.real) - value)
            if best is None or gap < best[0]:
                best = (gap, factor, float(root.real))
    if best is None or best[0] > tol:
        return None
    _, factor, root = best
    if factor.degree == 1:
        return AlgebraicNumber.integer(-factor.coeffs[0])
    return AlgebraicNumber.from_minpoly(factor, root, irreducible=True)


def root_multiplicity(p: IntPolynomial, lam: AlgebraicNumber) -> int:
    f = lam.minpoly
    if not f.is_monic:
        raise ExactAlgebraError(f"minimal polynomial {f} is not monic")
    if p.is_zero:
        raise ExactAlgebraError("the zero polynomial has unbounded root multiplicity")
    k = 0
    while p.degree >= f.degree:
        quot, rem = p.divmod_monic(f)
        if not rem.is_zero:
            break
        k += 1
        p = quot
    return k


def _to_domain_rows(rows: Sequence[Sequence[Number]]) -> List[List]:
    out = []
    for row in rows:
        converted = []
        for e in row:
            q = Fraction(e)
            converted.append((q.numerator, q.denominator))
        out.append(converted)
    return out


def rational_rank(rows: Sequence[Sequence[Number]]) -> int:
    """Exact rank over Q of a matrix given as rows of ints/Fractions."""
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    return int(DomainMatrix.from_list(_to_domain_rows(rows), QQ).rank())


def integer_rank(matrix: np.ndarray) -> int:
    if matrix.size == 0:
        return 0
    return int(DomainMatrix.from_list(matrix.tolist(), ZZ).rank())


def poly_of_adjacency(graph: Graph, poly: IntPolynomial) -> np.ndarray:
    """p(A) with exact integer entries."""
    n = graph.order
    bound = max(1, n) ** max(poly.degree, 1) * max(1, sum(abs(c) for c in poly.coeffs))
    dtype = np.int64 if bound < 2**62 else object
    adj = graph.adjacency.astype(dtype)
    acc = np.zeros((n, n), dtype=dtype)
    for c in reversed(poly.coeffs):
        acc = acc @ adj
        acc = acc + c * np.eye(n, dtype=dtype)
    return acc


def eigenvalue_multiplicity(graph: Graph, lam: AlgebraicNumber, method: str = "kernel") -> int:
    """
    mult(lam, G).

    ``kernel``: A is diagonalizable and conjugate roots share multiplicity, so
    dim ker f(A) = deg f * mult. ``charpoly``: repeated division of phi(x; G).
    """
    if method == "charpoly":
        return root_multiplicity(char_poly(graph), lam)
    if graph.order == 0:
        return 0
    f = lam.minpoly
    if not f.is_monic:
        raise ExactAlgebraError(f"minimal polynomial {f} is not monic")
    nullity = graph.order - integer_rank(poly_of_adjacency(graph, f))
    if nullity % f.degree:
        raise ExactAlgebraError(f"kernel of {f}(A) has dimension {nullity}; {f} is not irreducible")
    return nullity // f.degree


def _shifted_rows(graph: Graph, value: Fraction) -> List[List[Fraction]]:
    rows = []
    for i, row in enumerate(graph.int_rows()):
        rows.append([Fraction(a) - (value if i == j else 0) for j, a in enumerate(row)])
    return rows


def is_main_exact(graph: Graph, lam: AlgebraicNumber) -> bool:
    """
    Main/non-main for a rational eigenvalue.

    A - lam*I is symmetric, so its range is the orthogonal complement of the
    eigenspace: lam is non-main iff j lies in that range, i.e. iff
    rank([A - lam*I | j]) == rank(A - lam*I). Main iff the augmented rank is
    one larger.
    """
    value = lam.rational_value
    if value is None:
        raise ExactAlgebraError(f"exact mainness needs a rational eigenvalue, got {lam}")
    shifted = _shifted_rows(graph, value)
    base = rational_rank(shifted)
    if base == graph.order:
        raise ExactAlgebraError(f"{value} is not an eigenvalue")
    augmented = rational_rank([row + [Fraction(1)] for row in shifted])
    return augmented == base + 1


def match_minpoly(
    value: float, candidates: Iterable[IntPolynomial], tol: float
) -> Optional[AlgebraicNumber]:
    """First candidate having a real root within ``tol`` of ``value``."""
    for poly in candidates:
        for root in poly.float_roots():
            if abs(root.imag) <= tol and abs(root.real - value) <= tol:
                return AlgebraicNumber.from_minpoly(poly, float(root.real))
    return None


def integer_candidate(value: float, tol: float) -> Optional[IntPolynomial]:
    nearest = round(value)
    if abs(value - nearest) <= tol:
        return IntPolynomial.linear(int(nearest))
    return None
