"""Exact Hilbert-series numerators and multiplicity extraction.

For a monomial ideal I in d variables the Hilbert series of A/I is written
over the full ambient denominator, H(z) = K(z)/(1-z)^d with K an integer
polynomial.  K is computed by pivot splitting: for a variable x lying in at
least two generator supports,

    K(A/I) = K(A/(I + (x))) + z * K(A/(I : x)),

with the complete-intersection product formula as the base case.  Numerators
are memoized by canonical generator list; the memo is a plain dict written
under the GIL with deterministic values, so concurrent recomputation is
harmless (last write wins).
"""
from __future__ import annotations

import sys
from dataclasses import dataclass
from math import comb
from typing import Iterator, Optional

from .core import Exponents, Monomial, MonomialIdeal, _minimal_tuples
from .errors import InconsistencyError


class IntPolynomial:
    """Dense univariate polynomial with exact integer coefficients.

    Trailing zero coefficients are trimmed; the zero polynomial has an empty
    coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: tuple[int, ...] | list[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; the zero polynomial reports -1."""
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(
            [self.coefficient(i) + other.coefficient(i) for i in range(n)]
        )

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(
            [self.coefficient(i) - other.coefficient(i) for i in range(n)]
        )

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by z^k."""
        if self.is_zero():
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def value_at_one(self) -> int:
        return sum(self.coeffs)

    def divide_one_minus_z(self) -> "IntPolynomial":
        """Exact synthetic division by (1 - z); requires a root at z = 1."""
        if self.value_at_one() != 0:
            raise ValueError("polynomial has no root at z = 1")
        quotient: list[int] = []
        partial = 0
        for c in self.coeffs[:-1]:
            partial += c
            quotient.append(partial)
        return IntPolynomial(quotient)


_ZERO = IntPolynomial()
_ONE = IntPolynomial((1,))


@dataclass(frozen=True)
class HilbertData:
    """Numerator, dimension, and multiplicity of a graded quotient module.

    ``module_dim`` is None for the empty module (numerator 0, e0 = 0).
    """

    numerator: IntPolynomial
    ambient_d: int
    module_dim: Optional[int]
    e0: int


# ---------------------------------------------------------------------------
# Numerator recursion
# ---------------------------------------------------------------------------

_NUMERATOR_CACHE: dict[tuple[Exponents, ...], IntPolynomial] = {}


def _pick_pivot(exps: tuple[Exponents, ...], d: int, rule: str) -> int:
    """Variable index to split on, or -1 when supports are pairwise disjoint."""
    counts = [0] * d
    for g in exps:
        for i, e in enumerate(g):
            if e > 0:
                counts[i] += 1
    if rule == "most-shared":
        best = max(range(d), key=lambda i: counts[i])
        return best if counts[best] >= 2 else -1
    if rule == "first-shared":
        for i in range(d):
            if counts[i] >= 2:
                return i
        return -1
    raise ValueError(f"unknown pivot rule: {rule}")


def _numerator(
    exps: tuple[Exponents, ...],
    d: int,
    cache: dict[tuple[Exponents, ...], IntPolynomial],
    rule: str,
) -> IntPolynomial:
    hit = cache.get(exps)
    if hit is not None:
        return hit

    pivot = _pick_pivot(exps, d, rule)
    if pivot < 0:
        # pairwise disjoint supports: complete intersection, K = prod(1 - z^deg)
        result = _ONE
        for g in exps:
            deg = sum(g)
            factor = [0] * (deg + 1)
            factor[0] = 1
            factor[deg] -= 1
            result = result * IntPolynomial(factor)
    else:
        x_vec = tuple(1 if i == pivot else 0 for i in range(d))
        plus_x = tuple(
            sorted(
                [g for g in exps if g[pivot] == 0] + [x_vec],
                key=lambda t: (sum(t), tuple(-e for e in t)),
            )
        )
        colon_x = tuple(
            _minimal_tuples(
                tuple(e - 1 if i == pivot else e for i, e in enumerate(g))
                if g[pivot] > 0
                else g
                for g in exps
            )
        )
        result = _numerator(plus_x, d, cache, rule) + _numerator(
            colon_x, d, cache, rule
        ).shift(1)

    cache[exps] = result
    return result


def numerator_of_quotient(
    ideal: MonomialIdeal,
    *,
    cache: Optional[dict] = None,
    pivot_rule: str = "most-shared",
) -> IntPolynomial:
    """Numerator K with H_{A/I}(z) = K(z)/(1-z)^d over the ambient d.

    ``cache`` defaults to a process-wide memo shared across sweeps; pass a
    fresh dict to isolate a computation (tests use this to compare pivot
    strategies on genuinely independent runs).
    """
    if sys.getrecursionlimit() < 10000:
        sys.setrecursionlimit(10000)
    memo = _NUMERATOR_CACHE if cache is None else cache
    return _numerator(ideal._exps, ideal.ring.var_count, memo, pivot_rule)


def dim_and_mult(numerator: IntPolynomial, ambient_d: int) -> tuple[Optional[int], int]:
    """Factor K = (1-z)^s * h with h(1) != 0; return (ambient_d - s, h(1)).

    The zero numerator denotes the empty module: (None, 0).  A nonpositive
    h(1) cannot arise from a genuine module and raises InconsistencyError.
    """
    if numerator.is_zero():
        return (None, 0)
    h = numerator
    s = 0
    while h.value_at_one() == 0:
        h = h.divide_one_minus_z()
        s += 1
    if s > ambient_d:
        raise InconsistencyError(
            f"numerator vanishes to order {s} at z=1, above the ambient {ambient_d}"
        )
    e0 = h.value_at_one()
    if e0 <= 0:
        raise InconsistencyError(f"nonzero module computed multiplicity {e0} <= 0")
    return (ambient_d - s, e0)


def quotient_module_data(inner: MonomialIdeal, outer: MonomialIdeal) -> HilbertData:
    """Hilbert data of the quotient module outer/inner (inner must sit inside outer)."""
    if inner.ring != outer.ring:
        raise ValueError("inner and outer ideals live in different rings")
    for g in inner.gens:
        if not outer.contains(g):
            raise ValueError(
                f"containment violated: generator {g!r} of the inner ideal "
                "is not in the outer ideal"
            )
    k = numerator_of_quotient(inner) - numerator_of_quotient(outer)
    d = inner.ring.var_count
    module_dim, e0 = dim_and_mult(k, d)
    return HilbertData(numerator=k, ambient_d=d, module_dim=module_dim, e0=e0)


# ---------------------------------------------------------------------------
# Enumeration oracle and series expansion
# ---------------------------------------------------------------------------

def _compositions(total: int, parts: int) -> Iterator[Exponents]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def hilbert_function_oracle(ideal: MonomialIdeal, degree_bound: int) -> list[int]:
    """Count monomials of each degree <= degree_bound outside the ideal.

    Exhaustive enumeration; intended as an independent check on the
    numerator recursion, not for production-size inputs.
    """
    if degree_bound < 0:
        raise ValueError("degree bound must be non-negative")
    d = ideal.ring.var_count
    counts = []
    for t in range(degree_bound + 1):
        n_out = 0
        for exps in _compositions(t, d):
            if not ideal.contains(Monomial(exps)):
                n_out += 1
        counts.append(n_out)
    return counts


def expand_numerator(numerator: IntPolynomial, ambient_d: int, degree_bound: int) -> list[int]:
    """Power-series coefficients of K(z)/(1-z)^d up to degree_bound."""
    out = []
    for t in range(degree_bound + 1):
        total = 0
        for j, c in enumerate(numerator.coeffs):
            if j > t:
                break
            total += c * comb(t - j + ambient_d - 1, ambient_d - 1)
        out.append(total)
    return out
