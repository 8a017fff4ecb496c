"""Exact arithmetic on monomials and monomial ideals.

Monomials are exponent vectors over a fixed ambient polynomial ring; no
coefficient field is ever materialized.  Ideals carry their canonical
minimal generating set (an antichain under divisibility, sorted in a fixed
total order), so ideal equality is generator-list equality.

All values are immutable after construction and safe to share across
threads; no operation mutates its inputs.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import RingMismatchError, ZeroIdealError

Exponents = tuple[int, ...]


@dataclass(frozen=True)
class RingContext:
    """Ambient polynomial ring: a count of variables and their names."""

    var_names: tuple[str, ...]

    def __post_init__(self) -> None:
        names = tuple(self.var_names)
        object.__setattr__(self, "var_names", names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names: {names}")
        for name in names:
            if not name or not name.isidentifier():
                raise ValueError(f"invalid variable name: {name!r}")

    @property
    def var_count(self) -> int:
        return len(self.var_names)


class Monomial:
    """A monomial as a tuple of non-negative exponents, with cached degree."""

    __slots__ = ("exponents", "degree")

    def __init__(self, exponents: Iterable[int]):
        exps = tuple(exponents)
        for e in exps:
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"exponents must be non-negative integers, got {e!r}")
        self.exponents: Exponents = exps
        self.degree: int = sum(exps)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __hash__(self) -> int:
        return hash(self.exponents)

    def __repr__(self) -> str:
        return f"Monomial({list(self.exponents)})"

    @property
    def support(self) -> tuple[int, ...]:
        """Indices of variables with positive exponent."""
        return tuple(i for i, e in enumerate(self.exponents) if e > 0)

    def is_one(self) -> bool:
        return self.degree == 0


def divides(a: Monomial, b: Monomial) -> bool:
    """True iff every exponent of ``a`` is at most the matching one of ``b``."""
    if len(a.exponents) != len(b.exponents):
        raise RingMismatchError(
            f"monomials live in different rings ({len(a.exponents)} vs {len(b.exponents)} variables)"
        )
    return _divides(a.exponents, b.exponents)


# ---------------------------------------------------------------------------
# Internal tuple-level kernels (hot paths avoid Monomial wrappers)
# ---------------------------------------------------------------------------

def _divides(a: Exponents, b: Exponents) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _sort_key(t: Exponents) -> tuple[int, Exponents]:
    # Canonical total order: degree first, then lexicographic with the
    # leading variable largest, so equal-degree blocks read x^2, x*y, y^2.
    return (sum(t), tuple(-e for e in t))


def _minimal_tuples(cands: Iterable[Exponents]) -> list[Exponents]:
    """Antichain of divisibility-minimal elements, canonically sorted."""
    ordered = sorted(set(cands), key=_sort_key)
    kept: list[Exponents] = []
    kept_degs: list[int] = []
    for t in ordered:
        deg = sum(t)
        dominated = False
        for kd, k in zip(kept_degs, kept):
            if kd >= deg:
                # later candidates have degree >= kd; an equal-degree divisor
                # would be equal, and duplicates are already removed
                break
            if _divides(k, t):
                dominated = True
                break
        if not dominated:
            kept.append(t)
            kept_degs.append(deg)
    return kept


# ---------------------------------------------------------------------------
# Ideals
# ---------------------------------------------------------------------------

class MonomialIdeal:
    """A monomial ideal held by its canonical minimal generating set.

    Construct through :func:`minimalize` (or :meth:`from_monomials`); the
    constructor trusts its input to already be canonical.  The zero ideal has
    no generators; the unit ideal has the single all-zero generator.
    """

    __slots__ = ("ring", "gens", "_exps")

    def __init__(self, ring: RingContext, gens: Sequence[Monomial]):
        self.ring = ring
        self.gens: tuple[Monomial, ...] = tuple(gens)
        self._exps: tuple[Exponents, ...] = tuple(g.exponents for g in self.gens)

    @classmethod
    def from_monomials(cls, ring: RingContext, gens: Iterable[Monomial]) -> "MonomialIdeal":
        return minimalize(list(gens), ring)

    @classmethod
    def _from_tuples(cls, ring: RingContext, exps: Iterable[Exponents]) -> "MonomialIdeal":
        return cls(ring, [Monomial(t) for t in exps])

    @classmethod
    def zero(cls, ring: RingContext) -> "MonomialIdeal":
        return cls(ring, [])

    @classmethod
    def unit(cls, ring: RingContext) -> "MonomialIdeal":
        return cls(ring, [Monomial((0,) * ring.var_count)])

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].degree == 0

    def is_proper(self) -> bool:
        return not self.is_unit()

    def is_equigenerated(self) -> bool:
        """True iff all minimal generators share one total degree."""
        return len({g.degree for g in self.gens}) <= 1

    # -- equality and hashing -----------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MonomialIdeal)
            and self.ring == other.ring
            and self._exps == other._exps
        )

    def __hash__(self) -> int:
        return hash((self.ring, self._exps))

    def __repr__(self) -> str:
        return f"MonomialIdeal({self.ring.var_names}, {len(self.gens)} gens)"

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.gens)

    # -- membership ----------------------------------------------------------

    def contains(self, m: Monomial) -> bool:
        """True iff some minimal generator divides ``m``."""
        self._check_member(m)
        me = m.exponents
        for g in self._exps:
            if _divides(g, me):
                return True
        return False

    def __contains__(self, m: Monomial) -> bool:
        return self.contains(m)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        """True iff every generator of ``other`` lies in this ideal."""
        self._check_ring(other)
        return all(self.contains(g) for g in other.gens)

    # -- arithmetic -----------------------------------------------------------

    def multiply(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """Product ideal, minimalized from all pairwise generator products."""
        self._check_ring(other)
        cands = [
            tuple(x + y for x, y in zip(a, b))
            for a in self._exps
            for b in other._exps
        ]
        return MonomialIdeal._from_tuples(self.ring, _minimal_tuples(cands))

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return self.multiply(other)

    def power(self, n: int) -> "MonomialIdeal":
        """``n``-fold product, with I^0 the unit ideal.

        Computed by iterated multiplication, minimalizing after each step to
        keep intermediate generator sets small.
        """
        if n < 0:
            raise ValueError(f"power wants n >= 0, got {n}")
        result = MonomialIdeal.unit(self.ring)
        for _ in range(n):
            result = result.multiply(self)
        return result

    def __pow__(self, n: int) -> "MonomialIdeal":
        return self.power(n)

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """Intersection, minimalized from pairwise lcms of generators."""
        self._check_ring(other)
        cands = [
            tuple(x if x > y else y for x, y in zip(a, b))
            for a in self._exps
            for b in other._exps
        ]
        return MonomialIdeal._from_tuples(self.ring, _minimal_tuples(cands))

    def colon_monomial(self, m: Monomial) -> "MonomialIdeal":
        """(I : m), generated by u / gcd(u, m) over generators u."""
        self._check_member(m)
        me = m.exponents
        cands = [tuple(max(x - y, 0) for x, y in zip(g, me)) for g in self._exps]
        return MonomialIdeal._from_tuples(self.ring, _minimal_tuples(cands))

    def colon_ideal(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """(I : J) as the intersection of (I : m) over generators m of J."""
        self._check_ring(other)
        if other.is_zero():
            raise ZeroIdealError("colon by the zero ideal")
        result = self.colon_monomial(other.gens[0])
        for m in other.gens[1:]:
            result = result.intersect(self.colon_monomial(m))
        return result

    def saturate_monomial(self, m: Monomial) -> "MonomialIdeal":
        """(I : m^inf): zero out generator exponents on the support of ``m``."""
        self._check_member(m)
        supp = set(m.support)
        cands = [
            tuple(0 if i in supp else e for i, e in enumerate(g))
            for g in self._exps
        ]
        return MonomialIdeal._from_tuples(self.ring, _minimal_tuples(cands))

    def saturate_ideal(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """(I : J^inf) as the intersection of (I : m^inf) over generators of J."""
        self._check_ring(other)
        if other.is_zero():
            raise ZeroIdealError("saturation by the zero ideal")
        result = self.saturate_monomial(other.gens[0])
        for m in other.gens[1:]:
            result = result.intersect(self.saturate_monomial(m))
        return result

    # -- guards ---------------------------------------------------------------

    def _check_ring(self, other: "MonomialIdeal") -> None:
        if self.ring != other.ring:
            raise RingMismatchError(
                f"ideals live in different rings: {self.ring.var_names} vs {other.ring.var_names}"
            )

    def _check_member(self, m: Monomial) -> None:
        if len(m.exponents) != self.ring.var_count:
            raise RingMismatchError(
                f"monomial has {len(m.exponents)} exponents, ring has {self.ring.var_count} variables"
            )


def minimalize(gens: Sequence[Monomial], ring: RingContext) -> MonomialIdeal:
    """Canonical minimal generating set of the ideal generated by ``gens``.

    Every input generator is divisible by some output generator, and no
    output generator divides another.  An empty input yields the zero ideal.
    """
    d = ring.var_count
    for g in gens:
        if len(g.exponents) != d:
            raise RingMismatchError(
                f"monomial has {len(g.exponents)} exponents, ring has {d} variables"
            )
    return MonomialIdeal._from_tuples(ring, _minimal_tuples(g.exponents for g in gens))
