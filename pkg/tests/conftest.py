from __future__ import annotations

import itertools
import random

import pytest

from satpow import Monomial, MonomialIdeal, RingContext, minimalize


@pytest.fixture
def ring2() -> RingContext:
    return RingContext(("x", "y"))


@pytest.fixture
def ring3() -> RingContext:
    return RingContext(("x", "y", "z"))


def M(*exps: int) -> Monomial:
    return Monomial(exps)


def ideal(ring: RingContext, *gens: tuple[int, ...]) -> MonomialIdeal:
    return minimalize([Monomial(g) for g in gens], ring)


def monomials_up_to(d: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent vectors in d variables of total degree <= degree."""
    out = []
    for exps in itertools.product(range(degree + 1), repeat=d):
        if sum(exps) <= degree:
            out.append(exps)
    return out


def member(gens: list[tuple[int, ...]], w: tuple[int, ...]) -> bool:
    """Test-local divisibility membership, independent of package internals."""
    for g in gens:
        if all(ge <= we for ge, we in zip(g, w)):
            return True
    return False


def random_ideal(
    rng: random.Random, ring: RingContext, max_gens: int = 6, max_exp: int = 4
) -> MonomialIdeal:
    d = ring.var_count
    n_gens = rng.randint(1, max_gens)
    gens = [
        Monomial(tuple(rng.randint(0, max_exp) for _ in range(d)))
        for _ in range(n_gens)
    ]
    return minimalize(gens, ring)
