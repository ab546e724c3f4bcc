"""Shared fixtures: a reproducible corpus of curves.

The corpus mixes random equations of genus 1 and 2 (small and large
coefficients) with scrambled versions of known-minimal equations, so
minimization has real work to do on a controlled subset.
"""

import random

import pytest

from hypmin import curve as cv
from hypmin import oracle
from hypmin import zpoly as zp
from hypmin.errors import HypminError
from hypmin.minimize import minimize

SEED = 20260823


def random_equation(rng, g, bound):
    while True:
        q = zp.poly([rng.randrange(-bound, bound + 1) for _ in range(g + 2)])
        p = zp.poly([rng.randrange(-bound, bound + 1) for _ in range(2 * g + 3)])
        try:
            return cv.validate(g, q, p)
        except HypminError:
            continue


def random_pointed(rng, g, bound):
    while True:
        q = zp.poly([rng.randrange(-bound, bound + 1) for _ in range(g + 1)])
        p = zp.poly(
            [rng.randrange(-bound, bound + 1) for _ in range(2 * g + 1)] + [1]
        )
        try:
            return cv.validate_pointed(g, q, p)
        except HypminError:
            continue


@pytest.fixture(scope="session")
def corpus():
    """>= 50 curves, g in {1, 2}, all coefficients <= 10**6."""
    rng = random.Random(SEED)
    eqs = []
    for _ in range(14):
        eqs.append(random_equation(rng, 1, 40))
    for _ in range(10):
        eqs.append(random_equation(rng, 2, 40))
    for _ in range(4):
        eqs.append(random_equation(rng, 1, 300))
    for _ in range(2):
        eqs.append(random_equation(rng, 2, 120))
    bases = [
        minimize(random_equation(rng, g, 25)).eq_min for g in (1, 1, 1, 2, 2)
    ]
    seed = 1000
    for b in bases:
        for _ in range(4):
            eq1, _ = oracle.scramble(b, seed)
            seed += 1
            eqs.append(eq1)
    assert len(eqs) >= 50
    return eqs


@pytest.fixture(scope="session")
def pointed_corpus():
    rng = random.Random(SEED + 1)
    out = []
    while len(out) < 24:
        g = rng.choice((1, 1, 2))
        out.append(random_pointed(rng, g, 9))
    return out
