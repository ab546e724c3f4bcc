"""Integer arithmetic: primality, valuations, factorization."""

import math
import random

import pytest
from hypothesis import given, strategies as st

from hypmin.arith import (
    INF,
    FactoredInteger,
    factorize,
    inv_mod,
    is_prime,
    largest_odd_square_divisor,
    val_p,
)
from hypmin.errors import NotCoprimeError


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
    for n in range(50):
        assert is_prime(n) == (n in primes)


def test_is_prime_known_large():
    assert is_prime(2 ** 61 - 1)
    assert not is_prime(2 ** 67 - 1)  # 193707721 * 761838257287
    assert is_prime(10 ** 18 + 9)


@given(st.integers(min_value=2, max_value=10 ** 6))
def test_is_prime_matches_trial_division(n):
    ref = all(n % d for d in range(2, math.isqrt(n) + 1))
    assert is_prime(n) == ref


def test_val_p():
    assert val_p(0, 5) == INF
    assert val_p(250, 5) == 3
    assert val_p(-32, 2) == 5
    assert val_p(7, 3) == 0


@given(
    st.integers(min_value=1, max_value=10 ** 9),
    st.integers(min_value=1, max_value=10 ** 9),
    st.sampled_from([2, 3, 5, 7, 11]),
)
def test_val_p_multiplicative(a, b, p):
    assert val_p(a * b, p) == val_p(a, p) + val_p(b, p)


def test_inv_mod():
    assert inv_mod(3, 7) == 5
    assert inv_mod(4, 125) == 94
    with pytest.raises(NotCoprimeError):
        inv_mod(6, 9)


@given(st.integers(min_value=2, max_value=10 ** 12))
def test_factorize_reassembles(n):
    fac = factorize(n)
    assert fac.complete
    assert fac.value() == n
    for p, e in fac.factors:
        assert is_prime(p) and e >= 1


def test_factorize_sign_and_hints():
    fac = factorize(2 ** 32 * 5 ** 41 * 11 ** 8 * 13 ** 8 * 17 ** 18, hints=(11, 13, 17))
    assert fac.factors == ((2, 32), (5, 41), (11, 8), (13, 8), (17, 18))
    assert fac.complete


def test_factored_integer_value():
    fac = FactoredInteger(-1, ((2, 4), (3, 3)))
    assert fac.value() == -432
    assert fac.exponent(2) == 4
    assert fac.exponent(7) == 0
    assert str(fac) == "-2^4*3^3"


def test_largest_odd_square_divisor():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randrange(1, 10 ** 8)
        s = largest_odd_square_divisor(n)
        assert s % 2 == 1 and n % (s * s) == 0
        # maximality: no odd prime square divides the cofactor's odd part
        m = n // (s * s)
        for p in (3, 5, 7, 11, 13):
            assert m % (p * p) != 0
