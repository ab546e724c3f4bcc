"""Pointed minimization under x = u^2 x1 + c."""

import random

from hypmin import curve as cv
from hypmin import zpoly as zp
from hypmin.arith import val_p
from hypmin.errors import HypminError
from hypmin.pointed import (
    assemble_pointed,
    minimize_pointed,
    minimize_pointed_even,
    minimize_pointed_odd,
)


def _blow_up(eq, u):
    """x -> x/u^2, y -> y/u^(2g+1): the inverse of an affine shrink."""
    g = eq.g
    q = tuple(eq.q[i] * u ** (2 * g + 1 - 2 * i) for i in range(len(eq.q)))
    p = tuple(eq.p[i] * u ** (2 * (2 * g + 1) - 2 * i) for i in range(len(eq.p)))
    return cv.validate_pointed(g, q, p)


def test_minimize_pointed_odd_examples():
    f, l1 = minimize_pointed_odd(zp.poly([4 * 5 ** 6, 0, 0, 4]), 1, [5])
    assert f == (4, 0, 0, 4) and l1 == (25, 0)
    f, l1 = minimize_pointed_odd(zp.poly([4 * 5 ** 4, 0, 0, 4]), 1, [5])
    assert f == (4 * 5 ** 4, 0, 0, 4) and l1 == (1, 0)
    # no full-order root mod p: unchanged
    f, l1 = minimize_pointed_odd(zp.poly([4, 4, 0, 4]), 1, [5])
    assert l1 == (1, 0)


def test_minimize_pointed_even_scaled():
    # x^3 + 2^6 is x^3 + 1 blown up by u = 2; the even pass recovers it
    eq = cv.validate_pointed(1, (), zp.poly([2 ** 6, 0, 0, 1]))
    before = val_p(cv.discriminant(eq), 2)
    res = minimize_pointed(eq)
    assert before - val_p(res.delta_min.value(), 2) == 12
    assert res.change.u == 2


def test_minimize_pointed_even_stops():
    # unit Q stops immediately
    eq = cv.validate_pointed(1, zp.poly([1]), zp.poly([2, 0, 0, 1]))
    q, p, l0 = minimize_pointed_even(eq)
    assert (q, p) == (eq.q, eq.p) and l0 == (1, 0)


def test_minimize_pointed_genus1():
    eq = cv.validate_pointed(1, (), zp.poly([5 ** 6, 0, 0, 1]))
    res = minimize_pointed(eq)
    assert res.eq_min.p == (1, 0, 0, 1) and res.eq_min.q == ()
    assert res.change.u == 5 and res.change.c == 0
    assert val_p(cv.discriminant(eq), 5) == 12
    assert val_p(res.delta_min.value(), 5) == 0


def test_minimize_pointed_below_threshold_unchanged():
    eq = cv.validate_pointed(1, (), zp.poly([1, 0, 0, 1]))
    res = minimize_pointed(eq)
    assert res.eq_min.p == (1, 0, 0, 1) and res.change.u == 1


def test_assemble_pointed_carry_over():
    q, p = assemble_pointed(1, (1,), (1, 0, 0, 1), 1, 0)
    assert (q, p) == ((1,), (1, 0, 0, 1))


def test_assemble_modes_agree_on_discriminant():
    rng = random.Random(31)
    for _ in range(20):
        while True:
            q = zp.poly([rng.randrange(-9, 10) for _ in range(2)])
            p = zp.poly([rng.randrange(-9, 10) for _ in range(3)] + [1])
            try:
                base = cv.validate_pointed(1, q, p)
                break
            except HypminError:
                continue
        # a blown-up pair is exactly what the odd driver undoes
        big = _blow_up(base, 5)
        qa, pa = assemble_pointed(1, big.q, big.p, 5, 0, mode="small-t")
        qb, pb = assemble_pointed(1, big.q, big.p, 5, 0, mode="exact-m")
        fa = zp.add(zp.scale(pa, 4), zp.mul(qa, qa))
        fb = zp.add(zp.scale(pb, 4), zp.mul(qb, qb))
        assert fa == fb  # same curve, y-shift apart
        assert fa == zp.add(zp.scale(base.p, 4), zp.mul(base.q, base.q))


def test_roundtrip_multiprime():
    base = cv.validate_pointed(1, zp.poly([1]), zp.poly([1, 1, 0, 1]))
    for u in (2, 3, 6, 10):
        big = _blow_up(base, u)
        res = minimize_pointed(big)
        assert res.change.u == u
        assert res.delta_min.value() * u ** 12 == cv.discriminant(big)
        assert abs(res.delta_min.value()) == abs(cv.discriminant(base))


def test_prime_order_independence():
    # minimizing odd primes in either order gives the same valuations
    f0 = zp.poly([4 * 3 ** 8 * 5 ** 6, 0, 0, 4])
    fa, la = minimize_pointed_odd(f0, 1, [3, 5])
    fb, lb = minimize_pointed_odd(f0, 1, [5, 3])
    from hypmin.zpoly import poly_discriminant

    for pr in (3, 5):
        assert val_p(poly_discriminant(fa), pr) == val_p(poly_discriminant(fb), pr)
