"""Equation data model, discriminant, changes of variables."""

import random

import pytest

from hypmin import curve as cv
from hypmin import oracle
from hypmin import zpoly as zp
from hypmin.errors import DegreeError, SingularCurveError


def test_validate_shapes():
    eq = cv.validate(1, (), zp.poly([1, 0, 0, 1]))
    assert eq.g == 1 and eq.p == (1, 0, 0, 1)
    with pytest.raises(DegreeError):
        cv.validate(1, zp.poly([0, 0, 0, 1]), zp.poly([1, 0, 0, 1]))
    with pytest.raises(DegreeError):
        cv.validate(0, (), zp.poly([1, 0, 0, 1]))
    with pytest.raises(SingularCurveError):
        cv.validate(1, (), zp.poly([0, 0, 0, 1]))  # y^2 = x^3


def test_discriminant_elliptic():
    assert cv.discriminant(cv.validate(1, (), zp.poly([1, 0, 0, 1]))) == -432


def test_discriminant_paper_minimal_model():
    eq = cv.validate(2, zp.poly([0, 0, 0, 1]), zp.poly([0, 20, 0, 0, 0, 0, 1477440]))
    d = cv.discriminant(eq)
    assert abs(d) == 2 ** 12 * 5 ** 11 * 11 ** 8 * 13 ** 8 * 17 ** 8


def test_discriminant_paper_start_model():
    eq = cv.validate(2, zp.poly([2288]), zp.poly([0, 0, 0, 0, 0, 76765625]))
    d = cv.discriminant(eq)
    assert abs(d) == 2 ** 32 * 5 ** 41 * 11 ** 8 * 13 ** 8 * 17 ** 18


def test_f_and_infinity_chart():
    eq = cv.validate(1, zp.poly([1]), zp.poly([1, 0, 0, 1]))
    assert eq.f() == (5, 0, 0, 4)
    qi, pi = cv.infinity_chart(eq)
    assert qi == zp.reverse(eq.q, 2)
    assert pi == zp.reverse(eq.p, 4)
    # the chart at infinity is a model with the same discriminant
    eqi = cv.validate(1, qi, pi)
    assert cv.discriminant(eqi) == cv.discriminant(eq)


def test_reduce_degree_q():
    # Q = 2x^3 exceeds deg <= g+1 for g = 1; E = x^3 halves it away
    g = 1
    q = zp.poly([0, 0, 0, 2])
    p = zp.poly([1, 0, 0, 0, 1])
    q0, p0 = cv.reduce_degree_q(g, q, p)
    assert zp.degree(q0) <= g + 1
    # same curve: 4P + Q^2 is preserved
    f_before = zp.add(zp.scale(p, 4), zp.mul(q, q))
    f_after = zp.add(zp.scale(p0, 4), zp.mul(q0, q0))
    assert f_before == f_after
    with pytest.raises(DegreeError):
        cv.reduce_degree_q(1, zp.poly([0, 0, 0, 1]), p)


def test_apply_change_known():
    eq = cv.validate(1, (), zp.poly([5 ** 6, 0, 0, 1]))
    change = cv.MobiusChange((25, 0, 0, 1), 125, ())
    eq1 = cv.apply_change(eq, change)
    assert eq1.p == (1, 0, 0, 1) and eq1.q == ()


def test_apply_change_rejects_non_integral():
    eq = cv.validate(1, (), zp.poly([1, 0, 0, 1]))
    change = cv.MobiusChange((1, 0, 0, 1), 5, ())
    with pytest.raises(Exception):
        cv.apply_change(eq, change)


def test_transformation_law_random():
    rng = random.Random(11)
    for seed in range(40):
        g = rng.choice((1, 2))
        while True:
            q = zp.poly([rng.randrange(-9, 10) for _ in range(g + 2)])
            p = zp.poly([rng.randrange(-9, 10) for _ in range(2 * g + 3)])
            try:
                eq = cv.validate(g, q, p)
                break
            except Exception:
                continue
        eq1, change = oracle.scramble(eq, seed)
        d0 = cv.discriminant(eq)
        d1 = cv.discriminant(eq1)
        assert d1 * change.e ** (4 * (2 * g + 1)) == change.det ** (
            2 * (g + 1) * (2 * g + 1)
        ) * d0


def test_recover_h_roundtrip():
    eq = cv.validate(1, zp.poly([1, 1]), zp.poly([3, 1, 0, 1]))
    h = zp.poly([2, -1])
    change = cv.MobiusChange((1, 3, 0, 1), 1, h)
    eq1 = cv.apply_change(eq, change)
    got = cv.recover_h(eq.g, eq.q, eq1.q, change.m, change.e)
    assert got == h


def test_validate_pointed():
    eq = cv.validate_pointed(1, (), zp.poly([1, 0, 0, 1]))
    assert eq.g == 1
    with pytest.raises(DegreeError):
        cv.validate_pointed(1, (), zp.poly([1, 0, 0, 0, 1]))  # degree 4
    with pytest.raises(DegreeError):
        cv.validate_pointed(1, (), zp.poly([1, 0, 0, 2]))  # not monic
    with pytest.raises(DegreeError):
        cv.validate_pointed(2, zp.poly([0, 0, 0, 1]), zp.poly([0, 1, 0, 0, 0, 1]))


def test_apply_affine_change():
    # x^3 + 4096 is x^3 + 1 blown up by u = 4: P_big(x) = u^6 P(x/u^2)
    big = cv.validate_pointed(1, (), zp.poly([4096, 0, 0, 1]))
    small = cv.apply_affine_change(big, cv.AffineChange(4, 0, ()))
    assert small.p == (1, 0, 0, 1)
    d_big = cv.discriminant(big)
    d_small = cv.discriminant(small)
    g = 1
    assert d_small * 4 ** (4 * g * (2 * g + 1)) == d_big
