"""Weierstrass equation data model.

Validation, discriminant, the chart at infinity, degree normalization for
oversized Q, and application/verification of changes of variables.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import zpoly
from .errors import DegreeError, InternalError, SingularCurveError
from .zpoly import (
    ZERO,
    add,
    degree,
    exact_div_scalar,
    mobius_substitute,
    mul,
    poly,
    poly_discriminant,
    reverse,
    scale,
    sub,
    trim,
)


@dataclass(frozen=True)
class WeierstrassEquation:
    """y^2 + Q(x) y = P(x), deg Q <= g+1, deg P <= 2g+2, smooth."""

    g: int
    q: tuple
    p: tuple

    def f(self):
        """4P + Q^2."""
        return add(scale(self.p, 4), mul(self.q, self.q))


@dataclass(frozen=True)
class PointedEquation(WeierstrassEquation):
    """Weierstrass equation with deg Q <= g and P monic of degree 2g+1."""


@dataclass(frozen=True)
class MobiusChange:
    """x = (a x1 + b)/(c x1 + d), y = (e y1 + H(x1))/(c x1 + d)^(g+1)."""

    m: tuple  # (a, b, c, d)
    e: int
    h: tuple

    @property
    def det(self):
        a, b, c, d = self.m
        return a * d - b * c


@dataclass(frozen=True)
class AffineChange:
    """x = u^2 x1 + c, y = u^(2g+1) y1 + H(x1)."""

    u: int
    c: int
    h: tuple


def validate(g, q, p):
    """Check degrees and smoothness; return the equation value."""
    q, p = trim(tuple(q)), trim(tuple(p))
    if g < 1:
        raise DegreeError("genus must be >= 1")
    if degree(q) > g + 1 or degree(p) > 2 * g + 2:
        raise DegreeError("degree mismatch: deg Q <= g+1 and deg P <= 2g+2 required")
    f = add(scale(p, 4), mul(q, q))
    if degree(f) not in (2 * g + 1, 2 * g + 2):
        raise DegreeError(f"degree mismatch: deg(4P+Q^2) = {degree(f)} not in {{2g+1, 2g+2}}")
    if poly_discriminant(f) == 0:
        raise SingularCurveError("singular curve: disc(4P+Q^2) = 0")
    return WeierstrassEquation(g, q, p)


def reduce_degree_q(g, q, p):
    """Rewrite (Q, P) with deg Q <= g+1 via y = z + E(x), E the high part of Q/2.

    Returns the pair unchanged when deg Q is already in bounds.
    """
    q, p = trim(tuple(q)), trim(tuple(p))
    if degree(q) <= g + 1:
        return q, p
    high = q[g + 2 :]
    if any(c % 2 for c in high):
        raise DegreeError("not reducible: high coefficients of Q are odd")
    e = trim((0,) * (g + 2) + tuple(c // 2 for c in high))
    q0 = trim(q[: g + 2])
    p0 = sub(add(p, mul(q, e)), mul(e, e))
    return q0, p0


def discriminant(eq):
    """Signed discriminant: 2^(-4(g+1)) * (a^2 if deg F = 2g+1) * disc(F)."""
    f = eq.f()
    d = poly_discriminant(f)
    if degree(f) == 2 * eq.g + 1:
        d *= zpoly.lc(f) ** 2
    q, r = divmod(d, 1 << (4 * (eq.g + 1)))
    if r:
        raise InternalError("discriminant power of 2 did not divide")
    return q


def infinity_chart(eq):
    """(Q_inf, P_inf) = (x^(g+1) Q(1/x), x^(2g+2) P(1/x))."""
    return reverse(eq.q, eq.g + 1), reverse(eq.p, 2 * eq.g + 2)


def transformed_pair(g, q, p, change):
    """Raw coefficient transport of (Q, P) under a MobiusChange."""
    qs = mobius_substitute(q, change.m, g + 1)
    ps = mobius_substitute(p, change.m, 2 * g + 2)
    h = change.h
    q1 = exact_div_scalar(add(qs, scale(h, 2)), change.e)
    p1 = exact_div_scalar(sub(ps, add(mul(qs, h), mul(h, h))), change.e ** 2)
    return q1, p1


def apply_change(eq, change):
    """Transformed equation under x = M x1, y = (e y1 + H(x1))/(c x1 + d)^(g+1).

    Raises InternalError("non-integral result") if the transported
    coefficients are not integers.
    """
    if change.det == 0 or change.e == 0:
        raise ValueError("degenerate change of variables")
    try:
        q1, p1 = transformed_pair(eq.g, eq.q, eq.p, change)
    except InternalError:
        raise InternalError("non-integral result")
    return validate(eq.g, q1, p1)


def recover_h(g, q, q1, m, e):
    """H from the trace identity 2H = e Q1 - (c x+d)^(g+1) Q(M x)."""
    qs = mobius_substitute(q, m, g + 1)
    twice = sub(scale(q1, e), qs)
    h = exact_div_scalar(twice, 2)
    if degree(h) > g + 1:
        raise InternalError("recovered H exceeds degree g+1")
    return h


def validate_pointed(g, q, p):
    """Pointed shape: deg Q <= g, P monic of degree 2g+1, smooth."""
    q, p = trim(tuple(q)), trim(tuple(p))
    if g < 1:
        raise DegreeError("genus must be >= 1")
    if degree(q) > g:
        raise DegreeError("degree mismatch: deg Q <= g required")
    if degree(p) != 2 * g + 1 or p[-1] != 1:
        raise DegreeError("P must be monic of degree 2g+1")
    f = add(scale(p, 4), mul(q, q))
    if poly_discriminant(f) == 0:
        raise SingularCurveError("singular curve: disc(4P+Q^2) = 0")
    return PointedEquation(g, q, p)


def apply_affine_change(eq, change):
    """Transformed pointed equation under x = u^2 x1 + c, y = u^(2g+1) y1 + H."""
    g = eq.g
    u2 = change.u ** 2
    qs = _affine_substitute(eq.q, u2, change.c)
    ps = _affine_substitute(eq.p, u2, change.c)
    h = change.h
    q1 = exact_div_scalar(add(qs, scale(h, 2)), change.u ** (2 * g + 1))
    p1 = exact_div_scalar(
        sub(ps, add(mul(qs, h), mul(h, h))), change.u ** (2 * (2 * g + 1))
    )
    return validate_pointed(g, q1, p1)


def _affine_substitute(f, a, c):
    """f(a x + c)."""
    g = zpoly.taylor_shift(f, c)
    return trim(tuple(co * a ** i for i, co in enumerate(g)))
