"""Pointed-minimal Weierstrass equations.

Equations y^2 + Q y = P with deg Q <= g and P monic of degree 2g+1,
minimized under the affine changes x = u^2 x1 + c, y = u^(2g+1) y1 + H.
Even and odd passes track the x-change as an integer affine map
L(x) = s*x + b with old_x = L(new_x).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import fppoly, localize, zpoly
from .arith import FactoredInteger, factorize, inv_mod, val_p
from .curve import (
    AffineChange,
    PointedEquation,
    apply_affine_change,
    discriminant,
    validate_pointed,
)
from .errors import FactorizationIncompleteError, InternalError
from .localize import LocalReport, Move
from .zpoly import add, exact_div_scalar, mul, scale, sub, taylor_shift, trim

IDENTITY_MAP = (1, 0)  # (scale, shift)


@dataclass
class PointedResult:
    eq_min: PointedEquation
    change: AffineChange
    delta_min: FactoredInteger
    reports: list = field(default_factory=list)


def _compose(lmap, s, b):
    """lmap followed inside by x -> s*x + b, so old_x stays lmap(new_x)."""
    s0, b0 = lmap
    return (s0 * s, s0 * b + b0)


def _affine_dilate(f, scale_in, shift, div_pow, prime):
    """prime^(-div_pow) * f(scale_in * x + shift), exact."""
    g = taylor_shift(f, shift)
    out = tuple(c * scale_in ** i for i, c in enumerate(g))
    return exact_div_scalar(out, prime ** div_pow)


def _threshold(g):
    return 4 * g * (2 * g + 1)


def minimize_pointed_even(eq, report=None):
    """Even pass at p = 2.  Returns (Q', P', L0) with L0 = (scale, shift)."""
    g = eq.g
    q, p = eq.q, eq.p
    l0 = IDENTITY_MAP
    moves = report.moves if report is not None else None
    delta = discriminant(eq)
    if val_p(delta, 2) < _threshold(g):
        return q, p, l0
    budget = val_p(delta, 2) // _threshold(g) + 2
    for _ in range(budget):
        qbar = fppoly.reduce_mod(q, 2)
        pbar = fppoly.reduce_mod(p, 2)
        if qbar:
            break
        cbar1 = fppoly.as_odd_power_of_linear(pbar, 2 * g + 1, 2)
        if cbar1 is None:
            break
        c1 = cbar1
        lam, q, p = localize.lambda_even(q, p, c1, g, max_h_deg=g)
        if lam > 2 * g + 1:
            raise InternalError("pointed multiplicity exceeds 2g+1")
        if lam < 2 * g + 1:
            break
        q1 = _affine_dilate(q, 2, c1, g, 2)
        p1 = _affine_dilate(p, 2, c1, 2 * g, 2)
        p1_half = exact_div_scalar(p1, 2)
        cbar = fppoly.as_odd_power_of_linear(
            fppoly.reduce_mod(p1_half, 2), 2 * g + 1, 2
        )
        if cbar is None:
            break
        c = cbar
        lam2, q1, p1 = localize.lambda_even(q1, p1, c, g, max_h_deg=g)
        if lam2 > 2 * g + 2:
            raise InternalError("pointed multiplicity exceeds 2g+2")
        if lam2 < 2 * g + 2:
            break
        q = _affine_dilate(q1, 2, c, g + 1, 2)
        p = _affine_dilate(p1, 2, c, 2 * g + 2, 2)
        l0 = _compose(l0, 4, 2 * c + c1)
        if moves is not None:
            moves.append(Move("pointed-dilate", 2, c=2 * c + c1, r=1))
    else:
        raise InternalError("pointed even driver exceeded its iteration budget")
    return q, p, l0


def minimize_pointed_odd(f, g, odd_primes, reports=None):
    """Odd pass on F = 4P + Q^2.  Returns (F', L1) with L1 = (scale, shift)."""
    l1 = IDENTITY_MAP
    for p in odd_primes:
        report = reports.get(p) if reports is not None else None
        moves = report.moves if report is not None else None
        v = val_p(zpoly.poly_discriminant(f), p)
        if v < _threshold(g):
            continue
        budget = v // _threshold(g) + 2
        for _ in range(budget):
            roots = fppoly.roots_with_mult_at_least(fppoly.reduce_mod(f, p), 2 * g + 1, p)
            if not roots:
                break
            c = roots[0]
            a = taylor_shift(f, c)
            # theta = min_i v(a_i)/((2g+1)-i); r = floor(theta/2) commutes
            # with the min, so each term floors independently
            r = min(
                val_p(a[i] if i < len(a) else 0, p) // (2 * (2 * g + 1 - i))
                for i in range(2 * g + 1)
                if i >= len(a) or a[i]
            )
            if r == 0:
                break
            f = _affine_dilate(f, p ** (2 * r), c, 2 * r * (2 * g + 1), p)
            l1 = _compose(l1, p ** (2 * r), c)
            if moves is not None:
                moves.append(Move("pointed-dilate", p, c=c, r=r))
        else:
            raise InternalError("pointed odd driver exceeded its iteration budget")
    return f, l1


def assemble_pointed(g, q0, p0, u1, c1, mode="small-t"):
    """Carry the even-minimal pair through x -> u1^2 x + c1 with u1 odd."""
    if u1 % 2 == 0:
        raise InternalError("odd pass produced an even scale")
    if abs(u1) == 1 and c1 == 0:
        return q0, p0
    qs = trim(tuple(co * (u1 * u1) ** i for i, co in enumerate(taylor_shift(q0, c1))))
    ps = trim(tuple(co * (u1 * u1) ** i for i, co in enumerate(taylor_shift(p0, c1))))
    n = 2 * g + 1
    if mode == "exact-m":
        m = 0 if abs(u1) == 1 else inv_mod(4, u1 ** n)
        q1 = exact_div_scalar(scale(qs, 1 - 4 * m), u1 ** n)
        p1 = exact_div_scalar(add(ps, scale(mul(qs, qs), 2 * m - 4 * m * m)), u1 ** (2 * n))
    elif mode == "small-t":
        t = 1
        q1 = scale(qs, t)
        coeff, rem = divmod(1 - u1 ** (2 * n) * t * t, 4)
        if rem:
            raise InternalError("u1 must be odd")
        p1 = exact_div_scalar(add(ps, scale(mul(qs, qs), coeff)), u1 ** (2 * n))
    else:
        raise ValueError(f"unknown assembly mode {mode!r}")
    return q1, p1


def minimize_pointed(eq, prime_hints=(), mode="small-t"):
    """Full pointed minimization with change recovery and verification."""
    g = eq.g
    delta = discriminant(eq)
    fac = factorize(abs(delta), prime_hints)
    if not fac.complete:
        raise FactorizationIncompleteError(f"cannot factor discriminant: {fac}")
    primes = fac.primes()
    reports = {p: LocalReport(p, 0, fac.exponent(p), fac.exponent(p)) for p in primes}
    q0, p0, l0 = minimize_pointed_even(eq, reports.get(2))
    f = add(scale(p0, 4), mul(q0, q0))
    odd_primes = [p for p in primes if p != 2]
    f1, l1 = minimize_pointed_odd(f, g, odd_primes, reports)
    s1, c1 = l1
    u1 = math.isqrt(s1)
    if u1 * u1 != s1:
        raise InternalError("odd scale is not a perfect square")
    q1, p1 = assemble_pointed(g, q0, p0, u1, c1, mode)
    s_total, c_total = _compose(l0, s1, c1)
    u = math.isqrt(s_total)
    if u * u != s_total:
        raise InternalError("composed scale is not a perfect square")
    # 2 H(x1) = u^(2g+1) Q1(x1) - Q(u^2 x1 + c)
    q_sub = trim(
        tuple(co * s_total ** i for i, co in enumerate(taylor_shift(eq.q, c_total)))
    )
    h = exact_div_scalar(sub(scale(q1, u ** (2 * g + 1)), q_sub), 2)
    change = AffineChange(u, c_total, h)
    eq_min = apply_affine_change(eq, change)
    if (eq_min.q, eq_min.p) != (trim(q1), trim(p1)):
        raise InternalError("affine change does not reproduce the output")
    delta_min = discriminant(eq_min)
    if delta_min * u ** (4 * g * (2 * g + 1)) != delta:
        raise InternalError("pointed discriminant law violated")
    sign = 1 if delta_min > 0 else -1
    fac_min = FactoredInteger(
        sign,
        tuple((p, v) for p in primes if (v := val_p(abs(delta_min), p)) > 0),
        1,
    )
    if fac_min.value() != delta_min:
        raise InternalError("minimal discriminant factorization inconsistent")
    for p in primes:
        reports[p].v_delta_after = val_p(abs(delta_min), p)
    return PointedResult(eq_min, change, fac_min, [reports[p] for p in primes])
