"""Global minimization drivers.

Even-prime pass, odd-prime pass on F = 4P + Q^2, assembly of the local
results into one globally minimal equation, and full change-of-variables
bookkeeping with an end-to-end verification.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import localize, zpoly
from .arith import FactoredInteger, factorize, inv_mod, val_p
from .curve import MobiusChange, WeierstrassEquation, apply_change, discriminant, recover_h, validate
from .errors import FactorizationIncompleteError, InternalError
from .localize import INFINITY, LocalReport, Move
from .zpoly import (
    add,
    degree,
    exact_div_scalar,
    gauss_val,
    mobius_substitute,
    mul,
    reverse,
    scale,
    sub,
    trim,
)

IDENTITY = (1, 0, 0, 1)


@dataclass
class MinimizationResult:
    eq_min: WeierstrassEquation
    change: MobiusChange
    delta_min: FactoredInteger
    reports: list = field(default_factory=list)


def _mat_mul(m1, m2):
    a, b, c, d = m1
    e, f, g, h = m2
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def _early_exit(v, g):
    bound = 2 * (2 * g + 1) if g % 2 == 0 else 4 * (2 * g + 1)
    return v < bound


def minimize_even(eq, report=None):
    """Algorithm: minimize at the prime 2.  Returns (Q0, P0, M0, e0)."""
    g = eq.g
    q, p = eq.q, eq.p
    m0, e0 = IDENTITY, 1
    delta = discriminant(eq)
    if val_p(delta, 2) == 0:
        return q, p, m0, e0
    moves = report.moves if report is not None else None
    q, p, e0, eps = localize.normalize_even(g, q, p, e0, moves)
    delta = discriminant(WeierstrassEquation(g, q, p))
    if report is not None:
        report.epsilon = eps
    if _early_exit(val_p(delta, 2), g):
        return q, p, m0, e0
    # the pole of x, examined once
    if localize.c_ok_infinity(q, p, g):
        qi, pi = reverse(q, g + 1), reverse(p, 2 * g + 2)
        lam, qi, pi = localize.lambda_even(qi, pi, 0, g)
        if not localize.lambda_ok(lam, eps, g):
            r = lam // 2
            q, p = localize.dilate(qi, pi, 0, lam, 2)
            e0 <<= r
            m0 = _mat_mul(m0, (0, 1, 2, 0))
            if moves is not None:
                moves.append(Move("infinity-swap", 2, r=r))
    # finite candidates, re-collected after every move
    budget = max(val_p(delta, 2), 1) + 8
    for _ in range(budget * 4):
        eps, cands = localize.find_c_even(q, p, g)
        moved = False
        for c in cands:
            lam, q, p = localize.lambda_even(q, p, c, g)
            if localize.lambda_ok(lam, eps, g):
                continue
            r = lam // 2
            q, p = localize.dilate(q, p, c, lam, 2)
            e0 <<= r
            m0 = _mat_mul(m0, (2, c, 0, 1))
            if moves is not None:
                moves.append(Move("translate-dilate", 2, c=c, r=r))
            moved = True
            break
        if not moved:
            break
    else:
        raise InternalError("even driver exceeded its iteration budget")
    # the paper's step order examines infinity before the finite loop; a
    # finite dilation is not expected to re-create a big pole, so verify
    lam_inf = localize._lambda_at_infinity_even(q, p, g)
    if not localize.lambda_ok(lam_inf, localize.find_c_even(q, p, g)[0], g):
        raise InternalError("pole of x regained a large multiplicity")
    return q, p, m0, e0


def _v_delta_of_f(f, g, p):
    """v_p of the discriminant attached to z^2 = F."""
    v = val_p(zpoly.poly_discriminant(f), p)
    if degree(f) == 2 * g + 1:
        v += 2 * val_p(zpoly.lc(f), p)
    return v


def minimize_odd(f, g, odd_primes, reports=None):
    """Algorithm: minimize z^2 = F at every odd prime.

    Returns (F', M1, e1); e1 and det M1 stay odd.
    """
    m1, e1 = IDENTITY, 1
    f, s = localize.normalize_odd(f)
    e1 *= s
    for p in odd_primes:
        report = reports.get(p) if reports is not None else None
        moves = report.moves if report is not None else None
        if report is not None and s > 1 and val_p(s, p):
            moves.append(Move("scale", p, r=val_p(s, p)))
        v = _v_delta_of_f(f, g, p)
        if _early_exit(v, g):
            if report is not None:
                report.epsilon = int(gauss_val(f, p)) % 2
            continue
        eps = int(gauss_val(f, p))
        if degree(_reduced_bar_degree_poly(f, p, eps)) < g + 1 + eps:
            lam = localize.lambda_odd(reverse(f, 2 * g + 2), 0, p)
            if not localize.lambda_ok(lam, eps, g):
                r = lam // 2
                f = localize.dilate_poly(reverse(f, 2 * g + 2), 0, 2 * r, p)
                e1 *= p ** r
                m1 = _mat_mul(m1, (0, 1, p, 0))
                if moves is not None:
                    moves.append(Move("infinity-swap", p, r=r))
        budget = max(v, 1) + 8
        for _ in range(budget * 4):
            eps, cands = localize.find_c_odd(f, p, g)
            if report is not None:
                report.epsilon = eps
            moved = False
            for c in cands:
                lam = localize.lambda_odd(f, c, p)
                if localize.lambda_ok(lam, eps, g):
                    continue
                r = lam // 2
                f = localize.dilate_poly(f, c, 2 * r, p)
                e1 *= p ** r
                m1 = _mat_mul(m1, (p, c, 0, 1))
                if moves is not None:
                    moves.append(Move("translate-dilate", p, c=c, r=r))
                moved = True
                break
            if not moved:
                break
        else:
            raise InternalError("odd driver exceeded its iteration budget")
        # the pole must stay small once the finite loop settles
        eps_now = int(gauss_val(f, p))
        if degree(_reduced_bar_degree_poly(f, p, eps_now)) < g + 1 + eps_now:
            lam_inf = localize.lambda_odd(reverse(f, 2 * g + 2), 0, p)
            if not localize.lambda_ok(lam_inf, eps_now, g):
                raise InternalError("pole of x regained a large multiplicity")
    return f, m1, e1


def _reduced_bar_degree_poly(f, p, eps):
    from . import fppoly

    return fppoly.reduce_mod(exact_div_scalar(f, p ** eps), p)


def assemble(g, q0, p0, m1, e1, mode="small-t"):
    """Merge the even-minimal pair with the odd-minimal change (M1, e1).

    exact-m mode follows the assembly lemma with 4m = 1 mod e1; small-t
    replaces the Q1 scalar by t = 1 to keep coefficients small.
    """
    if abs(e1) == 1 and m1 == IDENTITY:
        return q0, p0
    a1, b1, c1, d1 = m1
    qs = mobius_substitute(q0, m1, g + 1)
    ps = mobius_substitute(p0, m1, 2 * g + 2)
    if mode == "exact-m":
        m = 0 if abs(e1) == 1 else inv_mod(4, abs(e1))
        q1 = exact_div_scalar(scale(qs, 1 - 4 * m), e1)
        p1 = exact_div_scalar(add(ps, scale(mul(qs, qs), 2 * m - 4 * m * m)), e1 ** 2)
    elif mode == "small-t":
        t = 1
        q1 = scale(qs, t)
        coeff, rem = divmod(1 - e1 * e1 * t * t, 4)
        if rem:
            raise InternalError("e1 must be odd")
        p1 = exact_div_scalar(add(ps, scale(mul(qs, qs), coeff)), e1 ** 2)
    else:
        raise ValueError(f"unknown assembly mode {mode!r}")
    return q1, p1


def minimize(eq, prime_hints=(), mode="small-t"):
    """Full minimization: factored discriminant, both passes, assembly,
    change recovery and end-to-end verification."""
    g = eq.g
    delta = discriminant(eq)
    fac = factorize(abs(delta), prime_hints)
    if not fac.complete:
        raise FactorizationIncompleteError(f"cannot factor discriminant: {fac}")
    primes = fac.primes()
    reports = {p: LocalReport(p, 0, fac.exponent(p), fac.exponent(p)) for p in primes}
    q0, p0, m0, e0 = minimize_even(eq, reports.get(2))
    f = add(scale(p0, 4), mul(q0, q0))
    odd_primes = [p for p in primes if p != 2]
    f1, m1, e1 = minimize_odd(f, g, odd_primes, reports)
    if e1 % 2 == 0 or (m1[0] * m1[3] - m1[1] * m1[2]) % 2 == 0:
        raise InternalError("odd pass produced an even e1 or determinant")
    q1, p1 = assemble(g, q0, p0, m1, e1, mode)
    m = _mat_mul(m0, m1)
    e = e0 * e1
    h = recover_h(g, eq.q, q1, m, e)
    change = MobiusChange(m, e, h)
    eq_min = apply_change(eq, change)
    if (eq_min.q, eq_min.p) != (trim(q1), trim(p1)):
        raise InternalError("change of variables does not reproduce the output")
    delta_min = discriminant(eq_min)
    expected, rem = divmod(change.det ** (2 * (g + 1) * (2 * g + 1)) * delta, e ** (4 * (2 * g + 1)))
    if rem or expected != delta_min:
        raise InternalError("discriminant transformation law violated")
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
    return MinimizationResult(eq_min, change, fac_min, [reports[p] for p in primes])
