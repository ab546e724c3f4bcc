"""Dense univariate polynomials over Z.

A polynomial is a tuple of ints, index i holding the coefficient of x**i,
with trailing zeros trimmed; the zero polynomial is the empty tuple and
has degree -1.  Degrees in this package never exceed 2g+2, so the dense
representation and the O(n^2) classical algorithms are the right tool.
"""

from __future__ import annotations

import math

from .arith import INF, val_p
from .errors import DegreeError, InternalError

ZERO = ()


def poly(coeffs):
    """Build a polynomial from an ascending coefficient iterable."""
    return trim(tuple(int(c) for c in coeffs))


def trim(f):
    f = tuple(f)
    n = len(f)
    while n and f[n - 1] == 0:
        n -= 1
    return f[:n]


def degree(f):
    return len(f) - 1


def lc(f):
    if not f:
        raise ValueError("zero polynomial has no leading coefficient")
    return f[-1]


def coeff(f, i):
    return f[i] if 0 <= i < len(f) else 0


def add(f, g):
    n = max(len(f), len(g))
    return trim(tuple(coeff(f, i) + coeff(g, i) for i in range(n)))


def sub(f, g):
    n = max(len(f), len(g))
    return trim(tuple(coeff(f, i) - coeff(g, i) for i in range(n)))


def neg(f):
    return tuple(-c for c in f)


def mul(f, g):
    if not f or not g:
        return ZERO
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim(tuple(out))


def scale(f, a):
    if a == 0:
        return ZERO
    return tuple(c * a for c in f)


def evaluate(f, x):
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def exact_div_scalar(f, a):
    """Divide every coefficient by a; raises if any division is inexact."""
    out = []
    for c in f:
        q, r = divmod(c, a)
        if r:
            raise InternalError(f"non-integral division of {c} by {a}")
        out.append(q)
    return trim(tuple(out))


def content(f):
    """gcd of the coefficients (0 for the zero polynomial)."""
    return math.gcd(*f) if f else 0


def gauss_val(f, p):
    """min coefficient valuation; +inf for the zero polynomial."""
    if not f:
        return INF
    return min(val_p(c, p) for c in f if c)


def taylor_shift(f, c):
    """f(x + c), by repeated synthetic division."""
    if c == 0 or not f:
        return f
    a = list(f)
    n = len(a)
    for k in range(n - 1):
        for i in range(n - 2, k - 1, -1):
            a[i] += c * a[i + 1]
    return trim(tuple(a))


def mu_c(f, c, p):
    """min_i (v_p(a_i) + i) for the expansion f = sum a_i (x-c)^i."""
    g = taylor_shift(f, c)
    if not g:
        return INF
    return min(val_p(a, p) + i for i, a in enumerate(g) if a)


def reverse(f, n):
    """x**n * f(1/x): coefficient i moves to slot n - i."""
    if n < degree(f):
        raise DegreeError("reversal degree too small")
    if not f:
        return ZERO
    out = [0] * (n + 1)
    for i, a in enumerate(f):
        out[n - i] = a
    return trim(tuple(out))


def mobius_substitute(f, m, n):
    """(c*x + d)**n * f((a*x + b)/(c*x + d)) for m = (a, b, c, d).

    Requires n >= deg f and det m != 0; the result is an exact integer
    polynomial of degree <= n.
    """
    a, b, c, d = m
    if a * d - b * c == 0:
        raise ValueError("singular Mobius matrix")
    if n < degree(f):
        raise DegreeError("substitution degree too small")
    num = (b, a)  # a*x + b
    den = (d, c)  # c*x + d
    # sum_i f_i (ax+b)^i (cx+d)^(n-i), built with running powers
    den_pows = [(1,)]
    for _ in range(n):
        den_pows.append(mul(den_pows[-1], den))
    out = ZERO
    num_pow = (1,)
    for i in range(len(f)):
        if f[i]:
            out = add(out, scale(mul(num_pow, den_pows[n - i]), f[i]))
        num_pow = mul(num_pow, num)
    return out


def derivative(f):
    return trim(tuple(i * f[i] for i in range(1, len(f))))


def _prem(f, g):
    """Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g, over Z."""
    df, dg = degree(f), degree(g)
    b = lc(g)
    r = list(f)
    for k in range(df - dg, -1, -1):
        top = r[dg + k]
        r = [b * c for c in r]
        if top:
            for j in range(dg + 1):
                r[j + k] -= top * g[j]
        r[dg + k] = 0
    return trim(tuple(r[:dg]))


def resultant(f, g):
    """Res(f, g) over Z via the subresultant PRS (Cohen, Alg. 3.3.7)."""
    if not f or not g:
        return 0
    if degree(f) == 0 and degree(g) == 0:
        return 1
    s = 1
    if degree(f) < degree(g):
        if degree(f) % 2 == 1 and degree(g) % 2 == 1:
            s = -1
        f, g = g, f
    if degree(g) == 0:
        return s * lc(g) ** degree(f)
    ca, cb = content(f), content(g)
    A = exact_div_scalar(f, ca)
    B = exact_div_scalar(g, cb)
    t = s * ca ** degree(g) * cb ** degree(f)
    gg = hh = 1
    while True:
        da, db = degree(A), degree(B)
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            t = -t
        R = _prem(A, B)
        A = B
        B = exact_div_scalar(R, gg * hh ** delta) if R else ZERO
        if not B:
            return 0
        gg = lc(A)
        if delta:
            hh = gg ** delta // hh ** (delta - 1)
        if degree(B) == 0:
            break
    da = degree(A)
    h = B[0] ** da // hh ** (da - 1) if da >= 1 else 1
    return t * h


def poly_discriminant(f):
    """disc(f) = (-1)^(n(n-1)/2) * Res(f, f') / lc(f), exact over Z."""
    n = degree(f)
    if n < 1:
        raise DegreeError("discriminant needs degree >= 1")
    r = resultant(f, derivative(f))
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    q, rem = divmod(sign * r, lc(f))
    if rem:
        raise InternalError("discriminant division by lc not exact")
    return q
