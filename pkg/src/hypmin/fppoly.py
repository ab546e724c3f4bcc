"""Polynomial analysis over prime fields F_p.

Polynomials are tuples of ints in [0, p), same layout as zpoly.  Root
finding never enumerates F_p: high-multiplicity roots come from the
squarefree decomposition (with p-th root descent when the derivative
vanishes) followed by gcd with x^p - x and randomized equal-degree
splitting of the linear part.
"""

from __future__ import annotations

import random

from .errors import HypminError
from .zpoly import trim

ZERO = ()


def reduce_mod(f, p):
    """Coefficientwise reduction of an integer polynomial into [0, p)."""
    return trim(tuple(c % p for c in f))


def degree(f):
    return len(f) - 1


def _add(f, g, p):
    n = max(len(f), len(g))
    return trim(tuple(((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % p for i in range(n)))


def _sub(f, g, p):
    n = max(len(f), len(g))
    return trim(tuple(((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % p for i in range(n)))


def _mul(f, g, p):
    if not f or not g:
        return ZERO
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return trim(tuple(out))


def _monic(f, p):
    if not f:
        return f
    inv = pow(f[-1], -1, p)
    return tuple(c * inv % p for c in f)


def _divmod(f, g, p):
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    inv = pow(g[-1], -1, p)
    dg = degree(g)
    r = list(f)
    if degree(f) < dg:
        return ZERO, trim(tuple(r))
    q = [0] * (len(f) - dg)
    for k in range(len(f) - len(g), -1, -1):
        c = r[dg + k] * inv % p
        if c:
            q[k] = c
            for j in range(len(g)):
                r[j + k] = (r[j + k] - c * g[j]) % p
    return trim(tuple(q)), trim(tuple(r[:dg]))


def _gcd(f, g, p):
    while g:
        f, g = g, _divmod(f, g, p)[1]
    return _monic(f, p)


def _powmod_x(e, modulus, p):
    """x**e mod modulus over F_p by repeated squaring."""
    result = (1,)
    base = _divmod((0, 1), modulus, p)[1] if degree(modulus) <= 1 else (0, 1)
    while e:
        if e & 1:
            result = _divmod(_mul(result, base, p), modulus, p)[1]
        base = _divmod(_mul(base, base, p), modulus, p)[1]
        e >>= 1
    return result


def derivative(f, p):
    """Formal derivative mod p."""
    return trim(tuple(i * f[i] % p for i in range(1, len(f))))


_derivative = derivative


def _pth_root(f, p):
    """Inverse Frobenius: f(x) = g(x^p) -> g, using a^p = a in F_p."""
    return trim(tuple(f[i] for i in range(0, len(f), p)))


def squarefree_decomposition(f, p):
    """Return {multiplicity: squarefree factor} with f = u * prod g_i^i."""
    out = {}
    f = _monic(f, p)
    _sqf_into(f, p, 1, out)
    return out


def _sqf_into(f, p, mult, out):
    if degree(f) < 1:
        return
    fp = _derivative(f, p)
    if not fp:
        _sqf_into(_pth_root(f, p), p, mult * p, out)
        return
    c = _gcd(f, fp, p)
    w = _divmod(f, c, p)[0]
    i = 1
    while degree(w) > 0:
        y = _gcd(w, c, p)
        fac = _divmod(w, y, p)[0]
        if degree(fac) > 0:
            key = i * mult
            out[key] = _mul(out[key], fac, p) if key in out else fac
        w = y
        c = _divmod(c, y, p)[0]
        i += 1
    if degree(c) > 0:
        _sqf_into(_pth_root(c, p), p, mult * p, out)


def _linear_roots(f, p, rng):
    """Roots of a squarefree monic product of linear factors."""
    roots = []
    stack = [f]
    while stack:
        g = stack.pop()
        d = degree(g)
        if d <= 0:
            continue
        if d == 1:
            roots.append(-g[0] % p)
            continue
        if p == 2:
            for c in (0, 1):
                acc = 0
                for co in reversed(g):
                    acc = (acc * c + co) % 2
                if acc == 0:
                    roots.append(c)
            continue
        while True:
            a = rng.randrange(p)
            # ((x+a)^((p-1)/2) - 1, g) splits the roots
            h = _powmod_shifted(a, (p - 1) // 2, g, p)
            h = _sub(h, (1,), p)
            d1 = _gcd(h, g, p)
            if 0 < degree(d1) < degree(g):
                stack.append(d1)
                stack.append(_divmod(g, d1, p)[0])
                break
    return sorted(roots)


def _powmod_shifted(a, e, modulus, p):
    """(x + a)**e mod modulus over F_p."""
    result = (1,)
    base = _divmod((a % p, 1), modulus, p)[1]
    while e:
        if e & 1:
            result = _divmod(_mul(result, base, p), modulus, p)[1]
        base = _divmod(_mul(base, base, p), modulus, p)[1]
        e >>= 1
    return result


def root_multiplicity(f, c, p):
    """ord_c of f, by repeated synthetic deflation."""
    if not f:
        raise HypminError("zero polynomial")
    m = 0
    g = list(f)
    while True:
        acc = 0
        for co in reversed(g):
            acc = (acc * c + co) % p
        if acc != 0:
            return m
        # deflate by (x - c)
        out = [0] * (len(g) - 1)
        carry = 0
        for i in range(len(g) - 1, 0, -1):
            carry = (carry * c + g[i]) % p
            out[i - 1] = carry
        g = out
        m += 1
        if not g:
            return m


def roots_with_mult_at_least(f, m, p, rng=None):
    """All c in F_p with (x - c)**m | f, ascending.

    m may exceed deg f, in which case the list is empty.
    """
    if not f:
        raise HypminError("zero polynomial")
    if m < 1:
        raise ValueError("multiplicity threshold must be >= 1")
    if m > degree(f):
        return []
    rng = rng or random.Random(0x517EC)
    target = (1,)
    for i, g in squarefree_decomposition(f, p).items():
        if i >= m:
            target = _mul(target, g, p)
    if degree(target) < 1:
        return []
    lin = _gcd(target, _sub(_powmod_x(p, target, p), _divmod((0, 1), target, p)[1], p), p)
    if degree(lin) < 1:
        return []
    return _linear_roots(lin, p, rng)


def is_in_k_x2(f, p=2):
    """True iff every odd-index coefficient vanishes (p = 2 callers only)."""
    if p != 2:
        raise HypminError("even-prime-only test")
    return all(f[i] == 0 for i in range(1, len(f), 2))


def sqrt_poly_f2(f):
    """h with h*h = f over F_2, for f in F_2[x^2]."""
    if not is_in_k_x2(f):
        raise HypminError("polynomial is not in F_2[x^2]")
    return trim(tuple(f[i] for i in range(0, len(f), 2)))


def as_odd_power_of_linear(f, n, p):
    """c with f = (x - c)**n exactly, or None.

    Uses the degree-(n-1) coefficient when p does not divide n, p-th root
    descent otherwise, and always verifies by re-expansion.
    """
    if n < 1 or degree(f) != n or not f or f[-1] % p != 1:
        return None
    g, k = f, n
    while k % p == 0:
        g2 = _pth_root(g, p)
        if _frobenius(g2, p) != g:
            return None
        g, k = g2, k // p
    if degree(g) != k:
        return None
    c = (-g[-2] % p) * pow(k % p, -1, p) % p if k >= 1 else 0
    # verify on the original polynomial
    if _linear_power(c, n, p) == f:
        return c
    return None


def _frobenius(g, p):
    """g(x)**p computed as g(x^p) (coefficients are fixed by Frobenius)."""
    out = [0] * (p * degree(g) + 1) if g else []
    for i, a in enumerate(g):
        out[p * i] = a
    return trim(tuple(out))


def _linear_power(c, n, p):
    base = ((-c) % p, 1)
    out = (1,)
    e = n
    sq = base
    while e:
        if e & 1:
            out = _mul(out, sq, p)
        sq = _mul(sq, sq, p)
        e >>= 1
    return out
