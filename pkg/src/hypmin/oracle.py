"""Independent brute-force verifiers.

Everything here recomputes from first principles: the discriminant comes
from a Bareiss determinant of the Sylvester matrix rather than the
subresultant chain, the local search enumerates moves instead of
following the candidate analysis, and the multiplicity maximization
enumerates every completing-square substitution.  Sharing code paths
with the production routines would make these oracles worthless.
"""

from __future__ import annotations

import random
from collections import deque
from itertools import product

from .arith import val_p
from .curve import MobiusChange, apply_change
from .errors import HypminError, InternalError, OracleTimeoutError
from .zpoly import degree, poly, taylor_shift, trim

_NODE_BUDGET = 200_000


def _bareiss_det(m):
    """Integer determinant by fraction-free Gaussian elimination."""
    n = len(m)
    m = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def sylvester_resultant(f, g):
    """Res(f, g) as the determinant of the Sylvester matrix."""
    df, dg = degree(f), degree(g)
    if df < 0 or dg < 0:
        return 0
    if df == 0 and dg == 0:
        return 1
    n = df + dg
    rows = []
    for i in range(dg):
        row = [0] * n
        for j, c in enumerate(reversed(f)):
            row[i + j] = c
        rows.append(row)
    for i in range(df):
        row = [0] * n
        for j, c in enumerate(reversed(g)):
            row[i + j] = c
        rows.append(row)
    return _bareiss_det(rows)


def sylvester_discriminant(f):
    """disc(f) recomputed independently of the subresultant routine."""
    n = degree(f)
    if n < 1:
        raise HypminError("discriminant needs degree >= 1")
    fp = trim(tuple(i * f[i] for i in range(1, len(f))))
    r = sylvester_resultant(f, fp)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    q, rem = divmod(sign * r, f[-1])
    if rem:
        raise InternalError("oracle discriminant division not exact")
    return q


def _curve_v_delta(g, q, p, prime):
    """v_prime of the curve discriminant of y^2 + Q y = P, via Sylvester."""
    f = _f_of(q, p)
    d = sylvester_discriminant(f)
    if degree(f) == 2 * g + 1:
        d *= f[-1] ** 2
    quo, rem = divmod(d, 1 << (4 * (g + 1)))
    if rem:
        raise InternalError("oracle discriminant power of 2 did not divide")
    return val_p(quo, prime)


def _f_of(q, p):
    out = [4 * c for c in p] + [0] * max(0, 2 * len(q) - 1 - len(p))
    for i, a in enumerate(q):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(tuple(out))


def _shift_scale(f, prime, c, div_pow):
    """prime^(-div_pow) * f(prime*x + c), or None if not integral."""
    g = taylor_shift(f, c)
    out = []
    d = prime ** div_pow
    for i, co in enumerate(g):
        num = co * prime ** i
        quo, rem = divmod(num, d)
        if rem:
            return None
        out.append(quo)
    return trim(tuple(out))


def _rev(f, n):
    out = [0] * (n + 1)
    for i, a in enumerate(f):
        out[n - i] = a
    return trim(tuple(out))


def _mu_f(f, c, prime):
    g = taylor_shift(f, c)
    if not g:
        return 10 ** 9
    return min(val_p(a, prime) + i for i, a in enumerate(g) if a)


def bfs_local_min(eq, prime, depth=3):
    """Least v_prime(discriminant) reachable by <= depth local moves.

    Moves: translation-dilatation at every residue and feasible scale,
    the swap with the chart at infinity, constant rescaling of y, and at
    prime = 2 every completing-square substitution with small H.
    """
    if depth > 4:
        raise ValueError("depth capped at 4")
    if prime > 97:
        raise ValueError("prime capped at 97")
    g = eq.g
    if prime == 2:
        return _bfs_even(eq, depth)
    # odd primes: y-shifts never change F = 4P + Q^2, so search on F
    f0 = _f_of(eq.q, eq.p)
    best = val_p(_disc_of_f(f0, g), prime)
    seen = {f0}
    frontier = deque([(f0, 0)])
    expanded = 0
    while frontier:
        f, d = frontier.popleft()
        if d == depth:
            continue
        expanded += 1
        if expanded > _NODE_BUDGET:
            raise OracleTimeoutError("oracle timeout")
        for child in _odd_children(f, g, prime):
            if child in seen:
                continue
            seen.add(child)
            best = min(best, val_p(_disc_of_f(child, g), prime))
            frontier.append((child, d + 1))
    return best


def _disc_of_f(f, g):
    d = sylvester_discriminant(f)
    if degree(f) == 2 * g + 1:
        d *= f[-1] ** 2
    return d


def _odd_children(f, g, prime):
    out = []
    for base in (f, _rev(f, 2 * g + 2)):
        # constant rescaling z -> prime*z
        if all(co % prime ** 2 == 0 for co in base):
            out.append(trim(tuple(co // prime ** 2 for co in base)))
        for c in range(prime):
            mu = _mu_f(base, c, prime)
            for r in range(1, g + 2):
                if mu < 2 * r:
                    break
                child = _shift_scale(base, prime, c, 2 * r)
                if child is not None:
                    out.append(child)
    return out


def _canon_even(q, p):
    """Unique representative of the y-shift orbit: Q reduced into {0,1}."""
    if all(0 <= c <= 1 for c in q):
        return q, p
    h = tuple(((c & 1) - c) // 2 for c in q)
    return (
        _poly_add(q, tuple(2 * c for c in h)),
        _poly_sub(p, _poly_add(_poly_mul(q, h), _poly_mul(h, h))),
    )


def _bfs_even(eq, depth):
    g = eq.g
    start = _canon_even(eq.q, eq.p)
    best = _curve_v_delta(g, eq.q, eq.p, 2)
    seen = {start}
    frontier = deque([(start, 0)])
    h_range = range(1 << depth)
    expanded = 0
    while frontier:
        (q, p), d = frontier.popleft()
        if d == depth:
            continue
        expanded += 1
        if expanded > _NODE_BUDGET:
            raise OracleTimeoutError("oracle timeout")
        for child in _even_children(q, p, g, h_range):
            child = _canon_even(*child)
            if child in seen:
                continue
            seen.add(child)
            best = min(best, _curve_v_delta(g, child[0], child[1], 2))
            frontier.append((child, d + 1))
    return best


def _even_children(q, p, g, h_range):
    out = []
    charts = [(q, p), (_rev(q, g + 1), _rev(p, 2 * g + 2))]
    for qb, pb in charts:
        fb = _f_of(qb, pb)
        # both move families are gated by H-independent conditions: skip
        # the H enumeration entirely when neither can fire
        q_even = all(c % 2 == 0 for c in qb)
        mu_max = max(_mu_f(fb, 0, 2), _mu_f(fb, 1, 2))
        if not q_even and mu_max < 2:
            continue
        for h in product(h_range, repeat=g + 2):
            hh = trim(h)
            qs = _poly_add(qb, tuple(2 * c for c in hh))
            ps = _poly_sub(pb, _poly_add(_poly_mul(qb, hh), _poly_mul(hh, hh)))
            # rescale y by 2
            if all(c % 2 == 0 for c in qs) and all(c % 4 == 0 for c in ps):
                out.append((tuple(c // 2 for c in qs), tuple(c // 4 for c in ps)))
            # translate-dilate, gated by the H-independent mu filter on F
            for c in range(2):
                mu = _mu_f(fb, c, 2)
                for r in range(1, g + 2):
                    if mu < 2 * r:
                        break
                    q1 = _shift_scale(qs, 2, c, r)
                    if q1 is None:
                        continue
                    p1 = _shift_scale(ps, 2, c, 2 * r)
                    if p1 is None:
                        continue
                    out.append((q1, p1))
    return out


def _poly_add(f, g):
    n = max(len(f), len(g))
    return trim(tuple((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)))


def _poly_sub(f, g):
    n = max(len(f), len(g))
    return trim(tuple((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0) for i in range(n)))


def _poly_mul(f, g):
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] += a * b
    return trim(tuple(out))


def scramble(eq, seed):
    """Pseudo-random integral change of variables with the change recorded."""
    rng = random.Random(seed)
    g = eq.g
    for _ in range(50):
        m = (1, 0, 0, 1)
        for _ in range(rng.randrange(1, 4)):
            kind = rng.randrange(3)
            if kind == 0:
                b = rng.randrange(-3, 4)
                step = (1, b, 0, 1)
            elif kind == 1:
                step = (0, 1, 1, 0)
            else:
                pr = rng.choice((2, 3, 5))
                step = (pr ** rng.randrange(1, 3), 0, 0, 1)
            m = (
                m[0] * step[0] + m[1] * step[2],
                m[0] * step[1] + m[1] * step[3],
                m[2] * step[0] + m[3] * step[2],
                m[2] * step[1] + m[3] * step[3],
            )
        e = rng.choice((1, 1, 1, 2, 3))
        h = poly([rng.randrange(-4, 5) for _ in range(g + 2)])
        change = MobiusChange(m, e, h)
        try:
            eq1 = apply_change(eq, change)
        except (InternalError, HypminError):
            continue
        return eq1, change
    # guaranteed-integral fallback: e = 1, upper-triangular m
    change = MobiusChange((2, 1, 0, 1), 1, poly([1]))
    return apply_change(eq, change), change


def brute_force_lambda_even(q, p, c, g):
    """max over all H (deg <= g+1, coefficients mod 2^(g+3)) of
    min(2 mu_c(Q - 2H), mu_c(P + QH - H^2)) at the prime 2.

    Arithmetic runs mod 2^8 with a capped valuation table; the cap never
    binds because the multiplicity is at most 2g+3 <= 7.
    """
    import numpy as np

    if g > 2:
        raise ValueError("exhaustive maximization supported for g <= 2")
    qs = taylor_shift(q, c)
    ps = taylor_shift(p, c)
    bits = g + 3
    mod_h = 1 << bits
    ncoef = g + 2
    count = mod_h ** ncoef
    idx = np.arange(count, dtype=np.int64)
    h = [(idx >> (bits * k)) & (mod_h - 1) for k in range(ncoef)]
    qa = [int(co) & 255 for co in qs] + [0] * (ncoef - len(qs))
    pa = [int(co) & 255 for co in ps] + [0] * max(0, 2 * g + 3 - len(ps))
    lut = np.full(256, 8, dtype=np.int64)
    for v in range(8):
        lut[np.arange(1 << v, 256, 1 << (v + 1))] = v
    # A = Q - 2H, degree <= g+1
    mu_a = np.full(count, 8, dtype=np.int64)
    for i in range(ncoef):
        coef = (qa[i] - 2 * h[i]) & 255
        mu_a = np.minimum(mu_a, lut[coef] + i)
    # B = P + QH - H^2, degree <= 2g+2
    mu_b = np.full(count, 8, dtype=np.int64)
    for i in range(2 * g + 3):
        coef = np.full(count, pa[i] if i < len(pa) else 0, dtype=np.int64)
        for a in range(max(0, i - ncoef + 1), min(i, ncoef - 1) + 1):
            b = i - a
            if b < ncoef:
                coef = coef + qa[a] * h[b] - h[a] * h[b]
        mu_b = np.minimum(mu_b, lut[coef & 255] + i)
    best = np.minimum(2 * mu_a, mu_b)
    return int(best.max())
