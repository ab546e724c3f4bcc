"""Per-prime machinery for minimality testing.

Normalization at the even prime, the multiplicity lambda at a residue
point, candidate-point search, dilatation, and the minimality and
uniqueness verdicts.  The even prime of Z is 2 throughout; odd-prime
routines work on F = 4P + Q^2 only.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from . import fppoly, zpoly
from .arith import INF, val_p
from .errors import HypminError, InternalError
from .zpoly import (
    add,
    degree,
    exact_div_scalar,
    gauss_val,
    mu_c,
    mul,
    reverse,
    scale,
    sub,
    taylor_shift,
    trim,
)

INFINITY = "inf"  # marker for the pole of x


@dataclass
class Move:
    kind: str  # "scale" | "complete-square" | "translate-dilate" | "infinity-swap"
    prime: int
    c: int | None = None
    r: int = 0


@dataclass
class LocalReport:
    p: int
    epsilon: int
    v_delta_before: int
    v_delta_after: int
    moves: list = field(default_factory=list)


class Status(enum.Enum):
    MINIMAL = "minimal"
    NOT_MINIMAL = "not-minimal"


@dataclass(frozen=True)
class MinimalityVerdict:
    status: Status
    witness: tuple | None = None  # (site, lambda)


def epsilon_of(eq, p):
    """0 if the mod-p fiber is reduced, 1 otherwise (normalized input)."""
    if p == 2:
        e = min(gauss_val(eq.q, 2), gauss_val(eq.p, 2))
    else:
        e = gauss_val(eq.f(), p) % 2
    return int(e)


def normalize_even(g, q, p, e0=1, moves=None, prime=2):
    """Normalize (Q, P) at the even prime; returns (Q, P, e0, epsilon).

    Loops: unit Q -> done; unit P not a mod-2 square -> done; unit P a
    square -> complete the square; v(P) = 1 -> done; otherwise divide
    out y-scalings and repeat.  Terminates because each scaling divides
    the discriminant by 2^(4r(2g+1)).
    """
    while True:
        vq = gauss_val(q, 2)
        if vq == 0:
            break
        vp = gauss_val(p, 2)
        if vp == 0:
            pbar = fppoly.reduce_mod(p, 2)
            if not fppoly.is_in_k_x2(pbar):
                break
            h = fppoly.sqrt_poly_f2(pbar)  # lift has coefficients in {0, 1}
            p = sub(add(p, mul(q, h)), mul(h, h))
            q = sub(q, scale(h, 2))
            if moves is not None:
                moves.append(Move("complete-square", prime))
            continue
        if vp == 1:
            break
        r = int(min(2 * vq, vp)) // 2
        q = exact_div_scalar(q, 1 << r)
        p = exact_div_scalar(p, 1 << (2 * r))
        e0 <<= r
        if moves is not None:
            moves.append(Move("scale", prime, r=r))
    eps = int(min(gauss_val(q, 2), gauss_val(p, 2)))
    return q, p, e0, eps


def normalize_odd(f):
    """Divide F by the largest odd square of its content; returns (F', s)."""
    from .arith import largest_odd_square_divisor

    c = zpoly.content(f)
    s = largest_odd_square_divisor(c) if c else 1
    return exact_div_scalar(f, s * s), s


def lambda_even(q, p, c, g, max_h_deg=None):
    """Multiplicity at the point with x = c mod 2, plus the attaining pair.

    Input pair must satisfy the even normal-form conditions.  Completing
    squares (y-translations by H2) until min{2 mu_c(Q), mu_c(P)} attains
    the maximum; the returned pair realizes it.
    """
    cap = g + 1 if max_h_deg is None else max_h_deg
    for _ in range(4 * g + 16):
        mq = mu_c(q, c, 2)
        mp = mu_c(p, c, 2)
        if mp == INF and mq == INF:
            raise InternalError("lambda undefined: Q and P both vanish")
        if 2 * mq <= mp:
            lam = 2 * mq
            break
        if mp % 2 == 1:
            lam = mp
            break
        shifted = taylor_shift(p, c)
        attain = [i for i, a in enumerate(shifted) if a and val_p(a, 2) + i == mp]
        if any(i % 2 for i in attain):
            lam = mp
            break
        r = mp // 2
        hs = [0] * (r + 1)
        for idx in attain:
            i = idx // 2
            if i > cap:
                raise InternalError("H2 degree exceeds the admissible bound")
            hs[i] = 1 << (r - i)
        h2 = taylor_shift(trim(tuple(hs)), -c)
        p = sub(add(p, mul(q, h2)), mul(h2, h2))
        q = sub(q, scale(h2, 2))
    else:
        raise InternalError("lambda_even did not terminate")
    if lam > 2 * g + 3:
        raise InternalError(f"lambda = {lam} exceeds 2g+3")
    return int(lam), q, p


def lambda_odd(f, c, p):
    """mu_c(F) at an odd prime."""
    lam = mu_c(f, c, p)
    if lam is INF:
        raise InternalError("lambda undefined: F = 0")
    return int(lam)


def lambda_ok(lam, eps, g):
    """True when the multiplicity does not obstruct minimality."""
    if lam <= g + 1:
        return True
    if g % 2 == 0:
        return False
    if lam >= g + 3:
        return False
    return eps == 1


def find_c_even(q, p, g, threshold=None):
    """(epsilon, candidate residues) at the even prime.

    Candidates are the residues where lambda may reach `threshold`
    (default g+2); the input pair must be in even normal form.
    """
    t = g + 2 if threshold is None else threshold
    eps = int(min(gauss_val(q, 2), gauss_val(p, 2)))
    qbar = fppoly.reduce_mod(q, 2)
    pbar = fppoly.reduce_mod(p, 2)
    if qbar:
        return eps, _fp_roots_at_least(qbar, (t + 1) // 2, 2)
    if pbar and not fppoly.is_in_k_x2(pbar):
        dp = fppoly.derivative(pbar, 2)
        return eps, _fp_roots_at_least(dp, t - 1, 2)
    if eps == 1:
        qh = fppoly.reduce_mod(exact_div_scalar(q, 2) if q else (), 2)
        ph = fppoly.reduce_mod(exact_div_scalar(p, 2), 2)
        s1 = set(_fp_roots_at_least(qh, (t - 1) // 2, 2))
        s2 = set(_fp_roots_at_least(ph, t - 1, 2))
        return eps, sorted(s1 & s2)
    return eps, []


def _fp_roots_at_least(f, m, p):
    """Residues with ord >= m; the zero polynomial passes everywhere."""
    if m <= 0:
        return list(range(p))
    if not f:
        return list(range(p))  # ord is +inf at every residue
    if m > fppoly.degree(f):
        return []
    return fppoly.roots_with_mult_at_least(f, m, p)


def find_c_odd(f, p, g, threshold=None):
    """(epsilon, candidate residues) at an odd prime; needs v_p(F) <= 1."""
    t = g + 2 if threshold is None else threshold
    v = gauss_val(f, p)
    if v is INF or v >= 2:
        raise HypminError("not normalized")
    eps = int(v)
    fbar = fppoly.reduce_mod(exact_div_scalar(f, p ** eps), p)
    return eps, _fp_roots_at_least(fbar, t - eps, p)


def c_ok_infinity(q, p, g):
    """Candidate test at the pole of x: membership of 0 after reversal."""
    qi = reverse(q, g + 1)
    pi = reverse(p, 2 * g + 2)
    return _zero_is_candidate(qi, pi, g, g + 2)


def _zero_is_candidate(q, p, g, t):
    eps = int(min(gauss_val(q, 2), gauss_val(p, 2)))
    qbar = fppoly.reduce_mod(q, 2)
    pbar = fppoly.reduce_mod(p, 2)
    if qbar:
        return 2 * _ord0(qbar) >= t
    if pbar and not fppoly.is_in_k_x2(pbar):
        return _ord0(fppoly.derivative(pbar, 2)) >= t - 1
    if eps == 1:
        qh = fppoly.reduce_mod(exact_div_scalar(q, 2) if q else (), 2)
        ph = fppoly.reduce_mod(exact_div_scalar(p, 2), 2)
        return 2 * _ord0(qh) >= t - 2 and _ord0(ph) >= t - 1
    return False


def _ord0(f, p=2):
    if not f:
        return 10 ** 9  # vanishing order of the zero polynomial
    return fppoly.root_multiplicity(f, 0, p)


def dilate_poly(f, c, scale_pow, p):
    """p^(-scale_pow) * f(p x + c), exact or InternalError."""
    g = taylor_shift(f, c)
    out = []
    for i, a in enumerate(g):
        num = a * p ** i
        q, rem = divmod(num, p ** scale_pow)
        if rem:
            raise InternalError("lambda not attained: dilation not integral")
        out.append(q)
    return trim(tuple(out))


def dilate(q, p, c, lam, prime):
    """(Q1, P1) with Q1 = p^-r Q(px+c), P1 = p^-2r P(px+c), r = [lam/2]."""
    r = lam // 2
    return dilate_poly(q, c, r, prime), dilate_poly(p, c, 2 * r, prime)


def _lambda_at_infinity_even(q, p, g):
    qi = reverse(q, g + 1)
    pi = reverse(p, 2 * g + 2)
    lam, _, _ = lambda_even(qi, pi, 0, g)
    return lam


def _gather_even(q, p, g, threshold):
    """Exact lambda at the pole of x and at every finite candidate."""
    eps, cands = find_c_even(q, p, g, threshold)
    pts = [(INFINITY, _lambda_at_infinity_even(q, p, g))]
    for c in cands:
        lam, _, _ = lambda_even(q, p, c, g)
        pts.append((c, lam))
    return eps, pts


def _gather_odd(f, g, p, threshold):
    eps, cands = find_c_odd(f, p, g, threshold)
    pts = [(INFINITY, lambda_odd(reverse(f, 2 * g + 2), 0, p))]
    for c in cands:
        pts.append((c, lambda_odd(f, c, p)))
    return eps, pts


def _dilated_even(q, p, g, site):
    if site == INFINITY:
        q, p = reverse(q, g + 1), reverse(p, 2 * g + 2)
        c = 0
    else:
        c = site
    lam, q, p = lambda_even(q, p, c, g)
    q1, p1 = dilate(q, p, c, lam, 2)
    return lam, q1, p1


def _dilated_odd(f, g, p, site):
    if site == INFINITY:
        f = reverse(f, 2 * g + 2)
        c = 0
    else:
        c = site
    lam = lambda_odd(f, c, p)
    r = lam // 2
    return lam, dilate_poly(f, c, 2 * r, p)


def is_minimal_at(eq, p):
    """Minimality verdict at p for a normalized equation."""
    g = eq.g
    if p == 2:
        eps, pts = _gather_even(eq.q, eq.p, g, g + 2)
    else:
        eps, pts = _gather_odd(eq.f(), g, p, g + 2)
    bad = [(site, lam) for site, lam in pts if lam >= g + 2]
    if not bad:
        return MinimalityVerdict(Status.MINIMAL)
    worst = max(bad, key=lambda t: t[1])
    if g % 2 == 0 or worst[1] >= g + 3:
        return MinimalityVerdict(Status.NOT_MINIMAL, worst)
    # g odd, every bad point has lambda = g+2
    if eps == 1:
        return MinimalityVerdict(Status.MINIMAL)
    # epsilon = 0: W(p0) has the same discriminant and epsilon 1; minimal
    # iff no point of W(p0) exceeds g+2
    site, lam = bad[0]
    if p == 2:
        _, q1, p1 = _dilated_even(eq.q, eq.p, g, site)
        eps1 = int(min(gauss_val(q1, 2), gauss_val(p1, 2)))
        _, pts1 = _gather_even(q1, p1, g, g + 3)
    else:
        _, f1 = _dilated_odd(eq.f(), g, p, site)
        eps1 = int(gauss_val(f1, p)) % 2
        _, pts1 = _gather_odd(f1, g, p, g + 3)
    if eps1 != 1:
        raise InternalError("epsilon of W(p0) expected to be 1")
    if any(lam1 >= g + 3 for _, lam1 in pts1):
        wit = max(pts1, key=lambda t: t[1])
        return MinimalityVerdict(Status.NOT_MINIMAL, wit)
    return MinimalityVerdict(Status.MINIMAL)


def is_unique_minimal_at(eq, p):
    """Uniqueness of the minimal model at p (equation must be minimal)."""
    g = eq.g
    if p == 2:
        eps, pts = _gather_even(eq.q, eq.p, g, g + 1)
    else:
        eps, pts = _gather_odd(eq.f(), g, p, g + 1)
    mx = max((lam for _, lam in pts), default=0)
    if mx <= g:
        return True
    if g % 2 == 1:
        return False
    if eps == 1:
        return True
    for site, lam in pts:
        if lam != g + 1:
            continue
        if p == 2:
            _, q1, p1 = _dilated_even(eq.q, eq.p, g, site)
            _, pts1 = _gather_even(q1, p1, g, g + 2)
        else:
            _, f1 = _dilated_odd(eq.f(), g, p, site)
            _, pts1 = _gather_odd(f1, g, p, g + 2)
        if any(lam1 >= g + 2 for _, lam1 in pts1):
            return False
    return True
