"""Arbitrary-precision integer utilities.

p-adic valuations, integer factorization (trial division + Brent's cycle
variant of Pollard rho), modular inverses and odd-square extraction.  All
functions are pure and operate on Python ints, which are already exact
bignums.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .errors import FactorizationIncompleteError, NotCoprimeError

INF = float("inf")

# Trial division uses the primes below this bound (sieved once on import).
_TRIAL_BOUND = 1 << 16

# Iterations granted to Brent-rho before the cofactor is declared stuck.
_RHO_BUDGET = 1 << 20


def _sieve(bound):
    flags = bytearray([1]) * bound
    flags[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(bound) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i in range(bound) if flags[i]]

_SMALL_PRIMES = _sieve(_TRIAL_BOUND)

# Deterministic Miller-Rabin witnesses below ~3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_LIMIT = 3317044064679887385961981


def is_prime(n, rng=None):
    """Miller-Rabin primality test, deterministic below ~3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    bases = _MR_BASES
    if n >= _MR_DETERMINISTIC_LIMIT:
        rng = rng or random.Random(0xC0FFEE ^ n)
        bases = list(_MR_BASES) + [rng.randrange(2, n - 1) for _ in range(20)]
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def val_p(n, p):
    """Largest e with p**e | n; +inf for n = 0."""
    if n == 0:
        return INF
    e = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        e += 1
    return e


def inv_mod(a, n):
    """Least nonnegative b with a*b = 1 mod n."""
    try:
        return pow(a, -1, n)
    except ValueError:
        raise NotCoprimeError(f"{a} is not coprime to {n}")


@dataclass(frozen=True)
class FactoredInteger:
    """sign * cofactor * prod(p**e) with primes strictly increasing.

    cofactor > 1 flags an incomplete factorization (rho budget exhausted).
    """

    sign: int
    factors: tuple = field(default_factory=tuple)
    cofactor: int = 1

    def value(self):
        v = self.sign * self.cofactor
        for p, e in self.factors:
            v *= p ** e
        return v

    @property
    def complete(self):
        return self.cofactor == 1

    def exponent(self, p):
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def primes(self):
        return [p for p, _ in self.factors]

    def __str__(self):
        if self.sign == 0:
            return "0"
        parts = [f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors]
        if self.cofactor > 1:
            parts.append(f"C{self.cofactor}")
        body = "*".join(parts) if parts else "1"
        return ("-" if self.sign < 0 else "") + body


def _brent_rho(n, rng):
    """One Brent-rho attempt; returns a nontrivial factor or None."""
    if n % 2 == 0:
        return 2
    y = rng.randrange(1, n)
    c = rng.randrange(1, n)
    m = 128
    g = r = q = 1
    count = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        r <<= 1
        count += r
        if count > _RHO_BUDGET:
            return None
    if g == n:
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
    return g if g != n else None


def factorize(n, hints=()):
    """Factor n into a FactoredInteger.

    Prime hints are divided out first, then trial division by the sieved
    small primes, then the hard-composite splitter (sympy when installed,
    budgeted Brent-rho otherwise).  A stuck composite lands in `cofactor`
    rather than raising.
    """
    if n == 0:
        return FactoredInteger(0)
    sign = 1 if n > 0 else -1
    n = abs(n)
    found = {}
    for p in hints:
        if p >= 2 and n % p == 0 and is_prime(p):
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            found[p] = e
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            found[p] = found.get(p, 0) + e
    cofactor = 1
    if n > 1:
        if n < _TRIAL_BOUND * _TRIAL_BOUND or is_prime(n):
            found[n] = found.get(n, 0) + 1
        else:
            hard, cofactor = _factor_hard(n)
            for p, e in hard.items():
                found[p] = found.get(p, 0) + e
    factors = tuple(sorted(found.items()))
    return FactoredInteger(sign, factors, cofactor)


def _factor_hard(n):
    """Factor a composite with no prime divisors below the trial bound.

    Delegates to sympy when available (much faster on balanced
    semiprimes); otherwise falls back to budgeted Brent-rho, which may
    leave a stuck cofactor.  Returns ({prime: exponent}, cofactor).
    """
    try:
        import sympy
    except ImportError:
        return _factor_rho(n)
    return {int(p): int(e) for p, e in sympy.factorint(n).items()}, 1


def _factor_rho(n):
    found = {}
    cofactor = 1
    rng = random.Random(0x5EED ^ n)
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            found[m] = found.get(m, 0) + 1
            continue
        root = _perfect_power_root(m)
        if root is not None:
            b, k = root
            stack.extend([b] * k)
            continue
        d = None
        for _ in range(4):
            d = _brent_rho(m, rng)
            if d is not None and 1 < d < m:
                break
            d = None
        if d is None:
            cofactor *= m
        else:
            stack.append(d)
            stack.append(m // d)
    return found, cofactor


def _perfect_power_root(m):
    """Return (b, k) with b**k = m, k >= 2, or None."""
    for k in range(2, m.bit_length() + 1):
        b = round(m ** (1.0 / k))
        for cand in (b - 1, b, b + 1):
            if cand >= 2 and cand ** k == m:
                return cand, k
    return None


def largest_odd_square_divisor(n):
    """Largest odd s with s*s | n.  Needs the odd part fully factored."""
    if n < 1:
        raise ValueError("n must be positive")
    n >>= (n & -n).bit_length() - 1  # odd part; even squares never count
    fac = factorize(n)
    if not fac.complete:
        # the stuck cofactor could hide a square
        raise FactorizationIncompleteError(f"factorization incomplete: {fac}")
    s = 1
    for p, e in fac.factors:
        if p != 2:
            s *= p ** (e // 2)
    return s
