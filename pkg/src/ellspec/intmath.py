"""Integer factorization and exact rational square testing.

Python ints are already arbitrary precision and fractions.Fraction is an
exact rational in lowest terms with positive denominator, so those two
stdlib types serve as the big-integer and big-rational kernel.  This
module adds the number-theoretic operations the rest of the library
needs on top of them.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

__all__ = [
    "is_probable_prime",
    "factor_int",
    "squarefree_part_int",
    "exact_isqrt",
    "is_square_int",
    "is_square_rat",
    "parse_rational",
]

_TRIAL_LIMIT = 10**6

# Deterministic Miller-Rabin witnesses, valid for all n < 3.3 * 10^24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin test, deterministic far beyond the sizes used here."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int, rng: random.Random) -> int:
    """Brent-cycle Pollard rho; returns a nontrivial factor of composite odd n."""
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
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
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factor_int(n: int) -> tuple[int, dict[int, int]]:
    """Factor a nonzero integer into (sign, {prime: exponent}).

    Trial division up to 10**6, then Pollard rho for what remains; the
    contents met in practice only carry small primes.
    """
    if n == 0:
        raise ValueError("cannot factor zero")
    sign = 1 if n > 0 else -1
    n = abs(n)
    factors: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    d = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while d <= _TRIAL_LIMIT and d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += wheel[i]
        i = (i + 1) % 8
    if n > 1:
        stack = [n]
        rng = random.Random(0xE11)
        while stack:
            m = stack.pop()
            if m == 1:
                continue
            if is_probable_prime(m):
                factors[m] = factors.get(m, 0) + 1
                continue
            root = exact_isqrt(m)
            if root is not None:
                stack.extend((root, root))
                continue
            g = _pollard_rho(m, rng)
            stack.extend((g, m // g))
    return sign, dict(sorted(factors.items()))


def squarefree_part_int(n: int) -> int:
    """Signed squarefree part: n = squarefree_part * (square), same sign as n."""
    if n == 0:
        raise ValueError("zero has no squarefree part")
    sign, factors = factor_int(n)
    out = sign
    for p, e in factors.items():
        if e % 2:
            out *= p
    return out


def exact_isqrt(n: int) -> int | None:
    """Integer square root when n is a perfect square, else None."""
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def is_square_int(n: int) -> bool:
    return exact_isqrt(n) is not None


def is_square_rat(q: Fraction | int) -> Fraction | None:
    """Nonnegative square root of q when q is a square in Q, else None.

    Works on the reduced fraction directly; no factoring involved.
    """
    q = Fraction(q)
    rn = exact_isqrt(q.numerator)
    if rn is None:
        return None
    rd = exact_isqrt(q.denominator)
    if rd is None:
        return None
    return Fraction(rn, rd)


def parse_rational(text: str) -> Fraction:
    """Parse 'a' or 'a/b' into an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc
