"""Irreducible factorization in Z[t].

Classical Zassenhaus: Yun squarefree decomposition, distinct-degree and
Cantor-Zassenhaus equal-degree factorization modulo a small prime, Hensel
lifting up to the Mignotte coefficient bound, then subset recombination.
Degrees in this project stay at or below 14, so the exponential
recombination step is harmless.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .intmath import factor_int, is_probable_prime
from .intpoly import IntPoly, squarefree_decompose

__all__ = ["Factorization", "factor", "is_irreducible", "rational_roots"]


# ---------------------------------------------------------------------------
# GF(p)[t] helpers: dense coefficient lists, lowest degree first.
# ---------------------------------------------------------------------------


def _gf_trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _gf_from_poly(f: IntPoly, p: int) -> list[int]:
    return _gf_trim([c % p for c in f.coeffs])


def _gf_to_poly_symmetric(f: list[int], p: int) -> IntPoly:
    half = p // 2
    return IntPoly(c - p if c > half else c for c in f)


def _gf_mul(f: list[int], g: list[int], p: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _gf_trim(out)


def _gf_sub(f: list[int], g: list[int], p: int) -> list[int]:
    n = max(len(f), len(g))
    fi = f + [0] * (n - len(f))
    gi = g + [0] * (n - len(g))
    return _gf_trim([(a - b) % p for a, b in zip(fi, gi)])


def _gf_divmod(f: list[int], g: list[int], p: int) -> tuple[list[int], list[int]]:
    if not g:
        raise ZeroDivisionError
    r = list(f)
    dg = len(g) - 1
    inv = pow(g[-1], -1, p)
    q = [0] * max(len(f) - dg, 0)
    while len(_gf_trim(r)) - 1 >= dg:
        dr = len(r) - 1
        c = r[-1] * inv % p
        q[dr - dg] = c
        for i in range(len(g)):
            r[dr - dg + i] = (r[dr - dg + i] - c * g[i]) % p
        _gf_trim(r)
    return _gf_trim(q), r


def _gf_rem(f: list[int], g: list[int], p: int) -> list[int]:
    return _gf_divmod(f, g, p)[1]


def _gf_monic(f: list[int], p: int) -> list[int]:
    if not f:
        return []
    inv = pow(f[-1], -1, p)
    return [c * inv % p for c in f]


def _gf_gcd(f: list[int], g: list[int], p: int) -> list[int]:
    while g:
        f, g = g, _gf_rem(f, g, p)
    return _gf_monic(f, p)


def _gf_gcdex(f: list[int], g: list[int], p: int) -> tuple[list[int], list[int], list[int]]:
    """Extended gcd: returns (s, t, h) with s*f + t*g = h, h monic."""
    r0, r1 = list(f), list(g)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _gf_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _gf_sub(s0, _gf_mul(q, s1, p), p)
        t0, t1 = t1, _gf_sub(t0, _gf_mul(q, t1, p), p)
    if not r0:
        return [], [], []
    inv = pow(r0[-1], -1, p)
    scale = lambda h: [c * inv % p for c in h]
    return scale(s0), scale(t0), scale(r0)


def _gf_pow_mod(f: list[int], e: int, g: list[int], p: int) -> list[int]:
    result = [1]
    base = _gf_rem(f, g, p)
    while e:
        if e & 1:
            result = _gf_rem(_gf_mul(result, base, p), g, p)
        base = _gf_rem(_gf_mul(base, base, p), g, p)
        e >>= 1
    return result


def _gf_derivative(f: list[int], p: int) -> list[int]:
    return _gf_trim([i * f[i] % p for i in range(1, len(f))])


def _gf_is_squarefree(f: list[int], p: int) -> bool:
    return len(_gf_gcd(f, _gf_derivative(f, p), p)) == 1


# ---------------------------------------------------------------------------
# Factorization of a monic squarefree polynomial over GF(p).
# ---------------------------------------------------------------------------


def _gf_distinct_degree(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Split monic squarefree f into products of irreducibles of equal degree."""
    out = []
    h = [0, 1]  # t
    v = list(f)
    d = 0
    while len(v) - 1 > 0:
        d += 1
        if 2 * d > len(v) - 1:
            out.append((v, len(v) - 1))
            break
        h = _gf_pow_mod(h, p, v, p)
        g = _gf_gcd(_gf_sub(h, [0, 1], p), v, p)
        if len(g) > 1:
            out.append((g, d))
            v = _gf_divmod(v, g, p)[0]
            h = _gf_rem(h, v, p)
    return out


def _gf_equal_degree(f: list[int], d: int, p: int, rng: random.Random) -> list[list[int]]:
    """Cantor-Zassenhaus split of monic f into irreducibles of degree d."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = _gf_trim([rng.randrange(p) for _ in range(n)])
        if len(a) - 1 < 1:
            continue
        g = _gf_gcd(a, f, p)
        if len(g) > 1:
            split = g
        else:
            b = _gf_pow_mod(a, (p**d - 1) // 2, f, p)
            split = _gf_gcd(_gf_sub(b, [1], p), f, p)
        if 1 < len(split) < len(f):
            rest = _gf_divmod(f, split, p)[0]
            return _gf_equal_degree(split, d, p, rng) + _gf_equal_degree(rest, d, p, rng)


def _gf_factor_squarefree(f: list[int], p: int) -> list[list[int]]:
    """Monic irreducible factors of a monic squarefree f over GF(p), p odd."""
    rng = random.Random(p * 1_000_003 + len(f))
    out: list[list[int]] = []
    for g, d in _gf_distinct_degree(f, p):
        out.extend(_gf_equal_degree(g, d, p, rng))
    return sorted(out)


# ---------------------------------------------------------------------------
# Hensel lifting (von zur Gathen & Gerhard, chapter 15).
# ---------------------------------------------------------------------------


def _trunc(f: IntPoly, m: int) -> IntPoly:
    half = m // 2
    return IntPoly((c % m) - m if (c % m) > half else (c % m) for c in f.coeffs)


def _divmod_monic(f: IntPoly, g: IntPoly) -> tuple[IntPoly, IntPoly]:
    qr = f.divmod_exact(g)
    assert qr is not None  # g monic, so division never leaves Z[t]
    return qr


def _hensel_step(m, f, g, h, s, t):
    """Lift f = g*h, s*g + t*h = 1 from mod m to mod m**2 (h monic)."""
    M = m * m
    e = _trunc(f - g * h, M)
    q, r = _divmod_monic(s * e, h)
    q, r = _trunc(q, M), _trunc(r, M)
    u = t * e + q * g
    G = _trunc(g + u, M)
    H = _trunc(h + r, M)
    u = s * G + t * H
    b = _trunc(u - 1, M)
    c, d = _divmod_monic(s * b, H)
    c, d = _trunc(c, M), _trunc(d, M)
    u = t * b + c * G
    S = _trunc(s - d, M)
    T = _trunc(t - u, M)
    return G, H, S, T


def _hensel_lift(p: int, f: IntPoly, mod_factors: list[IntPoly], l: int) -> list[IntPoly]:
    """Lift f = lc(f) * prod(mod_factors) (mod p) to the same shape mod p**l."""
    r = len(mod_factors)
    lc = f.lc
    pl = p**l
    if r == 1:
        inv = pow(lc % pl, -1, pl)
        return [_trunc(inv * f, pl)]
    k = r // 2
    steps = max(1, math.ceil(math.log2(l)))

    g = [lc % p]
    for fi in mod_factors[:k]:
        g = _gf_mul(g, _gf_from_poly(fi, p), p)
    h = [1]
    for fi in mod_factors[k:]:
        h = _gf_mul(h, _gf_from_poly(fi, p), p)
    s, t, one = _gf_gcdex(g, h, p)
    assert one == [1]

    G = _gf_to_poly_symmetric(g, p)
    H = _gf_to_poly_symmetric(h, p)
    S = _gf_to_poly_symmetric(s, p)
    T = _gf_to_poly_symmetric(t, p)
    m = p
    for _ in range(steps):
        G, H, S, T = _hensel_step(m, f, G, H, S, T)
        m = m * m
    return _hensel_lift(p, G, mod_factors[:k], l) + _hensel_lift(p, H, mod_factors[k:], l)


# ---------------------------------------------------------------------------
# Zassenhaus over Z.
# ---------------------------------------------------------------------------


def _primes_from(start: int):
    n = start
    while True:
        if is_probable_prime(n):
            yield n
        n += 1


def _mignotte_bound(f: IntPoly) -> int:
    n = f.degree
    A = max(abs(c) for c in f.coeffs)
    b = abs(f.lc)
    return (math.isqrt(n + 1) + 1) * 2**n * A * b


def _subsets(items: list[int], size: int):
    import itertools

    return itertools.combinations(items, size)


def _zassenhaus(f: IntPoly) -> list[IntPoly]:
    """Irreducible factors of a primitive squarefree f with lc > 0, deg >= 1."""
    n = f.degree
    if n == 1:
        return [f]

    lead = f.lc
    B = _mignotte_bound(f)

    candidates = []
    for p in _primes_from(3):
        if lead % p == 0:
            continue
        fp = _gf_from_poly(f, p)
        if not _gf_is_squarefree(fp, p):
            continue
        mod_factors = _gf_factor_squarefree(_gf_monic(fp, p), p)
        candidates.append((p, mod_factors))
        if len(mod_factors) <= 3 or len(candidates) >= 5:
            break
    p, mod_factors = min(candidates, key=lambda c: len(c[1]))
    if len(mod_factors) == 1:
        return [f]

    l = 1
    while p**l <= 2 * B:
        l += 1
    pl = p**l

    lifted = _hensel_lift(p, f, [_gf_to_poly_symmetric(m, p) for m in mod_factors], l)

    indices = list(range(len(lifted)))
    remaining = set(indices)
    factors: list[IntPoly] = []
    b = lead
    s = 1
    while 2 * s <= len(remaining):
        found = False
        for S in _subsets(indices, s):
            G = IntPoly.const(b)
            for i in S:
                G = _trunc(G * lifted[i], pl)
            H = IntPoly.const(b)
            for i in remaining - set(S):
                H = _trunc(H * lifted[i], pl)
            g_norm = sum(abs(c) for c in G.coeffs)
            h_norm = sum(abs(c) for c in H.coeffs)
            if g_norm * h_norm <= B:
                remaining -= set(S)
                indices = [i for i in indices if i not in S]
                factors.append(G.primitive_part())
                f = H.primitive_part()
                b = f.lc
                found = True
                break
        if not found:
            s += 1
    factors.append(f)
    return [g if g.lc > 0 else -g for g in factors]


# ---------------------------------------------------------------------------
# Public factorization interface.
# ---------------------------------------------------------------------------


def _poly_sort_key(p: IntPoly):
    return (p.degree, p.coeffs)


@dataclass(frozen=True)
class Factorization:
    """Canonical factorization in Z[t].

    unit is +-1, content primes carry positive exponents, and the
    polynomial factors are primitive irreducible with positive leading
    coefficients; recomposition reproduces the input exactly.
    """

    unit: int
    content_primes: tuple[tuple[int, int], ...]
    poly_factors: tuple[tuple[IntPoly, int], ...]

    def recompose(self) -> IntPoly:
        out = IntPoly.const(self.unit)
        for q, e in self.content_primes:
            out = out * q**e
        for g, e in self.poly_factors:
            out = out * g**e
        return out

    @property
    def content(self) -> int:
        c = 1
        for q, e in self.content_primes:
            c *= q**e
        return c


def factor(p: IntPoly) -> Factorization:
    """Full irreducible factorization of a nonzero element of Z[t]."""
    if p.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    unit, content, squarefree_parts = squarefree_decompose(p)
    sign, content_primes = factor_int(content)
    unit *= sign

    poly_factors: list[tuple[IntPoly, int]] = []
    for part, mult in squarefree_parts:
        for g in _zassenhaus(part):
            poly_factors.append((g, mult))
    poly_factors.sort(key=lambda fm: _poly_sort_key(fm[0]))

    return Factorization(
        unit=unit,
        content_primes=tuple(sorted(content_primes.items())),
        poly_factors=tuple(poly_factors),
    )


def is_irreducible(p: IntPoly) -> bool:
    """True when the primitive part of p is irreducible over Q."""
    if p.is_zero or p.is_constant:
        return False
    fac = factor(p)
    return len(fac.poly_factors) == 1 and fac.poly_factors[0][1] == 1


def rational_roots(p: IntPoly) -> list:
    """All rational roots of a nonzero p, from its linear factors."""
    from fractions import Fraction

    if p.is_zero:
        raise ValueError("zero polynomial")
    roots = []
    for g, _ in factor(p).poly_factors:
        if g.degree == 1:
            roots.append(Fraction(-g[0], g[1]))
    return sorted(roots)
