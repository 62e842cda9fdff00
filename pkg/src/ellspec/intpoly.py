"""Dense univariate polynomials over Z: the ring Z[t].

Coefficients are stored lowest degree first with no trailing zeros; the
zero polynomial is the empty coefficient tuple.  All divisor enumeration
for the injectivity criteria happens in this ring.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator

from .intmath import exact_isqrt, factor_int

__all__ = [
    "IntPoly",
    "cubic_discriminant",
    "poly_gcd",
    "squarefree_decompose",
    "squarefree_part",
    "poly_sqrt",
    "rational_square_decompose",
    "radical",
]


class IntPoly:
    """Immutable element of Z[t]."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        for x in c:
            if not isinstance(x, int):
                raise TypeError(f"integer coefficients required, got {x!r}")
        self._c = tuple(c)

    # -- constructors ------------------------------------------------

    @classmethod
    def const(cls, n: int) -> "IntPoly":
        return cls((n,))

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> "IntPoly":
        if exp < 0:
            raise ValueError("negative exponent")
        return cls([0] * exp + [coeff])

    @classmethod
    def coerce(cls, value) -> "IntPoly":
        if isinstance(value, IntPoly):
            return value
        if isinstance(value, int):
            return cls.const(value)
        raise TypeError(f"cannot coerce {value!r} to IntPoly")

    # -- basic queries -----------------------------------------------

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._c) - 1

    @property
    def lc(self) -> int:
        """Leading coefficient (0 for the zero polynomial)."""
        return self._c[-1] if self._c else 0

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def is_constant(self) -> bool:
        return len(self._c) <= 1

    def __bool__(self) -> bool:
        return bool(self._c)

    def __getitem__(self, i: int) -> int:
        return self._c[i] if 0 <= i < len(self._c) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly.const(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    # -- ring operations ---------------------------------------------

    def __add__(self, other) -> "IntPoly":
        if not isinstance(other, (IntPoly, int)):
            return NotImplemented  # let richer rings (Q(t)) handle it
        other = IntPoly.coerce(other)
        n = max(len(self._c), len(other._c))
        return IntPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(-x for x in self._c)

    def __sub__(self, other) -> "IntPoly":
        if not isinstance(other, (IntPoly, int)):
            return NotImplemented
        return self + (-IntPoly.coerce(other))

    def __rsub__(self, other) -> "IntPoly":
        if not isinstance(other, (IntPoly, int)):
            return NotImplemented
        return IntPoly.coerce(other) + (-self)

    def __mul__(self, other) -> "IntPoly":
        if not isinstance(other, (IntPoly, int)):
            return NotImplemented
        other = IntPoly.coerce(other)
        if self.is_zero or other.is_zero:
            return IntPoly()
        out = [0] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(other._c):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPoly":
        if e < 0:
            raise ValueError("negative power in Z[t]")
        result = IntPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> "IntPoly":
        """Multiply by t**k."""
        if self.is_zero:
            return self
        return IntPoly((0,) * k + self._c)

    def derivative(self) -> "IntPoly":
        return IntPoly(i * self._c[i] for i in range(1, len(self._c)))

    # -- evaluation ---------------------------------------------------

    def __call__(self, t0) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * t0 + c
        return acc

    # -- content / primitive part --------------------------------------

    def content(self) -> int:
        """Positive gcd of the coefficients; rejects the zero polynomial."""
        if self.is_zero:
            raise ValueError("zero polynomial has no content")
        g = 0
        for c in self._c:
            g = math.gcd(g, c)
        return g

    def primitive_part(self) -> "IntPoly":
        """self / content; the sign stays on the primitive part."""
        c = self.content()
        return IntPoly(x // c for x in self._c)

    def content_and_primitive(self) -> tuple[int, "IntPoly"]:
        c = self.content()
        return c, IntPoly(x // c for x in self._c)

    # -- division -------------------------------------------------------

    def pseudo_divmod(self, d: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Pseudo-division: lc(d)^(deg r gap) * self = q*d + r."""
        if d.is_zero:
            raise ZeroDivisionError("pseudo-division by zero")
        r = list(self._c)
        dd = d.degree
        dl = d.lc
        if self.degree < dd:
            return IntPoly(), self
        q = [0] * (self.degree - dd + 1)
        for _ in range(self.degree - dd + 1):
            deg_r = len(r) - 1
            while r and r[-1] == 0:
                r.pop()
                deg_r -= 1
            if deg_r < dd:
                break
            coef = r[-1]
            for i in range(len(r)):
                r[i] *= dl
            for i in range(len(q)):
                q[i] *= dl
            q[deg_r - dd] += coef
            for i, dc in enumerate(d._c):
                r[deg_r - dd + i] -= coef * dc
        return IntPoly(q), IntPoly(r)

    def divmod_exact(self, d: "IntPoly") -> tuple["IntPoly", "IntPoly"] | None:
        """Quotient and remainder when division stays in Z[t]; None otherwise."""
        if d.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        r = list(self._c)
        q = [0] * max(self.degree - d.degree + 1, 0)
        dd = d.degree
        dl = d.lc
        while True:
            while r and r[-1] == 0:
                r.pop()
            deg_r = len(r) - 1
            if deg_r < dd:
                break
            if r[-1] % dl != 0:
                return None
            coef = r[-1] // dl
            q[deg_r - dd] = coef
            for i, dc in enumerate(d._c):
                r[deg_r - dd + i] -= coef * dc
        return IntPoly(q), IntPoly(r)

    def exact_div(self, d: "IntPoly") -> "IntPoly":
        """Exact division in Z[t]; raises if d does not divide self."""
        qr = self.divmod_exact(d)
        if qr is None or not qr[1].is_zero:
            raise ValueError(f"{d} does not divide {self} in Z[t]")
        return qr[0]

    def divides(self, other: "IntPoly") -> bool:
        """True when self | other in Z[t]."""
        if self.is_zero:
            return other.is_zero
        qr = other.divmod_exact(self)
        return qr is not None and qr[1].is_zero

    # -- printing ---------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for e in range(self.degree, -1, -1):
            c = self[e]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            elif e == 1:
                body = "t" if a == 1 else f"{a}*t"
            else:
                body = f"t^{e}" if a == 1 else f"{a}*t^{e}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"IntPoly({self})"


T = IntPoly.monomial(1, 1)
IntPoly.t = T  # type: ignore[attr-defined]


def cubic_discriminant(A, B, C) -> IntPoly:
    """Discriminant of x^3 + A x^2 + B x + C with A, B, C in Z[t]."""
    A = IntPoly.coerce(A)
    B = IntPoly.coerce(B)
    C = IntPoly.coerce(C)
    return (
        18 * A * B * C
        - 4 * A * A * A * C
        + A * A * B * B
        - 4 * B * B * B
        - 27 * C * C
    )


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """GCD in Z[t] via the primitive Euclidean algorithm.

    Result is canonical: positive leading coefficient, content equal to
    gcd of the contents.
    """
    if a.is_zero and b.is_zero:
        return IntPoly()
    if a.is_zero:
        g = b
        return g if g.lc > 0 else -g
    if b.is_zero:
        return a if a.lc > 0 else -a
    ca, pa = a.content_and_primitive()
    cb, pb = b.content_and_primitive()
    c = math.gcd(ca, cb)
    if pa.degree < pb.degree:
        pa, pb = pb, pa
    while not pb.is_zero:
        _, r = pa.pseudo_divmod(pb)
        pa = pb
        pb = r.primitive_part() if not r.is_zero else IntPoly()
    if pa.lc < 0:
        pa = -pa
    return c * pa


def squarefree_decompose(p: IntPoly) -> tuple[int, int, list[tuple[IntPoly, int]]]:
    """Yun decomposition: p = unit * content * prod d_i^(m_i).

    The d_i are primitive, squarefree, pairwise coprime, with positive
    leading coefficients; multiplicities are strictly increasing.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    content, f = p.content_and_primitive()
    unit = 1
    if f.lc < 0:
        unit = -1
        f = -f
    if f.degree <= 0:
        return unit, content, []
    out: list[tuple[IntPoly, int]] = []
    df = f.derivative()
    g = poly_gcd(f, df)
    b = f.exact_div(g)
    c = df.exact_div(g)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        i += 1
    return unit, content, out


def squarefree_part(p: IntPoly) -> IntPoly:
    """Signed squarefree representative of p modulo squares in Q(t)^x.

    Sign of the unit times the squarefree part of the content times the
    odd-multiplicity Yun factors.
    """
    from .intmath import squarefree_part_int

    unit, content, parts = squarefree_decompose(p)
    out = IntPoly.const(unit * squarefree_part_int(content))
    for d, m in parts:
        if m % 2:
            out = out * d
    return out


def poly_sqrt(p: IntPoly) -> IntPoly | None:
    """Exact square root in Z[t] when p is a perfect square, else None."""
    if p.is_zero:
        return IntPoly()
    if p.lc < 0:
        return None
    try:
        c, root = rational_square_decompose(p)
    except ValueError:
        return None
    ci = exact_isqrt(c.numerator)
    if c.denominator != 1 or ci is None:
        return None
    return ci * root


def rational_square_decompose(p: IntPoly) -> tuple[Fraction, IntPoly]:
    """Write nonzero p as c * m**2 with c in Q and m in Z[t] primitive, lc > 0.

    Raises ValueError when the polynomial part is not a perfect square
    (some irreducible factor has odd multiplicity).
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    unit, content, parts = squarefree_decompose(p)
    m = IntPoly.const(1)
    for d, mult in parts:
        if mult % 2:
            raise ValueError("polynomial part is not a square")
        m = m * d ** (mult // 2)
    return Fraction(unit * content), m


def radical(p: IntPoly) -> IntPoly:
    """Product of distinct primitive irreducible factors and distinct
    content primes, positive leading coefficient."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    _, content, parts = squarefree_decompose(p)
    out = IntPoly.const(1)
    if content != 1:
        _, primes = factor_int(content)
        for q in primes:
            out = out * q
    for d, _ in parts:
        out = out * d
    return out
