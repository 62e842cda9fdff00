"""Weierstrass cubics y^2 = x^3 + A x^2 + B x + C and their group law.

Generic over an exact field: coefficients are either Fraction (curves
over Q) or RatFunc (curves over Q(t)).  Points are affine pairs plus an
explicit neutral element O; everything is exact, no projective
coordinates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .factorize import factor, rational_roots
from .intpoly import IntPoly, cubic_discriminant, poly_sqrt
from .ratfunc import RatFunc

__all__ = ["Point", "Curve", "SingularCurveError", "OffCurveError", "XDecomposition"]


class SingularCurveError(ValueError):
    """Raised for models whose cubic has a vanishing discriminant."""

    def __init__(self, discriminant):
        self.discriminant = discriminant
        super().__init__(f"singular model: discriminant {discriminant} vanishes")


class OffCurveError(ValueError):
    """Raised when a point does not satisfy the curve equation."""


@dataclass(frozen=True)
class Point:
    """Affine point (x, y) or the neutral element O (x is None)."""

    x: object = None
    y: object = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self) -> str:
        if self.is_infinity:
            return "O"
        return f"({self.x}, {self.y})"


O = Point()


@dataclass(frozen=True)
class XDecomposition:
    """x(P) = p / q**2 with p, q coprime in Z[t]."""

    p: IntPoly
    q: IntPoly


def _coerce_field(value):
    """Normalize a coefficient to Fraction or RatFunc."""
    if isinstance(value, (Fraction, RatFunc)):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, IntPoly):
        return RatFunc(value)
    raise TypeError(f"unsupported coefficient {value!r}")


class Curve:
    """Nonsingular cubic y^2 = x^3 + A x^2 + B x + C over Q or Q(t)."""

    def __init__(self, A, B, C, split_roots=None):
        self.A = _coerce_field(A)
        self.B = _coerce_field(B)
        self.C = _coerce_field(C)
        if isinstance(self.A, RatFunc) or isinstance(self.B, RatFunc) or isinstance(self.C, RatFunc):
            self.A = RatFunc._coerce(self.A)
            self.B = RatFunc._coerce(self.B)
            self.C = RatFunc._coerce(self.C)
            self.field = "Q(t)"
        else:
            self.field = "Q"
        a, b, c = self.A, self.B, self.C
        self.disc_cubic = (
            18 * a * b * c - 4 * a * a * a * c + a * a * b * b - 4 * b * b * b - 27 * c * c
        )
        if not self.disc_cubic:
            raise SingularCurveError(self.disc_cubic)
        self.discriminant = 16 * self.disc_cubic
        if split_roots is not None:
            roots = tuple(_coerce_field(e) for e in split_roots)
            e1, e2, e3 = roots
            if (
                -(e1 + e2 + e3) != self.A
                or e1 * e2 + e1 * e3 + e2 * e3 != self.B
                or -(e1 * e2 * e3) != self.C
            ):
                raise ValueError("split roots do not expand to (A, B, C)")
            self.split_roots = roots
        else:
            self.split_roots = None

    # -- constructors --------------------------------------------------

    @classmethod
    def from_roots(cls, e1, e2, e3) -> "Curve":
        e1, e2, e3 = (_coerce_field(e) for e in (e1, e2, e3))
        A = -(e1 + e2 + e3)
        B = e1 * e2 + e1 * e3 + e2 * e3
        C = -(e1 * e2 * e3)
        return cls(A, B, C, split_roots=(e1, e2, e3))

    # -- coefficient access --------------------------------------------

    def coeff_polys(self) -> tuple[IntPoly, IntPoly, IntPoly]:
        """(A, B, C) as elements of Z[t]; raises for other coefficient rings."""
        if self.field != "Q(t)":
            raise ValueError("curve is not defined over Q(t)")
        return self.A.as_poly(), self.B.as_poly(), self.C.as_poly()

    def discriminant_poly(self) -> IntPoly:
        """Discriminant of the cubic as an element of Z[t]."""
        A, B, C = self.coeff_polys()
        return cubic_discriminant(A, B, C)

    def split_root_polys(self) -> tuple[IntPoly, IntPoly, IntPoly]:
        if self.split_roots is None:
            raise ValueError("curve has no recorded split roots")
        return tuple(e.as_poly() for e in self.split_roots)  # type: ignore[return-value]

    # -- equation and membership ----------------------------------------

    def rhs(self, x):
        return x * x * x + self.A * x * x + self.B * x + self.C

    def contains(self, P: Point) -> bool:
        if P.is_infinity:
            return True
        return P.y * P.y == self.rhs(P.x)

    def _require(self, P: Point) -> None:
        if not self.contains(P):
            raise OffCurveError(f"point {P} is not on {self}")

    # -- group law --------------------------------------------------------

    def neg(self, P: Point) -> Point:
        if P.is_infinity:
            return P
        return Point(P.x, -P.y)

    def add(self, P: Point, Q: Point) -> Point:
        self._require(P)
        self._require(Q)
        if P.is_infinity:
            return Q
        if Q.is_infinity:
            return P
        if P.x == Q.x:
            if P.y == -Q.y:
                return O
            # doubling (P == Q; y != 0 since the model is nonsingular)
            slope = (3 * P.x * P.x + 2 * self.A * P.x + self.B) / (2 * P.y)
        else:
            slope = (Q.y - P.y) / (Q.x - P.x)
        x3 = slope * slope - self.A - P.x - Q.x
        y3 = slope * (P.x - x3) - P.y
        return Point(x3, y3)

    def sub(self, P: Point, Q: Point) -> Point:
        return self.add(P, self.neg(Q))

    def scalar_mul(self, m: int, P: Point) -> Point:
        self._require(P)
        if m < 0:
            return self.scalar_mul(-m, self.neg(P))
        result = O
        base = P
        while m:
            if m & 1:
                result = self.add(result, base)
            base = self.add(base, base)
            m >>= 1
        return result

    # -- torsion ---------------------------------------------------------

    def two_torsion(self) -> list[Point]:
        """O plus one point (e, 0) per rational root e of the cubic."""
        points = [O]
        for e in self._cubic_rational_roots():
            zero = e - e
            points.append(Point(e, zero))
        return points

    def _cubic_rational_roots(self):
        if self.field == "Q":
            return _q_cubic_roots(self.A, self.B, self.C)
        A, B, C = self.coeff_polys()
        return _qt_cubic_roots(A, B, C)

    # -- x-coordinate decomposition ----------------------------------------

    def x_decompose(self, P: Point) -> XDecomposition:
        """Write x(P) = p/q^2, p and q coprime in Z[t]."""
        if self.field != "Q(t)":
            raise ValueError("x_decompose requires a curve over Q(t)")
        if P.is_infinity:
            raise ValueError("x_decompose requires an affine point")
        self._require(P)
        self.coeff_polys()  # enforce Z[t] coefficients
        x = RatFunc._coerce(P.x)
        q = poly_sqrt(x.den)
        if q is None:
            raise ValueError(f"denominator {x.den} of x(P) is not a square in Z[t]")
        return XDecomposition(p=x.num, q=q)

    # -- model diagnostics ----------------------------------------------------

    def j_invariant(self):
        c4 = 16 * self.A * self.A - 48 * self.B
        return c4 * c4 * c4 / self.discriminant

    def is_nonconstant(self) -> bool:
        """True when the model is non-isotrivial: j is nonconstant in Q(t)."""
        if self.field != "Q(t)":
            return False
        j = self.j_invariant()
        return not RatFunc._coerce(j).is_constant

    def __str__(self) -> str:
        return f"y^2 = x^3 + ({self.A})*x^2 + ({self.B})*x + ({self.C})"

    def __repr__(self) -> str:
        return f"Curve[{self.field}]({self})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Curve):
            return NotImplemented
        return (self.A, self.B, self.C) == (other.A, other.B, other.C)

    def __hash__(self) -> int:
        return hash((self.A, self.B, self.C))


# ---------------------------------------------------------------------------
# Rational roots of monic cubics over the two coefficient fields.
# ---------------------------------------------------------------------------


def _q_cubic_roots(A: Fraction, B: Fraction, C: Fraction) -> list[Fraction]:
    import math

    lcm = 1
    for f in (A, B, C):
        lcm = lcm * f.denominator // math.gcd(lcm, f.denominator)
    # clear denominators without disturbing roots: scale x by 1 and use
    # the integer polynomial lcm * (x^3 + A x^2 + B x + C)
    poly = IntPoly(
        [
            int(C * lcm),
            int(B * lcm),
            int(A * lcm),
            lcm,
        ]
    )
    return rational_roots(poly)


def _all_divisors(p: IntPoly):
    """All divisors of a nonzero p in Z[t], both signs."""
    fac = factor(p)
    prime_powers = [[q**e for e in range(mult + 1)] for q, mult in fac.content_primes]
    poly_powers = [[g**e for e in range(mult + 1)] for g, mult in fac.poly_factors]
    for combo in itertools.product(*(prime_powers + poly_powers)):
        d = IntPoly.const(1)
        for part in combo:
            d = d * part
        yield d
        yield -d


def _qt_cubic_roots(A: IntPoly, B: IntPoly, C: IntPoly) -> list[RatFunc]:
    """Roots in Q(t) of monic x^3 + A x^2 + B x + C with Z[t] coefficients.

    Such roots are integral over Z[t], hence lie in Z[t] and divide C.
    """
    roots: list[RatFunc] = []
    if C.is_zero:
        roots.append(RatFunc(0))
        # remaining quadratic x^2 + A x + B
        if B.is_zero:
            rA = RatFunc(A)
            if not rA.is_zero and -rA not in roots:
                roots.append(-rA)
            return roots
        disc = RatFunc(A * A - 4 * B)
        s = disc.sqrt()
        if s is not None:
            for candidate in ((-RatFunc(A) + s) / 2, (-RatFunc(A) - s) / 2):
                if candidate not in roots:
                    roots.append(candidate)
        return roots
    for d in _all_divisors(C):
        r = RatFunc(d)
        if r in roots:
            continue
        if r * r * r + A * r * r + B * r + C == 0:
            roots.append(r)
    return roots
