"""The field Q(t) as reduced fractions of integer polynomials.

Canonical form: numerator and denominator are coprime in Z[t] (integer
contents coprime and primitive parts coprime) and the denominator has a
positive leading coefficient.  This makes equality a structural check.
"""

from __future__ import annotations

from fractions import Fraction

from .intmath import is_square_rat
from .intpoly import IntPoly, poly_gcd, rational_square_decompose

__all__ = ["RatFunc"]


class RatFunc:
    """Immutable element of Q(t)."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = self._lift(num)
        den = self._lift(den)
        if isinstance(num, tuple):  # (IntPoly numerator, IntPoly denominator)
            num, extra = num
        else:
            extra = IntPoly.const(1)
        if isinstance(den, tuple):
            den_num, den_den = den
        else:
            den_num, den_den = den, IntPoly.const(1)
        n = num * den_den
        d = extra * den_num
        if d.is_zero:
            raise ZeroDivisionError("zero denominator in Q(t)")
        if n.is_zero:
            self.num = IntPoly()
            self.den = IntPoly.const(1)
        else:
            g = poly_gcd(n, d)
            n = n.exact_div(g)
            d = d.exact_div(g)
            if d.lc < 0:
                n, d = -n, -d
            self.num = n
            self.den = d

    @staticmethod
    def _lift(value):
        """Coerce int/Fraction/IntPoly/RatFunc into IntPoly or a pair."""
        if isinstance(value, RatFunc):
            return (value.num, value.den)
        if isinstance(value, IntPoly):
            return value
        if isinstance(value, int):
            return IntPoly.const(value)
        if isinstance(value, Fraction):
            return (IntPoly.const(value.numerator), IntPoly.const(value.denominator))
        raise TypeError(f"cannot interpret {value!r} as an element of Q(t)")

    # -- queries -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __bool__(self) -> bool:
        return not self.num.is_zero

    @property
    def is_constant(self) -> bool:
        return self.num.is_constant and self.den.is_constant

    def as_fraction(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"{self} is not a constant")
        return Fraction(self.num.lc, self.den.lc if self.den.coeffs else 1)

    def as_poly(self) -> IntPoly:
        """The underlying Z[t] element; raises when not integral."""
        if self.den != IntPoly.const(1):
            raise ValueError(f"{self} is not in Z[t]")
        return self.num

    # -- field operations ------------------------------------------------

    @classmethod
    def _coerce(cls, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        return cls(other)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return RatFunc(self.num * other.den - other.num * self.den, self.den * other.den)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by zero in Q(t)")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def inv(self) -> "RatFunc":
        return 1 / self

    def __pow__(self, e: int):
        if e < 0:
            return (1 / self) ** (-e)
        result = RatFunc(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    # -- the degree-as-height map ----------------------------------------

    def map_degree(self) -> int:
        """Degree of the induced morphism to the projective line:
        max(deg num, deg den) in canonical form."""
        if self.is_zero:
            raise ValueError("the zero function has no map degree")
        return max(self.num.degree, self.den.degree)

    # -- evaluation ---------------------------------------------------------

    def __call__(self, t0) -> Fraction | None:
        """Exact value at t0, or None at a pole."""
        d = self.den(t0)
        if d == 0:
            return None
        return self.num(t0) / d

    # -- square testing ------------------------------------------------------

    def sqrt(self) -> "RatFunc | None":
        """A square root in Q(t) when one exists (numerator lc chosen
        positive), else None."""
        if self.is_zero:
            return RatFunc(0)
        try:
            cn, mn = rational_square_decompose(self.num)
            cd, md = rational_square_decompose(self.den)
        except ValueError:
            return None
        ratio = is_square_rat(cn / cd)
        if ratio is None:
            return None
        root = RatFunc(ratio) * RatFunc(mn, md)
        if root.num.lc < 0:
            root = -root
        return root

    def is_square(self) -> bool:
        return self.sqrt() is not None

    # -- printing ---------------------------------------------------------------

    def __str__(self) -> str:
        if self.den == IntPoly.const(1):
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"RatFunc({self})"
