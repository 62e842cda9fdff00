"""The specialization homomorphism: evaluate a curve over Q(t) and its
points at a rational t0 (poles map to the neutral element), plus an
exhaustive bounded relation search used to exhibit non-injectivity.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .curves import Curve, O, Point
from .ratfunc import RatFunc

__all__ = [
    "specialize_curve",
    "specialize_point",
    "homomorphism_check",
    "relation_search",
]


def specialize_curve(curve: Curve, t0) -> Curve:
    """Evaluate the model at t0; requires a nonsingular specialization."""
    t0 = Fraction(t0)
    values = [RatFunc._coerce(v)(t0) for v in (curve.A, curve.B, curve.C)]
    if any(v is None for v in values):
        raise ValueError(f"a coefficient has a pole at t0={t0}")
    disc = RatFunc._coerce(curve.disc_cubic)(t0)
    if not disc:
        raise ValueError(f"discriminant vanishes at t0={t0}: specialization singular")
    return Curve(*values)


def specialize_point(curve: Curve, P: Point, t0) -> Point:
    """sigma_{t0}(P): coordinate evaluation, with poles mapping to O."""
    t0 = Fraction(t0)
    target = specialize_curve(curve, t0)
    if P.is_infinity:
        return O
    curve._require(P)
    x = RatFunc._coerce(P.x)(t0)
    y = RatFunc._coerce(P.y)(t0)
    if x is None or y is None:
        return O
    image = Point(x, y)
    target._require(image)
    return image


def homomorphism_check(curve: Curve, P: Point, Q: Point, t0) -> bool:
    """sigma(P + Q) == sigma(P) + sigma(Q), both sides computed independently."""
    t0 = Fraction(t0)
    target = specialize_curve(curve, t0)
    lhs = specialize_point(curve, curve.add(P, Q), t0)
    rhs = target.add(specialize_point(curve, P, t0), specialize_point(curve, Q, t0))
    return lhs == rhs


def relation_search(
    curve: Curve, points: list[Point], bound: int
) -> tuple[int, ...] | None:
    """Smallest nonzero integer relation sum(m_i * P_i) = O with
    |m_i| <= bound.

    Minimal by max-norm; ties broken by scanning each coordinate in the
    order 0, 1, -1, 2, -2, ...  Exhaustive over the integer box;
    exponential in len(points), which stays tiny here.  An empty result
    means no relation in the box, not independence.
    """
    for P in points:
        curve._require(P)
    multiples: list[dict[int, Point]] = []
    for P in points:
        table = {0: O}
        acc = O
        neg_acc = O
        for m in range(1, bound + 1):
            acc = curve.add(acc, P)
            table[m] = acc
            neg_acc = curve.add(neg_acc, curve.neg(P))
            table[-m] = neg_acc
        multiples.append(table)

    k = len(points)
    for norm in range(1, bound + 1):
        coeff_order = [0]
        for m in range(1, norm + 1):
            coeff_order.extend((m, -m))
        for combo in itertools.product(coeff_order, repeat=k):
            if max(abs(m) for m in combo) != norm:
                continue
            total = O
            for table, m in zip(multiples, combo):
                total = curve.add(total, table[m])
            if total == O:
                return combo
    return None
