"""The Mestre quadratic-twist family.

E_g: y^2 = x^3 + a*g(t)^2*x + b*g(t)^3, the twist of y^2 = x^3 + ax + b
by the degree-14 squarefree polynomial

    g(t) = -ab*(t^2+1)*(b^2*(t^4+t^2+1)^3 + a^3*t^4*(t^2+1)^2),

carrying two independent points P, Q of morphism degree 4.  The degree
of x(T)/g as a map to the projective line is twice the canonical height
of T, which makes the free-generator argument for P, Q a finite exact
computation once a t0 with injective specialization and a specialized
rank are on the table.  The specialized rank over Q is always an
external input with provenance; it is never computed here.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .conditions import (
    ConditionReport,
    certificate_to_json,
    check_condition,
)
from .curves import Curve, O, Point
from .factorize import rational_roots
from .intmath import factor_int
from .intpoly import IntPoly, squarefree_decompose
from .ratfunc import RatFunc

__all__ = [
    "MestreInstance",
    "build",
    "twist_polynomial",
    "morphism_degree",
    "pairing",
    "degree_obstruction",
    "small_degree_exclusion",
    "injectivity_report",
    "GeneratorConclusion",
    "generator_certificate",
]

_T = IntPoly.monomial(1, 1)
_T2P1 = _T * _T + 1  # t^2 + 1
_T4T21 = _T**4 + _T**2 + 1  # t^4 + t^2 + 1


def _clearing_scale(a: Fraction, b: Fraction) -> int:
    """Smallest positive u with a*u^4 and b*u^6 integral (the standard
    (u^4, u^6) rescaling of a short Weierstrass model)."""
    u = 1
    dens = [(a.denominator, 4), (b.denominator, 6)]
    prime_exp: dict[int, int] = {}
    for den, w in dens:
        if den == 1:
            continue
        _, fac = factor_int(den)
        for p, e in fac.items():
            k = -(-e // w)  # ceil(e / w)
            prime_exp[p] = max(prime_exp.get(p, 0), k)
    for p, k in prime_exp.items():
        u *= p**k
    return u


def twist_polynomial(a: int, b: int) -> IntPoly:
    """The degree-14 twisting polynomial g for integer parameters."""
    return -a * b * _T2P1 * (b * b * _T4T21**3 + a**3 * _T**4 * _T2P1**2)


@dataclass(frozen=True)
class MestreInstance:
    """One member of the twist family, with its two canonical points."""

    a: int
    b: int
    scale: int  # u applied to the raw rational (a, b) input
    g: IntPoly
    curve: Curve
    P: Point
    Q: Point


def build(a, b) -> MestreInstance:
    """Construct the family member for rational a, b with ab != 0.

    Rational inputs are cleared to integers by the (u^4, u^6) model
    rescaling before any Z[t] work; the scale is recorded.
    """
    a = Fraction(a)
    b = Fraction(b)
    if a == 0 or b == 0:
        raise ValueError("the family requires ab != 0")
    u = _clearing_scale(a, b)
    ai = int(a * u**4)
    bi = int(b * u**6)

    g = twist_polynomial(ai, bi)
    unit, _, parts = squarefree_decompose(g)
    if g.degree != 14 or any(m > 1 for _, m in parts):
        raise AssertionError("twist polynomial must be squarefree of degree 14")

    rg = RatFunc(g)
    curve = Curve(RatFunc(0), ai * rg * rg, bi * rg * rg * rg)

    ratio = Fraction(-bi, ai) * RatFunc(_T4T21, _T2P1)
    P = Point(ratio * rg, rg * rg / (ai * ai * _T2P1 * _T2P1))
    Q = Point(
        ratio / RatFunc(_T * _T) * rg,
        rg * rg / RatFunc(ai * ai * _T**3 * _T2P1 * _T2P1),
    )
    for point in (P, Q):
        if not curve.contains(point):
            raise AssertionError("canonical point fails the curve equation")
    return MestreInstance(a=ai, b=bi, scale=u, g=g, curve=curve, P=P, Q=Q)


def morphism_degree(instance: MestreInstance, T: Point) -> int:
    """deg of x(T)/g as a morphism to the projective line; 0 for torsion."""
    if T.is_infinity:
        return 0
    instance.curve._require(T)
    x = RatFunc._coerce(T.x)
    ratio = x / RatFunc(instance.g)
    if ratio.is_zero:
        return 0
    return ratio.map_degree()


def pairing(instance: MestreInstance, T: Point, S: Point) -> Fraction:
    """The exact bilinear pairing (half the parallelogram defect of the
    morphism degrees)."""
    dTS = morphism_degree(instance, instance.curve.add(T, S))
    dT = morphism_degree(instance, T)
    dS = morphism_degree(instance, S)
    return Fraction(dTS - dT - dS, 2)


def degree_obstruction(g: IntPoly) -> bool:
    """Whether points of morphism degree 1 or 2 are impossible: any such
    point forces w(t)*beta(t)*g(t) to be a square with deg(w*beta) <= 8,
    which cannot absorb a squarefree g of degree 14."""
    if g.is_zero or g.degree != 14:
        return False
    _, _, parts = squarefree_decompose(g)
    return all(m == 1 for _, m in parts)


def small_degree_exclusion(instance: MestreInstance) -> bool:
    """Verify the obstruction for this instance's twist polynomial."""
    return degree_obstruction(instance.g)


# ---------------------------------------------------------------------------
# Injectivity pathway for E_g over Q(t).
# ---------------------------------------------------------------------------


def injectivity_report(instance: MestreInstance, t0) -> ConditionReport:
    """Best applicable criterion at t0 for this instance.

    E_g has a rational 2-torsion point exactly when x^3 + ax + b has a
    rational root r (giving e1 = r*g).  With an integer root the model is
    shifted to y^2 = x^3 + 3rg x^2 + (3r^2+a)g^2 x and the certifying
    one-torsion (or split) criterion applies; otherwise only the
    non-certifying discriminant diagnostic is available.
    """
    a, b, g = instance.a, instance.b, instance.g
    cubic = IntPoly([b, a, 0, 1])
    roots = [r for r in rational_roots(cubic) if r.denominator == 1]
    if not roots:
        return check_condition(instance.curve, "A1B", t0)
    r = int(roots[0])
    A = 3 * r * g
    B = (3 * r * r + a) * g * g
    quad_disc_const = -(3 * r * r + 4 * a)  # A^2 - 4B = quad_disc_const * g^2
    root_const = math.isqrt(quad_disc_const) if quad_disc_const >= 0 else None
    if root_const is not None and root_const * root_const == quad_disc_const:
        # fully split shifted model
        e1 = IntPoly()
        e2 = ((-3 * r + root_const) * g).exact_div(IntPoly.const(2))
        e3 = ((-3 * r - root_const) * g).exact_div(IntPoly.const(2))
        split = Curve.from_roots(RatFunc(e1), RatFunc(e2), RatFunc(e3))
        return check_condition(split, "A", t0)
    shifted = Curve(RatFunc(A), RatFunc(B), RatFunc(0))
    return check_condition(shifted, "scriptA", t0)


@dataclass
class GeneratorConclusion:
    """Outcome record for the free-generator argument."""

    a: int
    b: int
    t0: Fraction
    injectivity_mode: str  # "certified" | "declared" | "none"
    injectivity_report: Optional[ConditionReport]
    injectivity_source: Optional[str]
    declared_rank: int
    rank_source: str
    conclusion: str
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> str:
        doc = {
            "a": self.a,
            "b": self.b,
            "t0": str(self.t0),
            "injectivity_mode": self.injectivity_mode,
            "injectivity_source": self.injectivity_source,
            "declared_rank": self.declared_rank,
            "rank_source": self.rank_source,
            "conclusion": self.conclusion,
            "notes": self.notes,
        }
        if self.injectivity_report is not None:
            doc["injectivity_certificate"] = json.loads(
                certificate_to_json(self.injectivity_report)
            )
        return json.dumps(doc, indent=2, sort_keys=True)


def generator_certificate(
    instance: MestreInstance,
    t0,
    specialized_rank: int,
    rank_source: str,
    injectivity_source: str | None = None,
) -> GeneratorConclusion:
    """Assemble the free-generator conclusion for this instance.

    specialized_rank is a declared external input (with provenance) for
    the rank of the specialized curve over Q.  Injectivity at t0 is
    either certified here (when a certifying criterion applies and
    passes) or accepted as a declared external assertion.
    """
    t0 = Fraction(t0)
    report = injectivity_report(instance, t0)
    notes: list[str] = []
    if report.certifying and report.passed:
        mode = "certified"
    elif injectivity_source is not None:
        mode = "declared"
        notes.append(
            f"injectivity at t0={t0} accepted as external input: {injectivity_source}"
        )
        if report.passed:
            notes.append(
                f"non-certifying diagnostic ({report.condition}) also passes at t0={t0}"
            )
    else:
        mode = "none"

    if report.certifying:
        label = "passes" if report.passed else "fails"
        notes.append(f"criterion {report.condition} {label} at t0={t0} (cross-check)")

    if mode in ("certified", "declared") and specialized_rank == 2:
        conclusion = (
            "rank over Q(t) equals 2 with free generators P and Q "
            "(injective specialization plus specialized rank 2)"
        )
    else:
        conclusion = (
            "rank over Q(t) is at least 2 (independent points P, Q); "
            f"declared specialized rank {specialized_rank} gives rank <= {specialized_rank} "
            "only if the specialization is injective"
        )
        if specialized_rank != 2:
            notes.append("free-generator conclusion requires specialized rank exactly 2")
        if mode == "none":
            notes.append("no injectivity certificate or declaration available at t0")

    return GeneratorConclusion(
        a=instance.a,
        b=instance.b,
        t0=t0,
        injectivity_mode=mode,
        injectivity_report=report,
        injectivity_source=injectivity_source,
        declared_rank=specialized_rank,
        rank_source=rank_source,
        conclusion=conclusion,
        notes=notes,
    )
