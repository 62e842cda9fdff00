"""Injectivity criteria for the specialization homomorphism.

Four checks on a rational number t0:

- "A": split model y^2 = (x-e1)(x-e2)(x-e3); every nonconstant
  squarefree divisor of each (e_j-e_i)(e_k-e_i) must be non-square at t0.
  Passing certifies injectivity.
- "Aprime": same with the single triple product
  (e1-e2)(e2-e3)(e3-e1); strictly stronger than "A".
- "scriptA": model y^2 = x^3 + A x^2 + B x with exactly one rational
  2-torsion point; divisors of B and of A^2 - 4B.  Passing certifies
  injectivity.
- "A1B": general model; divisors of the discriminant plus
  irreducibility of the specialized cubic.  Diagnostic only - passing
  does NOT certify injectivity.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional

from .curves import Curve, _q_cubic_roots
from .factorize import factor
from .intmath import is_square_rat
from .intpoly import IntPoly, poly_sqrt

__all__ = [
    "CONDITION_NAMES",
    "DivisorCheck",
    "ConditionReport",
    "SearchBudget",
    "BudgetExhausted",
    "enumerate_divisors",
    "check_condition",
    "condition_split",
    "condition_split_strong",
    "condition_one_torsion",
    "condition_discriminant_diagnostic",
    "lemma_nonsingular_checks",
    "find_t0",
    "t0_candidates",
    "certificate_to_json",
    "replay_certificate",
]

CONDITION_NAMES = ("A", "Aprime", "scriptA", "A1B")


@dataclass(frozen=True)
class DivisorCheck:
    """One enumerated divisor, its exact value at t0, and its verdict."""

    target: str
    divisor: IntPoly
    value: Fraction
    square_root: Optional[Fraction]  # None means "not a square" (good)

    @property
    def is_square(self) -> bool:
        return self.square_root is not None


@dataclass
class ConditionReport:
    """Outcome of one criterion at one t0; doubles as the certificate."""

    condition: str
    curve: Curve
    t0: Fraction
    passed: bool
    certifying: bool
    discriminant_value: Fraction
    checks: list[DivisorCheck] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    subresults: dict = field(default_factory=dict)

    @property
    def witnesses(self) -> list[DivisorCheck]:
        return [c for c in self.checks if c.is_square]

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        out = f"condition {self.condition} at t0={self.t0}: {verdict}"
        if not self.passed and self.witnesses:
            w = self.witnesses[0]
            out += f" (witness h={w.divisor}, h(t0)={w.value}=({w.square_root})^2)"
        return out


class BudgetExhausted(RuntimeError):
    """Search budget ran out; not a disproof, passers are merely further out."""


@dataclass(frozen=True)
class SearchBudget:
    int_bound: int = 10_000
    rat_height: int = 100


# ---------------------------------------------------------------------------
# Divisor enumeration.
# ---------------------------------------------------------------------------


def enumerate_divisors(target: IntPoly) -> list[IntPoly]:
    """All nonconstant squarefree divisors of target, up to square-class
    equivalence, both signs included.

    Products eps * prod(S) * prod(T): eps a sign, S any subset of the
    distinct content primes, T a nonempty subset of the distinct
    primitive irreducible factors.
    """
    if target.is_zero:
        raise ValueError("zero target")
    fac = factor(target)
    primes = [q for q, _ in fac.content_primes]
    polys = [g for g, _ in fac.poly_factors]
    out: list[IntPoly] = []
    for r in range(1, len(polys) + 1):
        for poly_subset in itertools.combinations(polys, r):
            base = IntPoly.const(1)
            for g in poly_subset:
                base = base * g
            for s in range(len(primes) + 1):
                for prime_subset in itertools.combinations(primes, s):
                    c = 1
                    for q in prime_subset:
                        c *= q
                    h = c * base
                    out.append(h)
                    out.append(-h)
    out.sort(key=lambda h: (h.degree, abs(h.lc), h.lc < 0, h.coeffs))
    return out


# ---------------------------------------------------------------------------
# Target preparation per condition.
# ---------------------------------------------------------------------------


def _split_targets(curve: Curve) -> list[tuple[str, IntPoly]]:
    e1, e2, e3 = curve.split_root_polys()
    return [
        ("(e2-e1)(e3-e1)", (e2 - e1) * (e3 - e1)),
        ("(e1-e2)(e3-e2)", (e1 - e2) * (e3 - e2)),
        ("(e1-e3)(e2-e3)", (e1 - e3) * (e2 - e3)),
    ]


def _split_strong_targets(curve: Curve) -> list[tuple[str, IntPoly]]:
    e1, e2, e3 = curve.split_root_polys()
    return [("(e1-e2)(e2-e3)(e3-e1)", (e1 - e2) * (e2 - e3) * (e3 - e1))]


def _one_torsion_targets(curve: Curve) -> list[tuple[str, IntPoly]]:
    A, B, C = curve.coeff_polys()
    if not C.is_zero:
        raise ValueError("model must be y^2 = x^3 + A x^2 + B x (C = 0)")
    if B.is_zero:
        raise ValueError("model must have B != 0")
    quad_disc = A * A - 4 * B
    if poly_sqrt(quad_disc) is not None:
        raise ValueError(
            "A^2 - 4B is a square in Z[t]: the cubic splits; use condition A"
        )
    return [("B", B), ("A^2-4B", quad_disc)]


def _discriminant_targets(curve: Curve) -> list[tuple[str, IntPoly]]:
    return [("D", curve.discriminant_poly())]


_TARGET_BUILDERS = {
    "A": _split_targets,
    "Aprime": _split_strong_targets,
    "scriptA": _one_torsion_targets,
    "A1B": _discriminant_targets,
}


def _prepare(curve: Curve, condition: str) -> list[tuple[str, list[IntPoly]]]:
    builder = _TARGET_BUILDERS[condition]
    prepared = []
    for label, target in builder(curve):
        if target.is_zero:
            raise ValueError(f"degenerate target {label} = 0")
        divisors = [] if target.is_constant else enumerate_divisors(target)
        prepared.append((label, divisors))
    return prepared


def _evaluate(
    curve: Curve,
    condition: str,
    prepared: list[tuple[str, list[IntPoly]]],
    t0: Fraction,
    stop_early: bool = False,
) -> ConditionReport:
    D = curve.discriminant_poly()
    Dv = D(t0)
    certifying = condition in ("A", "Aprime", "scriptA")
    report = ConditionReport(
        condition=condition,
        curve=curve,
        t0=t0,
        passed=Dv != 0,
        certifying=certifying,
        discriminant_value=Dv,
    )
    if Dv == 0:
        report.notes.append("discriminant vanishes at t0: specialization is singular")
        return report
    for label, divisors in prepared:
        for h in divisors:
            value = h(t0)
            root = is_square_rat(value)
            report.checks.append(DivisorCheck(label, h, value, root))
            if root is not None:
                report.passed = False
                if stop_early:
                    return report
    if condition == "A1B":
        report.certifying = False
        report.notes.append(
            "diagnostic only: passing is NOT an injectivity certificate"
        )
        A, B, C = curve.coeff_polys()
        spec_roots = _q_cubic_roots(A(t0), B(t0), C(t0))
        a1_passed = report.passed
        b_passed = len(spec_roots) == 0
        report.subresults["A1"] = a1_passed
        report.subresults["B"] = b_passed
        report.passed = a1_passed and b_passed
        if not b_passed:
            report.notes.append(
                f"specialized cubic has a rational root {spec_roots[0]}"
            )
    return report


def check_condition(curve: Curve, condition: str, t0: Fraction) -> ConditionReport:
    """Run one of the four criteria at t0 and return the full report."""
    if condition not in CONDITION_NAMES:
        raise ValueError(f"unknown condition {condition!r}; choose from {CONDITION_NAMES}")
    prepared = _prepare(curve, condition)
    return _evaluate(curve, condition, prepared, Fraction(t0))


def condition_split(curve: Curve, t0) -> ConditionReport:
    """Criterion for fully split curves (certifying)."""
    return check_condition(curve, "A", t0)


def condition_split_strong(curve: Curve, t0) -> ConditionReport:
    """Stronger single-product variant on split curves (certifying)."""
    return check_condition(curve, "Aprime", t0)


def condition_one_torsion(curve: Curve, t0) -> ConditionReport:
    """Criterion for curves with exactly one rational 2-torsion point
    (certifying)."""
    return check_condition(curve, "scriptA", t0)


def condition_discriminant_diagnostic(curve: Curve, t0) -> ConditionReport:
    """Discriminant-divisor and irreducibility diagnostic (non-certifying)."""
    return check_condition(curve, "A1B", t0)


def lemma_nonsingular_checks(curve: Curve, t0) -> tuple[bool, bool]:
    """(D(t0) != 0, specialized cubic has exactly one rational root)."""
    t0 = Fraction(t0)
    A, B, C = curve.coeff_polys()
    nonsingular = curve.discriminant_poly()(t0) != 0
    roots = _q_cubic_roots(A(t0), B(t0), C(t0))
    return nonsingular, len(roots) == 1


# ---------------------------------------------------------------------------
# Search for a certified t0.
# ---------------------------------------------------------------------------


def t0_candidates(budget: SearchBudget = SearchBudget()) -> Iterator[Fraction]:
    """Deterministic enumeration: 0, 1, -1, 2, -2, ... up to the integer
    bound, then non-integer rationals by height max(|num|, den), each
    height scanned by increasing denominator with + before -."""
    yield Fraction(0)
    for n in range(1, budget.int_bound + 1):
        yield Fraction(n)
        yield Fraction(-n)
    for h in range(2, budget.rat_height + 1):
        for d in range(2, h + 1):
            for n in range(1, h + 1):
                if max(n, d) != h or math.gcd(n, d) != 1:
                    continue
                yield Fraction(n, d)
                yield Fraction(-n, d)


def find_t0(
    curve: Curve,
    condition: str,
    budget: SearchBudget = SearchBudget(),
) -> ConditionReport:
    """First t0 in the documented enumeration order passing the given
    criterion; raises BudgetExhausted when none is found in budget."""
    if condition not in CONDITION_NAMES:
        raise ValueError(f"unknown condition {condition!r}")
    prepared = _prepare(curve, condition)
    for t0 in t0_candidates(budget):
        report = _evaluate(curve, condition, prepared, t0, stop_early=True)
        if condition == "A1B":
            # stop_early skips the (B) subcheck; redo fully on a hit
            if report.passed:
                report = _evaluate(curve, condition, prepared, t0)
        if report.passed:
            return _evaluate(curve, condition, prepared, t0)
    raise BudgetExhausted(
        f"no t0 passing condition {condition} within {budget} (not a disproof)"
    )


# ---------------------------------------------------------------------------
# JSON certificates and replay.
# ---------------------------------------------------------------------------

_SCHEMA = "ellspec-certificate/1"


def _curve_to_json(curve: Curve) -> dict:
    A, B, C = curve.coeff_polys()
    out = {"A": str(A), "B": str(B), "C": str(C)}
    if curve.split_roots is not None:
        out["split_roots"] = [str(e) for e in curve.split_root_polys()]
    return out


def certificate_to_json(report: ConditionReport) -> str:
    """Serialize a condition report as a replayable JSON document."""
    doc = {
        "schema": _SCHEMA,
        "condition": report.condition,
        "curve": _curve_to_json(report.curve),
        "t0": str(report.t0),
        "passed": report.passed,
        "certifying": report.certifying and report.passed,
        "discriminant_value": str(report.discriminant_value),
        "checks": [
            {
                "target": c.target,
                "divisor": str(c.divisor),
                "value": str(c.value),
                "square": c.is_square,
                "square_root": None if c.square_root is None else str(c.square_root),
            }
            for c in report.checks
        ],
        "notes": report.notes,
        "subresults": report.subresults,
    }
    return json.dumps(doc, indent=2, sort_keys=True)


def replay_certificate(doc: str | dict) -> tuple[bool, ConditionReport]:
    """Re-verify a serialized certificate from scratch.

    Re-parses the curve, re-enumerates every divisor and recomputes every
    evaluation; returns (matches, fresh_report) where matches is True iff
    the stored verdicts agree with the recomputation.
    """
    from .intmath import parse_rational
    from .parsing import parse_poly

    if isinstance(doc, str):
        doc = json.loads(doc)
    if doc.get("schema") != _SCHEMA:
        raise ValueError(f"unsupported certificate schema {doc.get('schema')!r}")
    cdoc = doc["curve"]
    if "split_roots" in cdoc:
        roots = [parse_poly(s) for s in cdoc["split_roots"]]
        curve = Curve.from_roots(*roots)
    else:
        curve = Curve(
            parse_poly(cdoc["A"]), parse_poly(cdoc["B"]), parse_poly(cdoc["C"])
        )
    t0 = parse_rational(doc["t0"])
    fresh = check_condition(curve, doc["condition"], t0)
    stored = {
        (c["target"], c["divisor"], c["value"], bool(c["square"]))
        for c in doc["checks"]
    }
    recomputed = {
        (c.target, str(c.divisor), str(c.value), c.is_square) for c in fresh.checks
    }
    matches = (
        stored == recomputed
        and bool(doc["passed"]) == fresh.passed
        and str(fresh.discriminant_value) == doc["discriminant_value"]
    )
    return matches, fresh
