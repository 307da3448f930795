"""Simple, commensurable, dual and strongly dual exponential polynomials.

All ray and ratio tests are exact: two frequencies lie on the same ray iff
their quotient is a positive real element of the scalar field.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key, reduce
from typing import Optional

from .errors import ConstantTermMissing, NotASolution, NotSimple, NotTranscendental
from .scalar import QScalar, compare_real, is_positive_real
from .symcore import ExpPoly, Poly, derivative_multipliers, normalize

__all__ = [
    "RayInfo",
    "DualityReport",
    "is_simple",
    "common_factor",
    "are_dual",
    "are_strongly_dual",
    "duality_structure_report",
]


@dataclass(frozen=True)
class RayInfo:
    """Ray ``arg w = theta`` carrying all nonzero frequencies.

    ``direction`` is an exact frequency on the ray (the first band); the
    float angle is informational only.
    """

    direction: QScalar
    theta_float: float


def _frequencies(f: ExpPoly) -> list[QScalar]:
    if f.is_polynomial():
        raise NotTranscendental("%s is not transcendental" % f)
    return normalize(f).frequencies


def _same_ray(ws: list[QScalar], d: QScalar) -> bool:
    return all(is_positive_real(w / d) for w in ws)


def is_simple(f: ExpPoly) -> Optional[RayInfo]:
    ws = _frequencies(f)
    d = ws[0]
    if not _same_ray(ws, d):
        return None
    return RayInfo(d, cmath.phase(complex(d)) % (2 * math.pi))


def _common_factor_of(ws: list[QScalar]) -> Optional[QScalar]:
    """Largest w with every ``ws[j]/w`` a positive integer, or None."""
    base = ws[0]
    ratios = []
    for w in ws:
        r = w / base
        if not r.is_rational() or r.as_fraction() <= 0:
            return None
        ratios.append(r.as_fraction())
    num = reduce(math.gcd, (r.numerator for r in ratios))
    den = reduce(lambda a, b: a * b // math.gcd(a, b), (r.denominator for r in ratios))
    return base * Fraction(num, den)


def common_factor(f: ExpPoly) -> Optional[QScalar]:
    """Canonical (largest) common factor of the frequencies of a simple f."""
    if is_simple(f) is None:
        raise NotSimple("%s is not a simple exponential polynomial" % f)
    return _common_factor_of(_frequencies(f))


def are_dual(f: ExpPoly, g: ExpPoly) -> bool:
    wf, wg = _frequencies(f), _frequencies(g)
    if f.order != g.order:
        return False
    if is_simple(f) is None or is_simple(g) is None:
        return False
    return _same_ray([-v for v in wg], wf[0])


def are_strongly_dual(f: ExpPoly, g: ExpPoly) -> bool:
    """Dual, sharing a common factor ``w`` (for f) and ``-w`` (for g), with
    every ``w_j + lambda_i`` on one closed ray through the origin."""
    if not are_dual(f, g):
        return False
    wf = _frequencies(f)
    lam = _frequencies(g)
    w = _common_factor_of(wf + [-v for v in lam])
    if w is None:
        return False
    a = [(x / w).as_fraction() for x in wf]
    b = [(-x / w).as_fraction() for x in lam]
    return min(a) >= max(b) or max(a) <= min(b)


@dataclass
class DualityReport:
    """Structural checks for a solution f of ``f'' + A f' + B f = 0``.

    ``w_list`` holds the frequencies of f and ``lambda_list`` the negated
    frequencies of A, both sorted increasingly along the ray of f.  The
    Borel classification maps each pair ``(j, i)`` (1-based) to the cases
    it satisfies: ``"I"`` when ``w_j - lambda_i`` equals some ``w_l`` with
    ``w_0 = 0``, ``"II"`` when it equals another ``w_s - lambda_t``.
    """

    q: int
    w_list: list
    lambda_list: list
    c: QScalar
    ordering_ok: bool = False
    b_relation_ok: bool = False
    top_identity_ok: bool = False
    fm_equation_ok: bool = False
    borel_classification: dict = field(default_factory=dict)

    @property
    def borel_ok(self) -> bool:
        return bool(self.borel_classification) and all(self.borel_classification.values())

    @property
    def all_ok(self) -> bool:
        return (self.ordering_ok and self.b_relation_ok and self.top_identity_ok
                and self.fm_equation_ok and self.borel_ok)

    def summary(self) -> dict:
        return {
            "q": self.q,
            "w": [str(w) for w in self.w_list],
            "lambda": [str(v) for v in self.lambda_list],
            "c": str(self.c),
            "ordering_ok": self.ordering_ok,
            "b_relation_ok": self.b_relation_ok,
            "top_identity_ok": self.top_identity_ok,
            "fm_equation_ok": self.fm_equation_ok,
            "borel_ok": self.borel_ok,
            "borel_classification": {
                "%d,%d" % k: list(v) for k, v in sorted(self.borel_classification.items())
            },
        }


def _sort_along(values: list[QScalar], d: QScalar) -> tuple[list[QScalar], bool]:
    """Sort by the real coordinate ``v/d``; flag whether all are on the ray."""
    on_ray = all(is_positive_real(v / d) for v in values)
    if not on_ray:
        return sorted(values, key=lambda v: abs(complex(v))), False
    key = cmp_to_key(lambda x, y: compare_real(x / d, y / d))
    return sorted(values, key=key), True


def duality_structure_report(A: ExpPoly, B: ExpPoly, f: ExpPoly) -> DualityReport:
    from .ode import LinearODE, residual

    eq = LinearODE.second_order(A, B)
    if not residual(eq, f).is_zero():
        raise NotASolution("%s does not solve %s" % (f, eq))
    if f.is_polynomial() or A.is_polynomial():
        raise NotTranscendental("f and A must both be transcendental")
    fv, av = normalize(f), normalize(A)
    if not fv.f0.is_constant() or fv.f0.is_zero():
        raise ConstantTermMissing("F0 = %s is not a nonzero constant" % fv.f0)
    q = fv.q
    c = fv.f0.as_poly().coeff(0)
    d = fv.frequencies[0]

    ws, w_ok = _sort_along(fv.frequencies, d)
    lams, l_ok = _sort_along([-v for v in av.frequencies], d)
    report = DualityReport(q, ws, lams, c)
    rel = lambda v: v / d  # noqa: E731  real coordinate along the ray

    ordering_ok = w_ok and l_ok and av.q == q and lams[-1] == ws[0]
    report.ordering_ok = ordering_ok

    gh = dict(zip(fv.frequencies, derivative_multipliers(fv)))
    G1 = gh[ws[0]][0]
    Ak = av.band(-lams[-1])
    report.b_relation_ok = (-(Ak * G1) - B * c).is_zero()

    wm = ws[-1]
    Fm = fv.band(wm)
    Gm, Hm = gh[wm]
    A0 = av.f0
    report.top_identity_ok = (A0 * Gm + B * Fm + Hm).is_zero()

    zq1 = ExpPoly.from_poly(Poly.monomial(q - 1, wm * q)) if q >= 1 else ExpPoly()
    zq2 = ExpPoly.from_poly(Poly.monomial(q - 2, wm * q * (q - 1))) if q >= 2 else ExpPoly()
    zq22 = ExpPoly.from_poly(Poly.monomial(2 * (q - 1), wm * wm * q * q))
    P = zq1 * 2 + A0
    Q = zq1 * A0 + zq2 + zq22 + B
    report.fm_equation_ok = (Fm.derivative().derivative() + P * Fm.derivative() + Q * Fm).is_zero()

    if ordering_ok:
        wr = [rel(w) for w in ws]
        lr = [rel(v) for v in lams]
        targets_I = {QScalar(0)} | set(wr[:-1])
        cls = {}
        for j, wj in enumerate(wr):
            for i, li in enumerate(lr):
                x = wj - li
                tags = []
                if x in targets_I:
                    tags.append("I")
                if any(x == ws_ - lt for s, ws_ in enumerate(wr) if s != j
                       for t, lt in enumerate(lr) if t != i):
                    tags.append("II")
                cls[(j + 1, i + 1)] = tuple(tags)
        report.borel_classification = cls
    return report
