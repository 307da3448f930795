"""Frequency sets, convex hulls and leading-order Nevanlinna asymptotics.

For an exponential polynomial of order q the characteristic, proximity and
zero-counting functions all grow like ``C * r**q / (2*pi)``, where ``C`` is
the circumference of the convex hull of a set of conjugated frequencies.
Only the leading coefficient is modelled.

The hull is computed in floating point from exactly derived points; a
segment counts as a degenerate polygon traversed twice, so its
circumference is twice its length.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import NotTranscendental, OrderMismatch
from .scalar import QScalar, scalar_sort_key
from .symcore import ExpPoly, normalize

__all__ = [
    "FrequencySet",
    "Hull",
    "GrowthAsymptotic",
    "frequency_set",
    "hull",
    "characteristic_asymptotic",
    "proximity_quotient_asymptotic",
    "zero_counting_asymptotic",
]


@dataclass(frozen=True)
class FrequencySet:
    """Conjugated band frequencies; ``includes_zero`` marks a nonzero F0."""

    points: frozenset
    includes_zero: bool

    def with_zero(self) -> frozenset:
        return self.points | {QScalar(0)}

    def as_set(self) -> frozenset:
        return self.with_zero() if self.includes_zero else self.points

    def sorted_points(self) -> list[QScalar]:
        return sorted(self.points, key=scalar_sort_key)


@dataclass(frozen=True)
class Hull:
    vertices: tuple  # complex, counterclockwise
    circumference: float


@dataclass(frozen=True)
class GrowthAsymptotic:
    """``value(r) = leading * r**q + o(r**q)``.

    For polynomial input of degree d the growth is ``d * log r`` instead;
    then ``q = 0``, ``leading = 0`` and ``degenerate_log = d``.
    """

    q: int
    leading: float
    degenerate_log: Optional[int] = None
    points: tuple = field(default=(), compare=False)

    @property
    def pi_multiple(self) -> float:
        """``leading * pi``, handy when the answer is a rational over pi."""
        return self.leading * math.pi

    def describe(self, name: str = "T(r,f)") -> str:
        if self.degenerate_log is not None:
            return "%s ~ %d log r" % (name, self.degenerate_log)
        frac = _as_pi_fraction(self.pi_multiple)
        rq = "r" if self.q == 1 else "r^%d" % self.q
        if frac == "0":
            return "%s = o(%s)" % (name, rq)
        if frac is not None:
            return "%s ~ (%s/pi) %s" % (name, frac, rq)
        return "%s ~ %.10g %s" % (name, self.leading, rq)


def _as_pi_fraction(x: float, max_den: int = 64, tol: float = 1e-9) -> Optional[str]:
    from fractions import Fraction
    fr = Fraction(x).limit_denominator(max_den)
    if abs(float(fr) - x) > tol:
        return None
    return str(fr)


def frequency_set(f: ExpPoly) -> FrequencySet:
    view = normalize(f)
    return FrequencySet(frozenset(w.conjugate() for w in view.frequencies), not view.f0.is_zero())


def _cross(o: complex, a: complex, b: complex) -> float:
    return (a.real - o.real) * (b.imag - o.imag) - (a.imag - o.imag) * (b.real - o.real)


def hull(points: Iterable[complex]) -> Hull:
    """Convex hull by Andrew's monotone chain, collinear points dropped."""
    pts = sorted({(p.real, p.imag) for p in map(complex, points)})
    if not pts:
        raise ValueError("hull of an empty set")
    pts = [complex(x, y) for x, y in pts]
    if len(pts) == 1:
        return Hull((pts[0],), 0.0)
    scale = max(abs(p - pts[0]) for p in pts)
    eps = 1e-12 * scale * scale

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and _cross(out[-2], out[-1], p) <= eps:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    verts = lower[:-1] + upper[:-1]
    per = sum(abs(verts[k] - verts[k - 1]) for k in range(len(verts)))
    return Hull(tuple(verts), per)


def _hull_of(points) -> Hull:
    return hull(complex(p) for p in points)


def characteristic_asymptotic(f: ExpPoly) -> GrowthAsymptotic:
    """Leading behaviour of T(r,f) = m(r,f): C(co(W_f with 0)) r^q / (2 pi)."""
    if f.is_polynomial():
        p = f.as_poly()
        return GrowthAsymptotic(0, 0.0, degenerate_log=max(int(p.degree), 0) if p else 0)
    fs = frequency_set(f)
    pts = fs.with_zero()
    h = _hull_of(pts)
    return GrowthAsymptotic(f.order, h.circumference / (2 * math.pi), points=tuple(pts))


def proximity_quotient_asymptotic(f: ExpPoly, g: ExpPoly) -> GrowthAsymptotic:
    """Leading coefficient of m(r, f/g).

    ``W_h`` is the union of the band frequencies of f and g, with 0 added
    when either has a nonzero order-below-q part.  A nonzero polynomial g
    plays the role of ``g = 1`` with ``W_g = {0}``.
    """
    if f.is_polynomial():
        raise NotTranscendental("numerator %s is not transcendental" % f)
    if g.is_zero():
        raise ZeroDivisionError("quotient by the zero function")
    if g.is_polynomial():
        return characteristic_asymptotic(f)
    if f.order != g.order:
        raise OrderMismatch("orders %d and %d differ" % (f.order, g.order))
    ff, gg = frequency_set(f), frequency_set(g)
    wh = ff.points | gg.points
    if ff.includes_zero or gg.includes_zero:
        wh = wh | {QScalar(0)}
    c_h = _hull_of(wh).circumference
    c_g = _hull_of(gg.as_set()).circumference
    return GrowthAsymptotic(f.order, max(c_h - c_g, 0.0) / (2 * math.pi), points=tuple(wh))


def zero_counting_asymptotic(f: ExpPoly) -> GrowthAsymptotic:
    """Leading behaviour of N(r,0,f): C(co(W_f)) r^q / (2 pi)."""
    if f.is_polynomial():
        raise NotTranscendental("%s is not transcendental" % f)
    pts = frequency_set(f).as_set()
    return GrowthAsymptotic(f.order, _hull_of(pts).circumference / (2 * math.pi), points=tuple(pts))
