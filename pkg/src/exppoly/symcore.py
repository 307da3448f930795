"""Exponential polynomials ``sum P_j(z) exp(Q_j(z))`` in canonical form.

An :class:`ExpPoly` maps each exponent polynomial (zero constant term) to a
nonzero multiplier polynomial.  Equal exponents are merged, so equality of
two values is plain structural equality.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, NamedTuple

from .errors import NotTranscendental, OrderTooHigh
from .scalar import ONE, ZERO, QScalar, scalar, scalar_sort_key

__all__ = [
    "Poly",
    "ExpTerm",
    "ExpPoly",
    "NormalizedView",
    "Z",
    "add",
    "mul",
    "scale",
    "differentiate",
    "normalize",
    "order",
    "evaluate",
    "antiderivative_exp1",
    "derivative_multipliers",
    "exponent_sort_key",
]


def _as_scalar(c) -> QScalar:
    return c if isinstance(c, QScalar) else scalar(c)


class Poly:
    """Polynomial in z with QScalar coefficients, lowest degree first."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        cs = [_as_scalar(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c=1) -> "Poly":
        return cls([ZERO] * degree + [_as_scalar(c)])

    @property
    def degree(self) -> float:
        """Degree, with ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coeff(self, k: int) -> QScalar:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    @property
    def leading(self) -> QScalar:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return Poly.constant(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = _as_scalar(other)
            return Poly([c * x for x in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x.is_zero():
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] = out[i + j] + x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = Poly.constant(ONE)
        for _ in range(n):
            result = result * self
        return result

    def derivative(self) -> "Poly":
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def integral(self) -> "Poly":
        """Antiderivative with zero constant term."""
        return Poly([ZERO] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def __call__(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + complex(c)
        return acc

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self.coeffs))
        return self._hash

    def __repr__(self):
        from .textio import format_poly
        return "Poly(%s)" % format_poly(self)


class ExpTerm(NamedTuple):
    multiplier: Poly
    exponent: Poly


def exponent_sort_key(p: Poly):
    """Order exponents by degree, then coefficient-wise from the top."""
    return (len(p.coeffs),) + tuple(scalar_sort_key(c) for c in reversed(p.coeffs))


class ExpPoly:
    """Finite sum of ``multiplier(z) * exp(exponent(z))`` terms."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=()):
        acc: dict[Poly, Poly] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for exponent, multiplier in items:
            if exponent.coeff(0):
                raise ValueError("exponent polynomials must have zero constant term")
            prev = acc.get(exponent)
            acc[exponent] = multiplier if prev is None else prev + multiplier
        object.__setattr__(self, "_terms", {e: m for e, m in acc.items() if m})
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("ExpPoly is immutable")

    # -- constructors ------------------------------------------------------
    @classmethod
    def constant(cls, c) -> "ExpPoly":
        return cls([(Poly(), Poly.constant(c))])

    @classmethod
    def from_poly(cls, p: Poly) -> "ExpPoly":
        return cls([(Poly(), p)])

    @classmethod
    def exp(cls, exponent: Poly, multiplier: Poly | None = None) -> "ExpPoly":
        return cls([(exponent, Poly.constant(ONE) if multiplier is None else multiplier)])

    # -- structure ---------------------------------------------------------
    @property
    def terms(self) -> list[ExpTerm]:
        """Terms in canonical print order."""
        keys = sorted(self._terms, key=exponent_sort_key)
        return [ExpTerm(self._terms[e], e) for e in keys]

    def items(self):
        return self._terms.items()

    def multiplier(self, exponent: Poly) -> Poly:
        return self._terms.get(exponent, Poly())

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_polynomial(self) -> bool:
        return all(e.is_zero() for e in self._terms)

    def as_poly(self) -> Poly:
        if not self.is_polynomial():
            raise ValueError("%s is not a polynomial" % self)
        return self._terms.get(Poly(), Poly())

    def is_constant(self) -> bool:
        return self.is_polynomial() and self.as_poly().is_constant()

    @property
    def order(self) -> int:
        return max((len(e.coeffs) - 1 for e in self._terms if e), default=0)

    # -- ring operations ---------------------------------------------------
    def __add__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return ExpPoly(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return ExpPoly([(e, -m) for e, m in self._terms.items()])

    def __sub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (QScalar, int, Fraction)) and not isinstance(other, bool):
            c = _as_scalar(other)
            return ExpPoly([(e, m * c) for e, m in self._terms.items()])
        other = _lift(other)
        if other is NotImplemented:
            return other
        out = []
        for e1, m1 in self._terms.items():
            for e2, m2 in other._terms.items():
                out.append((e1 + e2, m1 * m2))
        return ExpPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = ExpPoly.constant(ONE)
        for _ in range(n):
            result = result * self
        return result

    def derivative(self) -> "ExpPoly":
        return ExpPoly([(e, m.derivative() + m * e.derivative()) for e, m in self._terms.items()])

    def __call__(self, z: complex) -> complex:
        return evaluate(self, z)

    def __eq__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return "ExpPoly(%r)" % str(self)

    def __str__(self):
        from .textio import print_expoly
        return print_expoly(self)


def _lift(x):
    if isinstance(x, ExpPoly):
        return x
    if isinstance(x, Poly):
        return ExpPoly.from_poly(x)
    if isinstance(x, (QScalar, int, Fraction)) and not isinstance(x, bool):
        return ExpPoly.constant(x)
    return NotImplemented


Z = ExpPoly.from_poly(Poly.monomial(1))


def add(f: ExpPoly, g: ExpPoly) -> ExpPoly:
    return f + g


def mul(f: ExpPoly, g: ExpPoly) -> ExpPoly:
    return f * g


def scale(c, f: ExpPoly) -> ExpPoly:
    return f * _as_scalar(c)


def differentiate(f: ExpPoly) -> ExpPoly:
    """Exact derivative via ``(P e^Q)' = (P' + P Q') e^Q``."""
    return f.derivative()


def order(f: ExpPoly) -> int:
    """Largest exponent degree; 0 for polynomials and for the zero function."""
    return f.order


def evaluate(f: ExpPoly, z0: complex) -> complex:
    z0 = complex(z0)
    return sum((m(z0) * cmath.exp(e(z0)) for e, m in f.items()), 0j)


@dataclass(frozen=True)
class NormalizedView:
    """``f = f0 + sum_j F_j exp(w_j z**q)`` with ``order(F_j) < q``."""

    q: int
    f0: ExpPoly
    bands: tuple  # of (w, F) pairs

    @property
    def m(self) -> int:
        return len(self.bands)

    @property
    def frequencies(self) -> list[QScalar]:
        return [w for w, _ in self.bands]

    @property
    def multipliers(self) -> list[ExpPoly]:
        return [F for _, F in self.bands]

    def band(self, w: QScalar) -> ExpPoly:
        for v, F in self.bands:
            if v == w:
                return F
        return ExpPoly()

    def reconstruct(self) -> ExpPoly:
        top = Poly.monomial(self.q)
        out = self.f0
        for w, F in self.bands:
            out = out + F * ExpPoly.exp(top * w)
        return out


def normalize(f: ExpPoly) -> NormalizedView:
    q = f.order
    if q == 0:
        raise NotTranscendental("%s has no exponential terms" % f)
    lower = []
    groups: dict[QScalar, list] = {}
    for e, m in f.items():
        w = e.coeff(q)
        if w.is_zero():
            lower.append((e, m))
        else:
            rest = Poly(e.coeffs[:q])
            groups.setdefault(w, []).append((rest, m))
    bands = tuple(
        (w, ExpPoly(groups[w])) for w in sorted(groups, key=scalar_sort_key)
    )
    return NormalizedView(q, ExpPoly(lower), bands)


def antiderivative_exp1(f: ExpPoly) -> ExpPoly:
    """Primitive of an order <= 1 exponential polynomial, constant fixed to 0.

    Each ``z**n exp(w z)`` integrates to
    ``(z**n / w + sum_{v<n} (-1)**(n-v) n! / (w**(n-v+1) v!) z**v) exp(w z)``.
    """
    out = []
    for e, m in f.items():
        if len(e.coeffs) - 1 >= 2:
            raise OrderTooHigh("no exponential polynomial primitive for exp(%s)" % _fmt(e))
        if e.is_zero():
            out.append((e, m.integral()))
            continue
        w = e.coeff(1)
        acc = Poly()
        for n, a in enumerate(m.coeffs):
            if a.is_zero():
                continue
            parts = [ZERO] * (n + 1)
            parts[n] = ONE / w
            for v in range(n):
                parts[v] = QScalar((-1) ** (n - v) * factorial(n)) / (w ** (n - v + 1) * factorial(v))
            acc = acc + Poly(parts) * a
        out.append((e, acc))
    return ExpPoly(out)


def _fmt(p: Poly) -> str:
    from .textio import format_poly
    return format_poly(p)


def derivative_multipliers(view: NormalizedView) -> list[tuple[ExpPoly, ExpPoly]]:
    """Per band: ``G = F' + q w z^(q-1) F`` and ``H = G' + q w z^(q-1) G``."""
    q = view.q
    out = []
    for w, F in view.bands:
        shift = ExpPoly.from_poly(Poly.monomial(q - 1, w * q))
        G = F.derivative() + shift * F
        H = G.derivative() + shift * G
        out.append((G, H))
    return out
