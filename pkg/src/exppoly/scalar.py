"""Exact arithmetic in Q(i)[sqrt(r)] for a square-free radicand r.

An element is stored as ``(a_re + a_im*i) + (b_re + b_im*i)*sqrt(r)`` with
four :class:`fractions.Fraction` components.  ``sqrt(r)`` is taken as the
positive real root, so complex conjugation only touches the imaginary
components.

    >>> ctx = ScalarContext(6)
    >>> s = ctx.sqrt() * I
    >>> s * s
    QScalar(-6)
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import ContextMismatch, InvalidParameter

__all__ = [
    "ScalarContext",
    "QScalar",
    "DEFAULT_CONTEXT",
    "I",
    "ONE",
    "ZERO",
    "scalar",
    "is_positive_real",
    "to_complex_float",
    "compare_real",
    "scalar_sort_key",
]

_F0 = Fraction(0)


def _is_square_free(n: int) -> bool:
    if n < 1:
        return False
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class ScalarContext:
    """Radicand and float tolerance shared by one computation."""

    radicand: int = 1
    float_tolerance: float = 1e-9

    def __post_init__(self):
        if not isinstance(self.radicand, int) or not _is_square_free(self.radicand):
            raise InvalidParameter("radicand must be a square-free integer >= 1, got %r" % (self.radicand,))
        if not self.float_tolerance > 0:
            raise InvalidParameter("float_tolerance must be positive")

    def __call__(self, value=0) -> "QScalar":
        return scalar(value, self.radicand)

    def sqrt(self) -> "QScalar":
        """The element ``sqrt(radicand)``."""
        return QScalar(0, 0, 1, 0, self.radicand)


DEFAULT_CONTEXT = ScalarContext()


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError("exact rational expected, got %r" % (x,))


class QScalar:
    """Immutable element of Q(i)[sqrt(r)]."""

    __slots__ = ("a_re", "a_im", "b_re", "b_im", "radicand", "_hash")

    def __init__(self, a_re=0, a_im=0, b_re=0, b_im=0, radicand=1):
        a_re, a_im, b_re, b_im = _frac(a_re), _frac(a_im), _frac(b_re), _frac(b_im)
        if radicand == 1:
            a_re, a_im, b_re, b_im = a_re + b_re, a_im + b_im, _F0, _F0
        object.__setattr__(self, "a_re", a_re)
        object.__setattr__(self, "a_im", a_im)
        object.__setattr__(self, "b_re", b_re)
        object.__setattr__(self, "b_im", b_im)
        object.__setattr__(self, "radicand", radicand)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("QScalar is immutable")

    # -- structure ---------------------------------------------------------
    @property
    def has_surd(self) -> bool:
        return bool(self.b_re or self.b_im)

    def is_zero(self) -> bool:
        return not (self.a_re or self.a_im or self.b_re or self.b_im)

    def __bool__(self):
        return not self.is_zero()

    def is_real(self) -> bool:
        return not (self.a_im or self.b_im)

    def is_rational(self) -> bool:
        return not (self.a_im or self.b_re or self.b_im)

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("%r is not rational" % (self,))
        return self.a_re

    def components(self):
        return (self.a_re, self.a_im, self.b_re, self.b_im)

    # -- arithmetic --------------------------------------------------------
    def _radicand_with(self, other: "QScalar") -> int:
        if self.radicand == other.radicand:
            return self.radicand
        if not self.has_surd and not other.has_surd:
            return max(self.radicand, other.radicand)
        if not self.has_surd:
            return other.radicand
        if not other.has_surd:
            return self.radicand
        raise ContextMismatch(
            "cannot combine scalars over sqrt(%d) and sqrt(%d)" % (self.radicand, other.radicand)
        )

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        r = self._radicand_with(other)
        return QScalar(self.a_re + other.a_re, self.a_im + other.a_im,
                       self.b_re + other.b_re, self.b_im + other.b_im, r)

    __radd__ = __add__

    def __neg__(self):
        return QScalar(-self.a_re, -self.a_im, -self.b_re, -self.b_im, self.radicand)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        r = self._radicand_with(other)
        a = (self.a_re, self.a_im)
        b = (self.b_re, self.b_im)
        c = (other.a_re, other.a_im)
        d = (other.b_re, other.b_im)
        ac = _gmul(a, c)
        bd = _gmul(b, d)
        ad = _gmul(a, d)
        bc = _gmul(b, c)
        return QScalar(ac[0] + bd[0] * r, ac[1] + bd[1] * r, ad[0] + bc[0], ad[1] + bc[1], r)

    __rmul__ = __mul__

    def inverse(self) -> "QScalar":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(i)[sqrt(%d)]" % self.radicand)
        r = self.radicand
        a = (self.a_re, self.a_im)
        b = (self.b_re, self.b_im)
        # (a + b s)(a - b s) = a^2 - r b^2, a Gaussian rational
        a2 = _gmul(a, a)
        b2 = _gmul(b, b)
        n = (a2[0] - r * b2[0], a2[1] - r * b2[1])
        den = n[0] * n[0] + n[1] * n[1]
        ninv = (n[0] / den, -n[1] / den)
        u = _gmul(a, ninv)
        v = _gmul(b, ninv)
        return QScalar(u[0], u[1], -v[0], -v[1], r)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = QScalar(1, radicand=self.radicand), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "QScalar":
        return QScalar(self.a_re, -self.a_im, self.b_re, -self.b_im, self.radicand)

    # -- comparison / hashing ---------------------------------------------
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.components() != other.components():
            return False
        return not self.has_surd or self.radicand == other.radicand

    def __hash__(self):
        h = self._hash
        if h is None:
            if self.has_surd:
                h = hash((self.a_re, self.a_im, self.b_re, self.b_im, self.radicand))
            elif self.a_im:
                h = hash((self.a_re, self.a_im))
            else:
                h = hash(self.a_re)
            object.__setattr__(self, "_hash", h)
        return h

    # -- numerics ----------------------------------------------------------
    def __complex__(self):
        s = math.sqrt(self.radicand)
        return complex(float(self.a_re) + float(self.b_re) * s,
                       float(self.a_im) + float(self.b_im) * s)

    def __abs__(self):
        return abs(complex(self))

    def __repr__(self):
        from .textio import format_scalar
        return "QScalar(%s)" % format_scalar(self)

    def __str__(self):
        from .textio import format_scalar
        return format_scalar(self)


def _gmul(x, y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _coerce(x):
    if isinstance(x, QScalar):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return QScalar(x)
    return NotImplemented


def scalar(value=0, radicand: int = 1) -> QScalar:
    """Build a QScalar from an int, Fraction, ``"p/q"`` string or QScalar."""
    if isinstance(value, QScalar):
        return value
    if isinstance(value, complex):
        re, im = value.real, value.imag
        if re != int(re) or im != int(im):
            raise TypeError("only integral complex literals can be converted exactly")
        return QScalar(int(re), int(im), radicand=radicand)
    return QScalar(_frac(value), radicand=radicand)


ZERO = QScalar(0)
ONE = QScalar(1)
I = QScalar(0, 1)


def _real_sign(a: Fraction, b: Fraction, r: int) -> int:
    """Sign of the real number a + b*sqrt(r)."""
    sa = (a > 0) - (a < 0)
    sb = (b > 0) - (b < 0)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    lhs, rhs = a * a, b * b * r
    if lhs > rhs:
        return sa
    if lhs < rhs:
        return sb
    return 0


def real_sign(x: QScalar) -> int:
    if not x.is_real():
        raise ValueError("%r is not real" % (x,))
    return _real_sign(x.a_re, x.b_re, x.radicand)


def is_positive_real(x: QScalar) -> bool:
    """True iff ``x`` is a real number > 0, decided exactly."""
    return x.is_real() and _real_sign(x.a_re, x.b_re, x.radicand) > 0


def compare_real(x: QScalar, y: QScalar) -> int:
    """Exact three-way comparison of two real field elements."""
    return real_sign(x - y)


def to_complex_float(x: QScalar) -> complex:
    return complex(x)


def scalar_sort_key(x: QScalar):
    """Deterministic ordering: zero, then positive reals, then the rest.

    Inside each group values are ordered by modulus, then by argument in
    [0, 2*pi), then by exact components.
    """
    if x.is_zero():
        return (0, 0.0, 0.0, ())
    c = complex(x)
    arg = cmath.phase(c) % (2 * math.pi)
    group = 1 if is_positive_real(x) else 2
    return (group, abs(c), arg, x.components())
