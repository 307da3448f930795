"""Generators for the equation families with known exponential-polynomial
solutions.  Every generator checks its own output with :func:`is_solution`
before returning it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, prod

from .errors import InternalInconsistency, InvalidParameter
from .ode import LinearODE, is_solution
from .scalar import ONE, QScalar, scalar
from .symcore import ExpPoly, Poly

__all__ = [
    "FreiFamily",
    "TohgeTables",
    "frei",
    "one_term_family",
    "intro_one_term_family",
    "tohge_tables",
    "tohge_equation",
    "single_band_family",
    "cosh_band_family",
]


def _e(exponent: Poly, multiplier=None) -> ExpPoly:
    return ExpPoly.exp(exponent, multiplier)


def _lift(h) -> ExpPoly:
    if isinstance(h, ExpPoly):
        return h
    if isinstance(h, Poly):
        return ExpPoly.from_poly(h)
    return ExpPoly.constant(scalar(h))


def _zpow(k: int, c=1) -> ExpPoly:
    if k < 0:
        return ExpPoly()
    return ExpPoly.from_poly(Poly.monomial(k, c))


def _checked(eq: LinearODE, f: ExpPoly):
    if not is_solution(eq, f):
        raise InternalInconsistency("generated pair fails: %s for %s" % (f, eq))
    return eq, f


@dataclass(frozen=True)
class FreiFamily:
    m: int
    alpha: QScalar
    coefficients: tuple  # C_1 .. C_m
    equation: LinearODE
    solution: ExpPoly


def frei_coefficients_recursive(m: int) -> list[Fraction]:
    """``C_1 = m^2`` and ``(m^2 - j^2) C_j = (j + 1) C_{j+1}``."""
    cs = [Fraction(m * m)]
    for j in range(1, m):
        cs.append(Fraction(m * m - j * j) * cs[-1] / (j + 1))
    return cs


def frei_coefficients_closed(m: int) -> list[Fraction]:
    """``C_j = prod_{k<j} (m^2 - k^2) / j!``."""
    return [Fraction(prod(m * m - k * k for k in range(j)), factorial(j)) for j in range(1, m + 1)]


def frei(m: int) -> FreiFamily:
    """``f'' + e^{-z} f' - m^2 f = 0`` and its solution ``1 + sum C_j e^{jz}``."""
    if not isinstance(m, int) or m < 1:
        raise InvalidParameter("m must be a positive integer, got %r" % (m,))
    rec = frei_coefficients_recursive(m)
    if rec != frei_coefficients_closed(m):
        raise InternalInconsistency("recursive and closed coefficients differ")
    if any(c == 0 for c in rec):
        raise InternalInconsistency("a coefficient C_j vanished")
    z = Poly.monomial(1)
    f = ExpPoly.constant(ONE)
    for j, c in enumerate(rec, start=1):
        f = f + _e(z * j, Poly.constant(c))
    eq = LinearODE.second_order(_e(-z), ExpPoly.constant(-m * m))
    _checked(eq, f)
    return FreiFamily(m, QScalar(-m * m), tuple(QScalar(c) for c in rec), eq, f)


def one_term_family(c, b, w, P: Poly) -> tuple[LinearODE, ExpPoly]:
    """``A = (b/c)P - w + P e^{-wz}``, ``B = -(wb/c)P``, ``f = c + b e^{wz}``."""
    c, b, w = scalar(c), scalar(b), scalar(w)
    if c.is_zero() or b.is_zero() or w.is_zero() or P.is_zero():
        raise InvalidParameter("c, b, w and P must all be nonzero")
    z = Poly.monomial(1)
    Pe = ExpPoly.from_poly(P)
    A = Pe * (b / c) - ExpPoly.constant(w) + _e(z * (-w), P)
    B = Pe * (-(w * b) / c)
    f = ExpPoly.constant(c) + _e(z * w, Poly.constant(b))
    return _checked(LinearODE.second_order(A, B), f)


def intro_one_term_family(b, w, P: Poly) -> LinearODE:
    """``f'' + (P1 + P2 e^{-wz}) f' - P f = 0`` solved by ``1 + b e^{wz}``.

    ``P1 = P/w - w`` and ``P2 = P/(bw)``.
    """
    b, w = scalar(b), scalar(w)
    if b.is_zero() or w.is_zero() or P.is_zero():
        raise InvalidParameter("b, w and P must all be nonzero")
    z = Poly.monomial(1)
    P1 = P * (ONE / w) - w
    P2 = P * (ONE / (b * w))
    eq = LinearODE.second_order(ExpPoly.from_poly(P1) + _e(z * (-w), P2), ExpPoly.from_poly(-P))
    f = ExpPoly.constant(ONE) + _e(z * w, Poly.constant(b))
    _checked(eq, f)
    return eq


@dataclass(frozen=True)
class TohgeTables:
    """Polynomial tables for ``f = e^{z^q} + 1``.

    ``P[j][k]`` (0 <= k <= j <= q) satisfy
    ``(1 + e^{-z^q}) f^(j+1) = sum_k P[j][k] f^(k)`` and ``Q[l-1]`` (l = 1..q)
    satisfy ``f^(q+1) = sum_l Q_l f^(l)``.  Entries forced to zero by the
    recursion are kept and listed in ``zero_entries``.
    """

    q: int
    P: tuple
    Q: tuple
    zero_entries: tuple = field(default=())

    def Q_(self, ell: int) -> Poly:
        return self.Q[ell - 1]


def _tohge_f(q: int) -> ExpPoly:
    return _e(Poly.monomial(q)) + ExpPoly.constant(ONE)


def tohge_tables(q: int) -> TohgeTables:
    if not isinstance(q, int) or q < 1:
        raise InvalidParameter("q must be a positive integer")
    lead = Poly.monomial(q - 1, q)
    P = [[lead]]
    for j in range(q):
        prev = P[j]
        row = [prev[0].derivative() + lead * prev[0]]
        for k in range(1, j + 1):
            row.append(prev[k].derivative() + lead * prev[k] + prev[k - 1])
        row.append(prev[j] - lead)
        P.append(row)
    # Q_l = -binom(q, l-1) (e^{-z^q})^{(q-l+1)} e^{z^q}
    g = _e(Poly.monomial(q, -1))
    derivs = [g]
    for _ in range(q):
        derivs.append(derivs[-1].derivative())
    back = _e(Poly.monomial(q))
    Q = []
    for ell in range(1, q + 1):
        val = derivs[q - ell + 1] * back * (-comb(q, ell - 1))
        Q.append(val.as_poly())
    zeros = tuple((j, k) for j, row in enumerate(P) for k, p in enumerate(row) if p.is_zero())
    tables = TohgeTables(q, tuple(tuple(r) for r in P), tuple(Q), zeros)
    if not (check_tohge_identity_i(tables) and check_tohge_identity_ii(tables)):
        raise InternalInconsistency("table identities fail for q=%d" % q)
    return tables


def check_tohge_identity_i(t: TohgeTables) -> bool:
    """``(1 + e^{-z^q}) f^(j+1) = sum_k P_{j,k} f^(k)`` for all 0 <= j <= q."""
    f = _tohge_f(t.q)
    ds = [f]
    for _ in range(t.q + 1):
        ds.append(ds[-1].derivative())
    one_plus = ExpPoly.constant(ONE) + _e(Poly.monomial(t.q, -1))
    for j in range(t.q + 1):
        rhs = ExpPoly()
        for k in range(j + 1):
            rhs = rhs + ExpPoly.from_poly(t.P[j][k]) * ds[k]
        if not (one_plus * ds[j + 1] - rhs).is_zero():
            return False
    return True


def check_tohge_identity_ii(t: TohgeTables) -> bool:
    f = _tohge_f(t.q)
    ds = [f]
    for _ in range(t.q + 1):
        ds.append(ds[-1].derivative())
    rhs = ExpPoly()
    for ell in range(1, t.q + 1):
        rhs = rhs + ExpPoly.from_poly(t.Q_(ell)) * ds[ell]
    return (ds[t.q + 1] - rhs).is_zero()


def tohge_equation(q: int, j: int, H) -> LinearODE:
    """Order q+1 equation solved by ``e^{z^q} + 1`` with H attached to ``f^(j)``.

    Coefficients, from ``f^(q+1)`` down: 1; ``-Q_l`` for l > j;
    ``-((1 + e^{-z^q}) H + Q_j)`` at order j; ``P_{j-1,l} H - Q_l`` for
    0 < l < j; ``P_{j-1,0} H`` at order 0.
    """
    if not isinstance(q, int) or q < 1 or not isinstance(j, int) or not 1 <= j <= q:
        raise InvalidParameter("need 1 <= j <= q")
    H = _lift(H)
    if H.is_zero():
        raise InvalidParameter("H must be nonzero")
    t = tohge_tables(q)
    one_plus = ExpPoly.constant(ONE) + _e(Poly.monomial(q, -1))
    coeff = {q + 1: ExpPoly.constant(ONE)}
    for ell in range(j + 1, q + 1):
        coeff[ell] = -ExpPoly.from_poly(t.Q_(ell))
    coeff[j] = -(one_plus * H + ExpPoly.from_poly(t.Q_(j)))
    for ell in range(1, j):
        coeff[ell] = ExpPoly.from_poly(t.P[j - 1][ell]) * H - ExpPoly.from_poly(t.Q_(ell))
    coeff[0] = ExpPoly.from_poly(t.P[j - 1][0]) * H
    eq = LinearODE(tuple(coeff.get(k, ExpPoly()) for k in range(q + 1, -1, -1)))
    _checked(eq, _tohge_f(q))
    return eq


def single_band_family(q: int, H) -> tuple[LinearODE, ExpPoly]:
    """``f'' + (H - q z^{q-1}) f' - (q(q-1) z^{q-2} + q z^{q-1} H) f = 0``, ``f = e^{z^q}``."""
    if not isinstance(q, int) or q < 1:
        raise InvalidParameter("q must be a positive integer")
    H = _lift(H)
    A = H - _zpow(q - 1, q)
    B = -(_zpow(q - 2, q * (q - 1)) + _zpow(q - 1, q) * H)
    return _checked(LinearODE.second_order(A, B), _e(Poly.monomial(q)))


def cosh_band_family(q: int, H) -> tuple[LinearODE, ExpPoly]:
    """``f = (e^z + e^{-z}) e^{z^q}`` with the two-coefficient equation in H."""
    if not isinstance(q, int) or q < 1:
        raise InvalidParameter("q must be a positive integer")
    H = _lift(H)
    z = Poly.monomial(1)
    ez, emz = _e(z), _e(-z)
    one = ExpPoly.constant(ONE)
    A = H * ez + H * emz - _zpow(q - 1, 2 * q)
    B = -((_zpow(q - 1, q) + one) * H * ez + (_zpow(q - 1, q) - one) * H * emz
          - _zpow(2 * (q - 1), q * q) + _zpow(q - 2, q * (q - 1)) + one)
    f = (ez + emz) * _e(Poly.monomial(q))
    return _checked(LinearODE.second_order(A, B), f)
