"""Linear differential equations with exponential-polynomial coefficients.

``LinearODE((a_n, ..., a_1, a_0))`` stands for
``a_n f^(n) + ... + a_1 f' + a_0 f = 0``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InternalInconsistency, InvalidParameter, LatticeViolation, MultiplierNotPolynomial
from .exactla import Matrix, kernel_basis, rref
from .scalar import ONE, QScalar, scalar
from .symcore import ExpPoly, Poly, evaluate

__all__ = [
    "LinearODE",
    "SearchSpec",
    "residual",
    "is_solution",
    "numeric_residual",
    "verify_exp_solution",
    "search_solutions",
    "span_equals",
    "spot_points",
    "SPOT_CHECK_SEED",
    "ORACLE_RTOL",
]

#: Seed for the spot-check points of :func:`is_solution`.
SPOT_CHECK_SEED = 20231101
#: Relative tolerance of the Cauchy-integral oracle.
ORACLE_RTOL = 1e-8


def _lift(a) -> ExpPoly:
    if isinstance(a, ExpPoly):
        return a
    if isinstance(a, Poly):
        return ExpPoly.from_poly(a)
    return ExpPoly.constant(a)


@dataclass(frozen=True)
class LinearODE:
    coefficients: tuple

    def __post_init__(self):
        cs = tuple(_lift(a) for a in self.coefficients)
        object.__setattr__(self, "coefficients", cs)
        if len(cs) < 2:
            raise InvalidParameter("an equation needs order >= 1")
        if cs[0].is_zero():
            raise InvalidParameter("leading coefficient must be nonzero")

    @classmethod
    def second_order(cls, A, B) -> "LinearODE":
        """``f'' + A f' + B f = 0``."""
        return cls((ExpPoly.constant(ONE), _lift(A), _lift(B)))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, k: int) -> ExpPoly:
        """Coefficient of ``f^(k)``."""
        return self.coefficients[self.order - k]

    def is_normalized_second_order(self) -> bool:
        return self.order == 2 and self.coefficients[0] == ExpPoly.constant(ONE)

    def __str__(self):
        from .textio import format_equation
        return format_equation(self.coefficients)


@dataclass(frozen=True)
class SearchSpec:
    """Ansatz ``sum_{j=j_min}^{j_max} F_j(z) exp(j w z^q)`` with deg F_j <= deg_bound."""

    w: QScalar
    q: int
    j_max: int
    deg_bound: int
    j_min: int = 0

    def __post_init__(self):
        object.__setattr__(self, "w", scalar(self.w))
        if self.w.is_zero():
            raise InvalidParameter("lattice generator w must be nonzero")
        if self.q < 1 or self.deg_bound < 0 or self.j_min > self.j_max:
            raise InvalidParameter("invalid search box %r" % (self,))


def _derivatives(f: ExpPoly, n: int) -> list[ExpPoly]:
    out = [f]
    for _ in range(n):
        out.append(out[-1].derivative())
    return out


def residual(eq: LinearODE, f: ExpPoly) -> ExpPoly:
    ds = _derivatives(f, eq.order)
    out = ExpPoly()
    for k in range(eq.order + 1):
        a = eq.coefficient(k)
        if a and ds[k]:
            out = out + a * ds[k]
    return out


def _cauchy_derivatives(f: ExpPoly, z0: complex, n: int, radius=0.25, samples=64) -> np.ndarray:
    """Taylor-based derivatives ``f^(k)(z0)``, k = 0..n, from point values only."""
    theta = 2 * np.pi * np.arange(samples) / samples
    vals = np.array([evaluate(f, z0 + radius * np.exp(1j * t)) for t in theta])
    coeffs = np.fft.fft(vals) / samples
    return np.array([coeffs[k] * math.factorial(k) / radius ** k for k in range(n + 1)])


def numeric_residual(eq: LinearODE, f: ExpPoly, z0: complex) -> tuple[complex, float]:
    """Residual at ``z0`` using only point evaluations, and its scale.

    Derivatives come from the Cauchy integral formula (trapezoid rule on a
    small circle), so this route shares nothing with symbolic
    differentiation.
    """
    ds = _cauchy_derivatives(f, z0, eq.order)
    total, scale = 0j, 0.0
    for k in range(eq.order + 1):
        term = evaluate(eq.coefficient(k), z0) * ds[k]
        total += term
        scale += abs(term)
    return total, scale


def spot_points(count: int = 5, seed: int = SPOT_CHECK_SEED) -> list[complex]:
    """Points in the annulus 0.5 <= |z| <= 1.5."""
    rng = np.random.default_rng(seed)
    r = rng.uniform(0.5, 1.5, count)
    t = rng.uniform(0, 2 * np.pi, count)
    return [complex(x) for x in r * np.exp(1j * t)]


def is_solution(eq: LinearODE, f: ExpPoly, rtol: float = ORACLE_RTOL) -> bool:
    """Exact test, cross-checked numerically at five fixed points."""
    exact = residual(eq, f).is_zero()
    small = []
    for z0 in spot_points():
        val, scale = numeric_residual(eq, f, z0)
        small.append(abs(val) <= rtol * max(scale, 1.0))
    numeric = all(small)
    if exact != numeric:
        raise InternalInconsistency(
            "exact residual %s zero but numeric oracle says %s for %s"
            % ("is" if exact else "is not", "zero" if numeric else "nonzero", f)
        )
    return exact


def verify_exp_solution(eq: LinearODE, E: ExpPoly) -> bool:
    """Whether ``f = exp(E)`` solves ``eq``.

    With ``f^(k) = u_k exp(E)``, ``u_0 = 1`` and ``u_{k+1} = u_k' + u_k E'``;
    the check is ``sum a_k u_k == 0``.
    """
    dE = E.derivative()
    u = ExpPoly.constant(ONE)
    total = eq.coefficient(0) * u
    for k in range(1, eq.order + 1):
        u = u.derivative() + u * dE
        total = total + eq.coefficient(k) * u
    return total.is_zero()


def _check_lattice(eq: LinearODE, spec: SearchSpec):
    q, w = spec.q, spec.w
    for a in eq.coefficients:
        for e, _ in a.items():
            if e.is_zero():
                continue
            deg = len(e.coeffs) - 1
            if deg > q:
                raise LatticeViolation("exponent %r has degree above %d" % (e, q))
            if deg == q:
                t = e.coeff(q) / w
                if not t.is_rational() or t.as_fraction().denominator != 1:
                    raise LatticeViolation("exponent %r is not on the lattice of %s*z^%d" % (e, w, q))
            if any(c for c in e.coeffs[:q]):
                raise MultiplierNotPolynomial(
                    "exponent %r carries terms below degree %d" % (e, q))


def search_solutions(eq: LinearODE, spec: SearchSpec) -> list[ExpPoly]:
    """Exact basis of the ansatz solutions, in reduced echelon form.

    Unknowns are ordered by band ``j`` then monomial degree, so each
    returned basis element has coefficient 1 on its first unknown.
    """
    _check_lattice(eq, spec)
    zq = Poly.monomial(spec.q)
    unknowns = [(j, d) for j in range(spec.j_min, spec.j_max + 1)
                for d in range(spec.deg_bound + 1)]
    basis = [ExpPoly.exp(zq * (spec.w * j), Poly.monomial(d)) if j else
             ExpPoly.from_poly(Poly.monomial(d)) for j, d in unknowns]
    columns = [residual(eq, b) for b in basis]
    coords: dict = {}
    for col in columns:
        for e, m in col.items():
            for d, c in enumerate(m.coeffs):
                if c:
                    coords.setdefault((e, d), len(coords))
    rows = [[QScalar(0)] * len(unknowns) for _ in coords]
    for k, col in enumerate(columns):
        for e, m in col.items():
            for d, c in enumerate(m.coeffs):
                if c:
                    rows[coords[(e, d)]][k] = c
    M = Matrix(rows, len(unknowns))
    kernel = kernel_basis(M) if rows else [
        [ONE if i == k else QScalar(0) for i in range(len(unknowns))] for k in range(len(unknowns))]
    if not kernel:
        return []
    echelon, _ = rref(Matrix(kernel, len(unknowns)))
    out = []
    for vec in echelon:
        f = ExpPoly()
        for c, b in zip(vec, basis):
            if c:
                f = f + b * c
        if not residual(eq, f).is_zero():
            raise InternalInconsistency("kernel vector does not solve the equation")
        out.append(f)
    return out


def span_equals(found: Sequence[ExpPoly], expected: Sequence[ExpPoly]) -> bool:
    """Whether two finite lists of exponential polynomials span one space."""
    keys: dict = {}
    vecs = []
    for f in list(found) + list(expected):
        for e, m in f.items():
            for d, c in enumerate(m.coeffs):
                if c:
                    keys.setdefault((e, d), len(keys))
    for f in list(found) + list(expected):
        v = [QScalar(0)] * len(keys)
        for e, m in f.items():
            for d, c in enumerate(m.coeffs):
                if c:
                    v[keys[(e, d)]] = c
        vecs.append(v)
    if not keys:
        return True
    from .exactla import rank
    r_found = rank(Matrix(vecs[:len(found)], len(keys))) if found else 0
    r_exp = rank(Matrix(vecs[len(found):], len(keys))) if expected else 0
    r_all = rank(Matrix(vecs, len(keys)))
    return r_found == r_exp == r_all
