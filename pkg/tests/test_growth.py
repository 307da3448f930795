import math
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.spatial import ConvexHull

from exppoly import ExpPoly, Poly, QScalar, ScalarContext, parse_expoly
from exppoly.errors import NotTranscendental, OrderMismatch
from exppoly.growth import (characteristic_asymptotic, frequency_set, hull, proximity_quotient_asymptotic,
                            zero_counting_asymptotic)

from oracles import nonzero_gaussian, polys

P = parse_expoly
I = QScalar(0, 1)


def test_frequency_sets():
    fs = frequency_set(P("exp(z) + exp(2*z)"))
    assert fs.points == {QScalar(1), QScalar(2)} and not fs.includes_zero
    fs = frequency_set(P("exp(i*z) + z"))
    assert fs.points == {QScalar(0, -1)} and fs.includes_zero
    fs = frequency_set(P("1 + exp(2*z)"))
    assert fs.points == {QScalar(2)} and fs.includes_zero
    with pytest.raises(NotTranscendental):
        frequency_set(P("z"))


@pytest.mark.parametrize("pts, circ", [
    ([0, 1, 2], 4.0),
    ([0, -1, -1j], 2 + math.sqrt(2)),
    ([5], 0.0),
    ([0, 1, 1j, 1 + 1j, 0.5 + 0.5j], 4.0),
])
def test_hull_examples(pts, circ):
    assert hull(pts).circumference == pytest.approx(circ, abs=1e-12)


def test_hull_vertices_are_extreme_and_ccw():
    h = hull([0, 2, 2 + 2j, 2j, 1 + 1j, 1])
    assert set(h.vertices) == {0, 2, 2 + 2j, 2j}
    v = h.vertices
    area2 = sum((v[k - 1].conjugate() * v[k]).imag for k in range(len(v)))
    assert area2 > 0


def test_hull_rejects_empty():
    with pytest.raises(ValueError):
        hull([])


def test_hull_against_scipy():
    rng = np.random.default_rng(5)
    for _ in range(50):
        pts = rng.normal(size=(rng.integers(3, 12), 2))
        expected = ConvexHull(pts).area    # in 2D "area" is the perimeter
        got = hull([complex(x, y) for x, y in pts]).circumference
        assert got == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("f, over_pi", [
    ("exp(z) + exp(2*z)", 2),
    ("exp(-4*z)", 4),
    ("(exp(z) + exp(2*z))*exp(-4*z)", 3),
])
def test_characteristic_examples(f, over_pi):
    res = characteristic_asymptotic(P(f))
    assert res.q == 1
    assert res.leading == pytest.approx(over_pi / math.pi, abs=1e-9)


def test_characteristic_triangle():
    res = characteristic_asymptotic(P("exp(i*z) + exp(-z)"))
    assert res.leading == pytest.approx((2 + math.sqrt(2)) / (2 * math.pi), abs=1e-12)


def test_characteristic_polynomial_is_logarithmic():
    res = characteristic_asymptotic(P("z^3 - 1"))
    assert (res.q, res.leading, res.degenerate_log) == (0, 0.0, 3)
    assert res.describe() == "T(r,f) ~ 3 log r"


def test_characteristic_higher_order():
    res = characteristic_asymptotic(P("z*exp(z^2) + exp(-z^2)"))
    assert res.q == 2
    assert res.leading == pytest.approx(4 / (2 * math.pi))
    assert res.describe() == "T(r,f) ~ (2/pi) r^2"


@pytest.mark.parametrize("f, g, over_pi", [
    ("1 + exp(2*z)", "exp(z)", 2),
    ("exp(z) + exp(2*z)", "exp(-z)", 3),
    ("exp(z) + exp(2*z)", "exp(z) + exp(2*z)", 0),
])
def test_proximity_examples(f, g, over_pi):
    res = proximity_quotient_asymptotic(P(f), P(g))
    assert res.leading == pytest.approx(over_pi / math.pi, abs=1e-9)


def test_proximity_order_mismatch():
    with pytest.raises(OrderMismatch):
        proximity_quotient_asymptotic(P("exp(z)"), P("exp(z^2)"))
    with pytest.raises(ZeroDivisionError):
        proximity_quotient_asymptotic(P("exp(z)"), ExpPoly())


@pytest.mark.parametrize("f, over_pi", [
    ("exp(z) - 1", 1),
    ("exp(z) + exp(2*z)", 1),
    ("exp(z)", 0),
])
def test_zero_counting_examples(f, over_pi):
    assert zero_counting_asymptotic(P(f)).leading == pytest.approx(over_pi / math.pi, abs=1e-9)


def test_zero_counting_matches_explicit_zeros():
    # zeros of e^z - 1 are 2 pi i k: n(r) ~ r/pi, and N(r) has the same leading term
    r = 1e4
    count = 2 * math.floor(r / (2 * math.pi)) + 1
    assert count / r == pytest.approx(zero_counting_asymptotic(P("exp(z) - 1")).leading, rel=1e-3)


def _rotate(f: ExpPoly, u: QScalar) -> ExpPoly:
    """Multiply the top exponent coefficient of every band by ``u``."""
    out = ExpPoly()
    q = f.order
    for e, m in f.items():
        if e.degree == q and q > 0:
            c = list(e.coeffs)
            c[q] = c[q] * u
            e = Poly(c)
        out = out + ExpPoly.exp(e, m)
    return out


@st.composite
def order_one_bands(draw):
    f = ExpPoly.exp(Poly([0]), draw(polys(1)))
    for _ in range(draw(st.integers(1, 4))):
        f = f + ExpPoly.exp(Poly([0, draw(nonzero_gaussian)]), draw(polys(1)))
    return f


UNIMODULAR = [I, -I, QScalar(-1), (QScalar(3) + QScalar(0, 4)) / 5, (QScalar(5) - QScalar(0, 12)) / 13]



@settings(max_examples=100, deadline=None)
@given(order_one_bands(), order_one_bands())
def test_subadditivity(f, g):
    h = f * g
    if f.is_polynomial() or g.is_polynomial() or h.is_polynomial():
        return
    t = characteristic_asymptotic
    assert t(h).leading <= t(f).leading + t(g).leading + 1e-9


@settings(max_examples=100, deadline=None)
@given(order_one_bands())
def test_unit_denominator_consistency(f):
    if f.is_polynomial():
        return
    assert proximity_quotient_asymptotic(f, ExpPoly.constant(1)).leading == \
        pytest.approx(characteristic_asymptotic(f).leading, abs=1e-12)


def test_dominance_by_order():
    A, B = P("exp(z^2) + z"), P("exp(5*z)")
    ta, tb = characteristic_asymptotic(A), characteristic_asymptotic(B)
    assert tb.q < ta.q and ta.leading > 0 and tb.leading > 0


def test_surd_frequencies():
    f = P("exp(sqrt(2)*z) + exp(-z)", ScalarContext(2))
    assert characteristic_asymptotic(f).leading == pytest.approx(2 * (1 + math.sqrt(2)) / (2 * math.pi))


def test_random_triangle_oracle():
    rng = random.Random(3)
    for _ in range(20):
        ws = [QScalar(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(3)]
        if any(w.is_zero() for w in ws) or len(set(ws)) < 3:
            continue
        f = sum((ExpPoly.exp(Poly([0, w])) for w in ws), ExpPoly.constant(1))
        pts = np.array([[0.0, 0.0]] + [[complex(w).real, -complex(w).imag] for w in ws])
        try:
            expected = ConvexHull(pts).area
        except Exception:       # collinear, scipy refuses
            continue
        assert characteristic_asymptotic(f).leading == pytest.approx(expected / (2 * math.pi), rel=1e-12)
