import math

import pytest
from hypothesis import given, settings, strategies as st

from exppoly import ExpPoly, Poly, QScalar, ScalarContext, frei, one_term_family, parse_expoly
from exppoly.duality import (are_dual, are_strongly_dual, common_factor, duality_structure_report,
                             is_simple)
from exppoly.errors import ConstantTermMissing, NotASolution, NotSimple, NotTranscendental
from exppoly.symcore import normalize

C6 = ScalarContext(6)
P = parse_expoly


def test_is_simple():
    ray = is_simple(P("exp(4*i*z) + exp(6*i*z)"))
    assert ray is not None and ray.theta_float == pytest.approx(math.pi / 2)
    assert is_simple(P("exp(z) + exp(i*z)")) is None
    ray = is_simple(P("1 + z*exp(z) + 2*exp(3*z)"))
    assert ray is not None and ray.theta_float == pytest.approx(0)
    with pytest.raises(NotTranscendental):
        is_simple(P("z^2"))


def test_common_factor():
    assert common_factor(P("exp(4*i*z) + exp(6*i*z)")) == QScalar(0, 2)
    assert common_factor(P("exp((2 - i)*z)")) == QScalar(2, -1)
    assert common_factor(P("exp(2/3*z) + exp(z/2)")) == QScalar(1, 0) / 6
    with pytest.raises(NotSimple):
        common_factor(P("exp(z) + exp(i*z)"))


def test_linearly_dependent_but_not_commensurable():
    f = P("exp(z) + exp(sqrt(2)*z) + exp((sqrt(2) - 1)*z)", ScalarContext(2))
    assert is_simple(f) is not None
    assert common_factor(f) is None


def test_dual_order_two_pair():
    f = P("z^2*exp(-i*z) + z*exp(z^2) + exp(2*z^2 + (1 - i)*z)")
    g = P("2*exp(-z^2 + (1 + i)*z) + z^2*exp(-4*z^2 + i*z)")
    assert are_dual(f, g) and are_dual(g, f)
    assert not are_dual(f, f)


def test_dual_sqrt6_pair():
    f = P("1 + 3*exp(2*z) + sqrt(6)*i*exp(3*z)", C6)
    g = P("1 - sqrt(6)*i*exp(-z) + 2*exp(-2*z)", C6)
    assert are_dual(f, g)


def test_dual_needs_equal_orders():
    assert not are_dual(P("exp(z^2)"), P("exp(-z)"))


def test_strong_duality():
    f = P("1 + z*exp(z) + 2*exp(3*z)")
    g = P("1 - exp(-z)")
    h = P("1 - exp(-z) + 2*z^2*exp(-2*z)")
    assert are_strongly_dual(f, g) and are_strongly_dual(g, f)
    assert not are_strongly_dual(f, h)
    assert are_dual(f, h)
    assert are_strongly_dual(P("exp(z)"), P("exp(-z)"))


def test_strong_duality_fails_without_shared_factor():
    f = P("exp(z) + exp(sqrt(2)*z)", ScalarContext(2))
    assert are_dual(f, P("exp(-z)"))
    assert not are_strongly_dual(f, P("exp(-z)"))


# random simple pairs: frequencies a_j * w against -b_i * w
_units = st.sampled_from([QScalar(1), QScalar(0, 1), QScalar(1, 1), QScalar(-2, 1)])
_mults = st.lists(st.integers(1, 5), min_size=1, max_size=3, unique=True)


def _bands(d, ks, const):
    f = ExpPoly.constant(const)
    for k in ks:
        f = f + ExpPoly.exp(Poly([0, d * k]), Poly([1, k]))
    return f


@settings(max_examples=200, deadline=None)
@given(_units, _mults, _mults, st.booleans(), st.integers(1, 3))
def test_duality_implication_chain(d, a, b, flip, scale):
    f = _bands(d, a, 1)
    g = _bands(-d if flip else d * QScalar(0, 1), b, 1)
    strong, dual = are_strongly_dual(f, g), are_dual(f, g)
    assert strong == are_strongly_dual(g, f) and dual == are_dual(g, f)
    if strong:
        assert dual
    if dual:
        assert is_simple(f) is not None and is_simple(g) is not None
    # scaling every frequency scales the canonical common factor
    fs = _bands(d * scale, a, 1)
    assert common_factor(fs) == common_factor(f) * scale
    if strong:
        # (f - 1)(g - 1) has frequencies on the lattice of one sign
        w = d
        prod = (f - ExpPoly.constant(1)) * (g - ExpPoly.constant(1))
        if not prod.is_polynomial():
            ratios = [(x / w) for x in normalize(prod).frequencies]
            assert all(r.is_rational() and r.as_fraction().denominator == 1 for r in ratios)
            signs = {r.as_fraction() > 0 for r in ratios}
            assert len(signs) == 1


def test_report_frei_two():
    fam = frei(2)
    A, B = fam.equation.coefficients[1], fam.equation.coefficients[2]
    rep = duality_structure_report(A, B, fam.solution)
    assert rep.all_ok
    assert rep.w_list == [QScalar(1), QScalar(2)] and rep.lambda_list == [QScalar(1)]
    assert rep.c == QScalar(1)


def test_report_sqrt6_example():
    A = P("1 - sqrt(6)*i*exp(-z) + 2*exp(-2*z)", C6)
    f = P("1 + 3*exp(2*z) + sqrt(6)*i*exp(3*z)", C6)
    rep = duality_structure_report(A, ExpPoly.constant(-12), f)
    assert rep.ordering_ok and rep.b_relation_ok and rep.top_identity_ok and rep.fm_equation_ok
    assert rep.lambda_list[-1] == rep.w_list[0] == QScalar(2)
    assert rep.summary()["borel_ok"]


def test_report_one_term_family_rotated():
    eq, f = one_term_family(QScalar(2), QScalar(1, 1), QScalar(0, 3), Poly([1, 1]))
    rep = duality_structure_report(eq.coefficients[1], eq.coefficients[2], f)
    assert rep.all_ok


def test_report_errors():
    fam = frei(2)
    A, B = fam.equation.coefficients[1], fam.equation.coefficients[2]
    with pytest.raises(NotASolution):
        duality_structure_report(A, B, P("1 + exp(z)"))
    with pytest.raises(NotTranscendental):
        duality_structure_report(P("exp(-z)"), ExpPoly(), ExpPoly.constant(1))
    # f = e^{2z} solves f'' + (e^{-z} - 2) f' - 2 e^{-z} f = 0 but has no constant term
    with pytest.raises(ConstantTermMissing):
        duality_structure_report(P("exp(-z) - 2"), P("-2*exp(-z)"), P("exp(2*z)"))
