import pytest
from hypothesis import given, settings, strategies as st

from exppoly import ExpPoly, Poly, ScalarContext, evaluate, parse_expoly
from exppoly import ode
from exppoly.errors import InternalInconsistency, InvalidParameter, LatticeViolation, MultiplierNotPolynomial
from exppoly.ode import (LinearODE, SearchSpec, is_solution, numeric_residual, residual, search_solutions,
                         span_equals, spot_points, verify_exp_solution)

from oracles import gaussian, sympy_is_zero, to_sympy, zs

P = parse_expoly
C6 = ScalarContext(6)


def second(A, B, ctx=None):
    return LinearODE.second_order(P(A, ctx) if ctx else P(A), P(B, ctx) if ctx else P(B))


def test_residual_one_term_example():
    eq = second("z - 1 + z*exp(-z)", "-z")
    assert residual(eq, P("exp(z) + 1")).is_zero()


def test_residual_of_zero():
    assert residual(second("exp(-z)", "3"), ExpPoly()).is_zero()


def test_residual_direct_substitution():
    assert residual(second("0", "-2"), P("exp(z)")) == P("-exp(z)")


def test_residual_against_sympy():
    eq = second("1 - sqrt(6)*i*exp(-z) + 2*exp(-2*z)", "-12", C6)
    f = P("1 + 3*exp(2*z) + exp(z)", C6)
    expr = to_sympy(f).diff(zs, 2) + to_sympy(eq.coefficients[1]) * to_sympy(f).diff(zs) \
        + to_sympy(eq.coefficients[2]) * to_sympy(f)
    assert sympy_is_zero(expr - to_sympy(residual(eq, f)))


def test_is_solution_sqrt6_example():
    eq = second("1 - sqrt(6)*i*exp(-z) + 2*exp(-2*z)", "-12", C6)
    assert is_solution(eq, P("1 + 3*exp(2*z) + sqrt(6)*i*exp(3*z)", C6))


def test_two_term_example_printed_form_fails():
    # the printed solution at c = 0 is 1 + e^{2z} + e^{3z}; it does not solve
    # the printed equation, while 1 + e^z + e^{2z} does
    eq = second("-5/3 + 2/3*exp(-z)", "-2/3")
    assert not is_solution(eq, P("1 + (exp(z) + 1)*exp(2*z)"))
    assert is_solution(eq, P("1 + (1 + exp(z))*exp(z)"))
    found = search_solutions(eq, SearchSpec(1, 1, 4, 1))
    assert span_equals(found, [P("1 + exp(z) + exp(2*z)")])


def test_is_solution_rejects():
    assert not is_solution(second("0", "1"), P("exp(z)"))


def test_oracle_disagreement_raises(monkeypatch):
    monkeypatch.setattr(ode, "numeric_residual", lambda eq, f, z0: (1.0 + 0j, 1.0))
    with pytest.raises(InternalInconsistency):
        is_solution(second("0", "-1"), P("exp(z)"))


def test_numeric_residual_matches_evaluation():
    eq = second("exp(-z)", "z")
    f = P("z*exp(2*z) + 1")
    for z0 in spot_points():
        val, _ = numeric_residual(eq, f, z0)
        assert abs(val - evaluate(residual(eq, f), z0)) < 1e-9


def test_spot_points_in_annulus_and_reproducible():
    pts = spot_points()
    assert len(pts) == 5 and pts == spot_points()
    assert all(0.5 <= abs(z) <= 1.5 for z in pts)


def test_riccati_zero_free_solution():
    eq = second("-5/3 + 2/3*exp(-z)", "-8/3")
    assert verify_exp_solution(eq, P("2/3*exp(-z) + 8/3*z"))
    assert not verify_exp_solution(eq, P("2/3*exp(-z) + 7/3*z"))


def test_riccati_trivial_cases():
    assert verify_exp_solution(LinearODE((1, -1)), P("z"))
    assert verify_exp_solution(LinearODE((1, 0, P("-4*z^2 - 2"))), P("z^2"))


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(-2, 2), min_size=1, max_size=3), gaussian)
def test_riccati_agrees_with_expansion(cs, shift):
    E = Poly([0] + cs)
    if E.is_zero():
        return
    dE = ExpPoly.from_poly(E.derivative())
    for B in (-(dE.derivative() + dE * dE), -(dE.derivative() + dE * dE) + ExpPoly.constant(shift)):
        eq = LinearODE((1, 0, B))
        Ee = ExpPoly.from_poly(E)
        assert verify_exp_solution(eq, Ee) == is_solution(eq, ExpPoly.exp(E))


def test_search_frei_two():
    found = search_solutions(second("exp(-z)", "-4"), SearchSpec(1, 1, 4, 2))
    assert span_equals(found, [P("1 + 4*exp(z) + 6*exp(2*z)")])
    assert found == [P("1 + 4*exp(z) + 6*exp(2*z)")]


def test_search_no_solution():
    assert search_solutions(second("exp(-z)", "-2"), SearchSpec(1, 1, 4, 2)) == []


def test_search_f2_equation():
    found = search_solutions(second("-8/3 + 2/3*exp(-z)", "4/3"), SearchSpec(1, 1, 3, 1))
    assert span_equals(found, [P("1 - 2*exp(z) - 1/2*exp(2*z)")])


def test_search_negative_bands():
    # bands below zero are searched but carry nothing here
    eq = second("1 - sqrt(6)*i*exp(-z) + 2*exp(-2*z)", "-12", C6)
    found = search_solutions(eq, SearchSpec(1, 1, 3, 0, j_min=-2))
    assert span_equals(found, [P("1 + 3*exp(2*z) + sqrt(6)*i*exp(3*z)", C6)])


def test_search_higher_order_and_dimension():
    # f'' - f = 0 over bands -1..1, degree 0: span {e^z, e^{-z}}
    found = search_solutions(LinearODE((1, 0, -1)), SearchSpec(1, 1, 1, 0, j_min=-1))
    assert len(found) == 2
    assert span_equals(found, [P("exp(z)"), P("exp(-z)")])
    assert not span_equals(found, [P("exp(z)")])


def test_search_lattice_errors():
    with pytest.raises(LatticeViolation):
        search_solutions(second("exp(-z/2)", "1"), SearchSpec(1, 1, 2, 1))
    with pytest.raises(LatticeViolation):
        search_solutions(second("exp(z^2)", "1"), SearchSpec(1, 1, 2, 1))
    with pytest.raises(MultiplierNotPolynomial):
        search_solutions(second("exp(z^2 + z)", "1"), SearchSpec(1, 2, 2, 1))


def test_search_spec_validation():
    with pytest.raises(InvalidParameter):
        SearchSpec(0, 1, 2, 1)
    with pytest.raises(InvalidParameter):
        SearchSpec(1, 1, 0, 1, j_min=2)
    with pytest.raises(InvalidParameter):
        LinearODE((0, 1))


def test_equation_str():
    assert str(second("exp(-z)", "-4")) == "f'' + exp(-z)*f' - 4*f = 0"
