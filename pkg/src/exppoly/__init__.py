"""Exact exponential polynomials over Q(i)[sqrt(r)].

The core value type is :class:`ExpPoly`, a canonical finite sum of terms
``P(z) * exp(Q(z))``.  Around it sit growth asymptotics, duality predicates,
linear differential equations with an exact solution search, generators for
families of equations with known solutions, a text format and a corpus of
worked examples.
"""
from .construct import (FreiFamily, TohgeTables, cosh_band_family, frei, intro_one_term_family,
                        one_term_family, single_band_family, tohge_equation, tohge_tables)
from .corpus import load_corpus, run_corpus
from .duality import (DualityReport, RayInfo, are_dual, are_strongly_dual, common_factor,
                      duality_structure_report, is_simple)
from .errors import (ConstantTermMissing, ContextMismatch, CorpusFormatError, ExpPolyError, InternalInconsistency,
                     InvalidParameter, LatticeViolation, MultiplierNotPolynomial, NotASolution, NotSimple,
                     NotTranscendental, OrderMismatch, OrderTooHigh, ParseError, RadicandMismatch)
from .exactla import Matrix, kernel_basis, rank, rref
from .growth import (FrequencySet, GrowthAsymptotic, Hull, characteristic_asymptotic, frequency_set,
                     hull, proximity_quotient_asymptotic, zero_counting_asymptotic)
from .ode import (LinearODE, SearchSpec, is_solution, numeric_residual, residual, search_solutions,
                  span_equals, verify_exp_solution)
from .scalar import I, ONE, ZERO, QScalar, ScalarContext, is_positive_real, scalar, to_complex_float
from .symcore import (ExpPoly, ExpTerm, NormalizedView, Poly, Z, antiderivative_exp1,
                      derivative_multipliers, differentiate, evaluate, normalize, order)
from .textio import SourceSpan, format_equation, parse_expoly, parse_poly, parse_scalar, print_expoly

__version__ = "0.1.0"

__all__ = [
    "FreiFamily",
    "TohgeTables",
    "cosh_band_family",
    "frei",
    "intro_one_term_family",
    "one_term_family",
    "single_band_family",
    "tohge_equation",
    "tohge_tables",
    "load_corpus",
    "run_corpus",
    "DualityReport",
    "RayInfo",
    "are_dual",
    "are_strongly_dual",
    "common_factor",
    "duality_structure_report",
    "is_simple",
    "ConstantTermMissing",
    "ContextMismatch",
    "CorpusFormatError",
    "ExpPolyError",
    "InternalInconsistency",
    "InvalidParameter",
    "LatticeViolation",
    "MultiplierNotPolynomial",
    "NotASolution",
    "NotSimple",
    "NotTranscendental",
    "OrderMismatch",
    "OrderTooHigh",
    "ParseError",
    "RadicandMismatch",
    "Matrix",
    "kernel_basis",
    "rank",
    "rref",
    "FrequencySet",
    "GrowthAsymptotic",
    "Hull",
    "characteristic_asymptotic",
    "frequency_set",
    "hull",
    "proximity_quotient_asymptotic",
    "zero_counting_asymptotic",
    "LinearODE",
    "SearchSpec",
    "is_solution",
    "numeric_residual",
    "residual",
    "search_solutions",
    "span_equals",
    "verify_exp_solution",
    "I",
    "ONE",
    "ZERO",
    "QScalar",
    "ScalarContext",
    "is_positive_real",
    "scalar",
    "to_complex_float",
    "ExpPoly",
    "ExpTerm",
    "NormalizedView",
    "Poly",
    "Z",
    "antiderivative_exp1",
    "derivative_multipliers",
    "differentiate",
    "evaluate",
    "normalize",
    "order",
    "SourceSpan",
    "format_equation",
    "parse_expoly",
    "parse_poly",
    "parse_scalar",
    "print_expoly",
]
