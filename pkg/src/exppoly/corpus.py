"""Registry of worked examples and displayed identities, plus a runner.

Cases live in YAML files under ``corpus_data/``, one file per topic.  A file
holds a ``cases`` list and an optional ``excluded`` list.  Each case has:

``id``
    Unique string; ids starting with a group name allow prefix filtering.
``radicand``
    Square-free integer for the scalar context (default 1).
``equation``
    Coefficient strings, highest derivative first.
``generator``
    Alternative to ``equation``/``solution``: ``{name: ..., args: [...]}``
    naming a constructor from :mod:`exppoly.construct`.
``solution``, ``exp_solution_log``
    Expressions for f, or for E in ``f = exp(E)``.
``params``
    Mapping of placeholder names to value lists.  The case is expanded
    over the cartesian product; each ``{name}`` in a string is replaced
    by the parenthesised value, and the expanded id gets ``[name=value]``.
``checks``
    List of dicts with a ``kind`` key; see :data:`CHECK_KINDS`.
``annotations``
    Free-form notes (typo corrections, denominator clearing, rescaling).
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Callable, Optional

import yaml

from . import construct, duality, growth
from .errors import CorpusFormatError, ExpPolyError
from .ode import LinearODE, SearchSpec, is_solution, residual, search_solutions, span_equals, verify_exp_solution
from .scalar import ONE, ScalarContext, scalar
from .symcore import ExpPoly, Poly, antiderivative_exp1
from .textio import parse_expoly, parse_scalar, print_expoly

__all__ = [
    "CorpusCase",
    "CheckResult",
    "CorpusReport",
    "CHECK_KINDS",
    "load_corpus",
    "run_corpus",
    "run_case",
]

GROWTH_ATOL = 1e-9


@dataclass
class CorpusCase:
    id: str
    ctx: ScalarContext
    equation: Optional[LinearODE] = None
    solution: Optional[ExpPoly] = None
    exp_solution_log: Optional[ExpPoly] = None
    checks: list = field(default_factory=list)
    annotations: list = field(default_factory=list)
    source: str = ""

    def parse(self, text: str) -> ExpPoly:
        return parse_expoly(str(text), self.ctx)


@dataclass(frozen=True)
class CheckResult:
    case_id: str
    kind: str
    passed: bool
    detail: str


@dataclass
class CorpusReport:
    results: list
    excluded: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return bool(self.results) and all(r.passed for r in self.results)

    @property
    def failures(self) -> list:
        return [r for r in self.results if not r.passed]

    def table(self) -> str:
        width = max((len(r.case_id) for r in self.results), default=4)
        lines = []
        for r in self.results:
            mark = "PASS" if r.passed else "FAIL"
            lines.append("%-4s  %-*s  %-18s %s" % (mark, width, r.case_id, r.kind, r.detail))
        n_fail = len(self.failures)
        lines.append("%d checks, %d failed, %d excluded" % (len(self.results), n_fail, len(self.excluded)))
        return "\n".join(lines)

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "results": [r.__dict__ for r in self.results],
            "excluded": list(self.excluded),
        }


# ---------------------------------------------------------------- loading

def _substitute(obj, values: dict):
    if isinstance(obj, str):
        for k, v in values.items():
            if obj == "{%s}" % k:
                return v
            obj = obj.replace("{%s}" % k, "(%s)" % v)
        return obj
    if isinstance(obj, list):
        return [_substitute(o, values) for o in obj]
    if isinstance(obj, dict):
        return {k: _substitute(v, values) for k, v in obj.items()}
    return obj


def _expand(raw: dict) -> list[dict]:
    params = raw.get("params") or {}
    if not params:
        return [raw]
    names = sorted(params)
    out = []
    for combo in itertools.product(*(params[n] for n in names)):
        values = {n: str(v) for n, v in zip(names, combo)}
        body = {k: v for k, v in raw.items() if k != "params"}
        body = _substitute(body, values)
        body["id"] = "%s[%s]" % (raw["id"], ",".join("%s=%s" % (n, values[n]) for n in names))
        body["_values"] = values
        out.append(body)
    return out


def _generator_args(args, ctx: ScalarContext) -> list:
    out = []
    for a in args:
        if isinstance(a, int):
            out.append(a)
        elif str(a).strip().lstrip("-").isdigit():
            out.append(int(a))
        else:
            out.append(parse_expoly(str(a), ctx))
    return out


def _as_poly(f) -> Poly:
    return Poly.constant(f) if isinstance(f, int) else f.as_poly()


def _as_scalar(f):
    if isinstance(f, int):
        return scalar(f)
    if not f.is_constant():
        raise CorpusFormatError("expected a constant, got %s" % f)
    return f.as_poly().coeff(0)


def _run_generator(spec: dict, ctx: ScalarContext):
    name = spec.get("name")
    args = _generator_args(spec.get("args", []), ctx)
    if name == "frei":
        fam = construct.frei(*args)
        return fam.equation, fam.solution
    if name == "one_term":
        c, b, w, P = args
        return construct.one_term_family(_as_scalar(c), _as_scalar(b), _as_scalar(w), _as_poly(P))
    if name == "intro_one_term":
        b, w, P = args
        b, w = _as_scalar(b), _as_scalar(w)
        eq = construct.intro_one_term_family(b, w, _as_poly(P))
        return eq, ExpPoly.constant(ONE) + ExpPoly.exp(Poly.monomial(1, w), Poly.constant(b))
    if name == "tohge":
        q, j, H = args
        H = ExpPoly.constant(scalar(H)) if isinstance(H, int) else H
        eq = construct.tohge_equation(q, j, H)
        return eq, parse_expoly("exp(z^%d) + 1" % q, ctx)
    if name == "single_band":
        return construct.single_band_family(*args)
    if name == "cosh_band":
        return construct.cosh_band_family(*args)
    raise CorpusFormatError("unknown generator %r" % name)


def _build_case(raw: dict, source: str) -> CorpusCase:
    if "id" not in raw:
        raise CorpusFormatError("case without id in %s" % source)
    cid = raw["id"]
    if not raw.get("checks"):
        raise CorpusFormatError("case %s has no checks" % cid)
    try:
        ctx = ScalarContext(int(raw.get("radicand", 1)))
        case = CorpusCase(cid, ctx, source=source,
                          checks=list(raw["checks"]), annotations=list(raw.get("annotations", [])))
        if "generator" in raw:
            case.equation, case.solution = _run_generator(raw["generator"], ctx)
        if "equation" in raw:
            case.equation = LinearODE(tuple(case.parse(c) for c in raw["equation"]))
        if "solution" in raw:
            case.solution = case.parse(raw["solution"])
        if "exp_solution_log" in raw:
            case.exp_solution_log = case.parse(raw["exp_solution_log"])
    except ExpPolyError as exc:
        raise CorpusFormatError("case %s: %s" % (cid, exc)) from exc
    for chk in case.checks:
        if not isinstance(chk, dict) or chk.get("kind") not in CHECK_KINDS:
            raise CorpusFormatError("case %s: bad check %r" % (cid, chk))
    return case


def _data_files():
    root = resources.files("exppoly") / "corpus_data"
    return sorted((p for p in root.iterdir() if p.name.endswith(".yaml")), key=lambda p: p.name)


def load_corpus(prefix: Optional[str] = None, files=None) -> tuple[list[CorpusCase], list[dict]]:
    """Parse and expand every case whose id starts with ``prefix``.

    Returns ``(cases, excluded)`` sorted by id.
    """
    cases, excluded, seen = [], [], set()
    for path in (files if files is not None else _data_files()):
        with open(path, encoding="utf-8") if isinstance(path, str) else path.open(encoding="utf-8") as fh:
            try:
                doc = yaml.safe_load(fh) or {}
            except yaml.YAMLError as exc:
                raise CorpusFormatError("%s: %s" % (path, exc)) from exc
        if not isinstance(doc, dict):
            raise CorpusFormatError("%s: top level must be a mapping" % path)
        name = getattr(path, "name", str(path))
        raws = doc.get("cases", [])
        if not isinstance(raws, list):
            raise CorpusFormatError("%s: cases must be a list" % path)
        for raw in raws:
            if not isinstance(raw, dict) or "id" not in raw:
                raise CorpusFormatError("%s: every case needs an id" % path)
            if prefix and not str(raw.get("id", "")).startswith(prefix):
                continue
            for body in _expand(raw):
                if body["id"] in seen:
                    raise CorpusFormatError("duplicate case id %s" % body["id"])
                seen.add(body["id"])
                cases.append(_build_case(body, name))
        for ex in doc.get("excluded", []):
            if not prefix or str(ex.get("id", "")).startswith(prefix):
                excluded.append(ex)
    cases.sort(key=lambda c: c.id)
    return cases, excluded


# ---------------------------------------------------------------- checks

def _need(case: CorpusCase, *attrs):
    for a in attrs:
        if getattr(case, a) is None:
            raise CorpusFormatError("case %s needs %s" % (case.id, a))


def _eq_override(case: CorpusCase, chk: dict) -> LinearODE:
    if "equation" in chk:
        return LinearODE(tuple(case.parse(c) for c in chk["equation"]))
    _need(case, "equation")
    return case.equation


def _check_residual_zero(case, chk):
    eq = _eq_override(case, chk)
    f = case.parse(chk["solution"]) if "solution" in chk else case.solution
    if f is None:
        raise CorpusFormatError("case %s needs a solution" % case.id)
    ok = is_solution(eq, f)
    return ok, "residual 0" if ok else "residual %s" % print_expoly(residual(eq, f))


def _check_residual_nonzero(case, chk):
    ok, detail = _check_residual_zero(case, chk)
    return not ok, detail


def _check_riccati(case, chk):
    _need(case, "exp_solution_log")
    eq = _eq_override(case, chk)
    ok = verify_exp_solution(eq, case.exp_solution_log)
    return ok, "u-recursion sum is zero" if ok else "u-recursion sum nonzero"


def _check_duality_report(case, chk):
    _need(case, "solution")
    eq = _eq_override(case, chk)
    if not eq.is_normalized_second_order():
        raise CorpusFormatError("case %s: duality-report needs f'' + A f' + B f" % case.id)
    rep = duality.duality_structure_report(eq.coefficient(1), eq.coefficient(0), case.solution)
    want = chk.get("fields", ["ordering_ok", "b_relation_ok", "top_identity_ok", "fm_equation_ok"])
    bad = [k for k in want if not getattr(rep, k)]
    return not bad, "all of %s" % ",".join(want) if not bad else "false: %s" % ",".join(bad)


def _expected_leading(chk) -> float:
    if "expected_over_pi" in chk:
        return float(Fraction(str(chk["expected_over_pi"]))) / math.pi
    if "expected" in chk:
        return float(chk["expected"])
    raise CorpusFormatError("growth check needs expected or expected_over_pi")


_GROWTH_NAMES = {"T": "T(r,f)", "m": "m(r,f/g)", "N": "N(r,0,f)"}


def _check_growth(case, chk):
    fn = chk.get("function", "T")
    f = case.parse(chk["f"])
    if fn == "T":
        res = growth.characteristic_asymptotic(f)
    elif fn == "N":
        res = growth.zero_counting_asymptotic(f)
    elif fn == "m":
        res = growth.proximity_quotient_asymptotic(f, case.parse(chk["g"]))
    else:
        raise CorpusFormatError("unknown growth function %r" % fn)
    want = _expected_leading(chk)
    delta = abs(res.leading - want)
    return delta <= float(chk.get("atol", GROWTH_ATOL)), "%s (delta %.2e)" % (res.describe(_GROWTH_NAMES[fn]), delta)


def _check_pair(pred: Callable):
    def run(case, chk):
        got = pred(case.parse(chk["f"]), case.parse(chk["g"]))
        want = bool(chk["expected"])
        return got == want, "got %s" % got
    return run


def _check_simple(case, chk):
    got = duality.is_simple(case.parse(chk["f"])) is not None
    return got == bool(chk["expected"]), "got %s" % got


def _check_common_factor(case, chk):
    got = duality.common_factor(case.parse(chk["f"]))
    want = chk.get("expected")
    want = None if want is None else parse_scalar(str(want), case.ctx)
    return got == want, "got %s" % got


def _check_search(case, chk):
    eq = _eq_override(case, chk)
    spec = SearchSpec(parse_scalar(str(chk.get("w", 1)), case.ctx), int(chk.get("q", 1)),
                      int(chk["j_max"]), int(chk["deg"]), int(chk.get("j_min", 0)))
    found = search_solutions(eq, spec)
    if "expected" in chk:
        expected = [case.parse(e) for e in chk["expected"]]
    else:
        _need(case, "solution")
        expected = [case.solution]
    ok = len(found) == len(expected) and span_equals(found, expected)
    shown = ", ".join(print_expoly(f) for f in found) or "no solutions"
    return ok, "found %s" % shown


def _check_wf_derivative(case, chk):
    f = case.parse(chk["f"]) if "f" in chk else case.solution
    a = growth.frequency_set(f).points
    b = growth.frequency_set(f.derivative()).points
    return a == b, "W_f %s W_f'" % ("==" if a == b else "!=")


def _check_tables(case, chk):
    t = construct.tohge_tables(int(chk["q"]))
    ok = construct.check_tohge_identity_i(t) and construct.check_tohge_identity_ii(t)
    for key, text in (chk.get("P") or {}).items():
        j, k = (int(s) for s in str(key).split(","))
        ok = ok and t.P[j][k] == case.parse(text).as_poly()
    for key, text in (chk.get("Q") or {}).items():
        ok = ok and t.Q_(int(key)) == case.parse(text).as_poly()
    return ok, "identities and table values" + ("" if ok else " differ")


def _check_order(case, chk):
    f = case.parse(chk["f"]) if "f" in chk else case.solution
    return f.order == int(chk["expected"]), "order %d" % f.order


def _check_antiderivative(case, chk):
    f = case.parse(chk["f"])
    got = antiderivative_exp1(f)
    ok = got == case.parse(chk["expected"]) and got.derivative() == f
    return ok, "primitive %s" % print_expoly(got)


CHECK_KINDS: dict[str, Callable[[CorpusCase, dict], tuple]] = {
    "residual-zero": _check_residual_zero,
    "residual-nonzero": _check_residual_nonzero,
    "riccati": _check_riccati,
    "duality-report": _check_duality_report,
    "growth-leading": _check_growth,
    "dual": _check_pair(duality.are_dual),
    "strong-duality": _check_pair(duality.are_strongly_dual),
    "simple": _check_simple,
    "common-factor": _check_common_factor,
    "search-recovery": _check_search,
    "wf-derivative": _check_wf_derivative,
    "derivative-tables": _check_tables,
    "order": _check_order,
    "antiderivative": _check_antiderivative,
}


def run_case(case: CorpusCase) -> list[CheckResult]:
    out = []
    for chk in case.checks:
        kind = chk["kind"]
        try:
            ok, detail = CHECK_KINDS[kind](case, chk)
        except CorpusFormatError:
            raise
        except ExpPolyError as exc:
            ok, detail = False, "%s: %s" % (type(exc).__name__, exc)
        out.append(CheckResult(case.id, kind, bool(ok), detail))
    return out


def run_corpus(prefix: Optional[str] = None) -> CorpusReport:
    """Run every check of every case whose id starts with ``prefix``."""
    cases, excluded = load_corpus(prefix)
    results = []
    for case in cases:
        results.extend(run_case(case))
    return CorpusReport(results, excluded)
