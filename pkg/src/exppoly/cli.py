"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on usage or
input errors.  Predicates such as ``duality`` are queries: they print the
answer and exit 0 either way.  ``--format json`` switches every command to
structured output in which all expressions are printed in the parser's
grammar.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import construct, corpus, duality, growth, ode
from .errors import ExpPolyError, InternalInconsistency, NotASolution
from .scalar import ScalarContext
from .symcore import normalize
from .textio import format_equation, format_scalar, parse_expoly, parse_poly, parse_scalar, print_expoly

RADICAND_ENV = "EXPPOLY_RADICAND"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Out:
    def __init__(self, fmt: str):
        self.fmt = fmt
        self.data: dict = {}
        self.lines: list[str] = []

    def put(self, key, value, text=None):
        self.data[key] = value
        if text is not None:
            self.lines.append(text)

    def say(self, text):
        self.lines.append(text)

    def flush(self, stream):
        if self.fmt == "json":
            json.dump(self.data, stream, indent=2, sort_keys=True)
            stream.write("\n")
        elif self.lines:
            stream.write("\n".join(self.lines) + "\n")


def _ctx(args) -> ScalarContext:
    return ScalarContext(args.radicand, args.tolerance)


def _expr(args, text):
    return parse_expoly(text, _ctx(args))


def _equation(args) -> ode.LinearODE:
    if args.eq:
        return ode.LinearODE.second_order(_expr(args, args.eq[0]), _expr(args, args.eq[1]))
    if args.coeffs:
        return ode.LinearODE(tuple(_expr(args, c) for c in args.coeffs))
    raise argparse.ArgumentTypeError("give the equation with --eq A B or --coeffs ...")


def _growth_out(out, res, name):
    out.put("q", res.q)
    out.put("leading", res.leading)
    out.put("pi_multiple", res.pi_multiple)
    out.put("degenerate_log", res.degenerate_log)
    out.put("text", res.describe(name), res.describe(name))
    if res.degenerate_log is None:
        out.say("leading coefficient %.10g" % res.leading)


# ---------------------------------------------------------------- commands

def cmd_normalize(args, out):
    view = normalize(_expr(args, args.expr))
    out.put("q", view.q, "q = %d" % view.q)
    out.put("f0", print_expoly(view.f0), "F0 = %s" % print_expoly(view.f0))
    bands = []
    for k, (w, F) in enumerate(view.bands, start=1):
        bands.append({"w": format_scalar(w), "F": print_expoly(F)})
        out.say("w_%d = %s, F_%d = %s" % (k, format_scalar(w), k, print_expoly(F)))
    out.put("bands", bands)
    return EXIT_OK


def cmd_char(args, out):
    _growth_out(out, growth.characteristic_asymptotic(_expr(args, args.expr)), "T(r,f)")
    return EXIT_OK


def cmd_mq(args, out):
    res = growth.proximity_quotient_asymptotic(_expr(args, args.num), _expr(args, args.den))
    _growth_out(out, res, "m(r,f/g)")
    return EXIT_OK


def cmd_zeros(args, out):
    _growth_out(out, growth.zero_counting_asymptotic(_expr(args, args.expr)), "N(r,0,f)")
    return EXIT_OK


def cmd_duality(args, out):
    f, g = _expr(args, args.f), _expr(args, args.g)
    dual = duality.are_dual(f, g)
    out.put("dual", dual, "dual: %s" % str(dual).lower())
    if args.strong:
        strong = duality.are_strongly_dual(f, g)
        out.put("strongly_dual", strong, "strongly dual: %s" % str(strong).lower())
    for name, h in (("f", f), ("g", g)):
        ray = duality.is_simple(h)
        out.put("simple_" + name, ray is not None)
        if ray is not None:
            cf = duality.common_factor(h)
            out.put("common_factor_" + name, None if cf is None else format_scalar(cf),
                    "common factor of %s: %s" % (name, "none" if cf is None else format_scalar(cf)))
    return EXIT_OK


def cmd_verify(args, out):
    eq = _equation(args)
    f = _expr(args, args.f)
    ok = ode.is_solution(eq, f)
    out.put("equation", format_equation(eq.coefficients), str(eq))
    out.put("solution", ok, "solution: %s" % str(ok).lower())
    if not ok:
        res = print_expoly(ode.residual(eq, f))
        out.put("residual", res, "residual: %s" % res)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_riccati(args, out):
    eq = _equation(args)
    ok = ode.verify_exp_solution(eq, _expr(args, args.logf))
    out.put("solution", ok, "exp(%s) solves the equation: %s" % (args.logf, str(ok).lower()))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_report(args, out):
    if not args.eq:
        raise argparse.ArgumentTypeError("report needs --eq A B")
    A, B = _expr(args, args.eq[0]), _expr(args, args.eq[1])
    try:
        rep = duality.duality_structure_report(A, B, _expr(args, args.f))
    except NotASolution as exc:
        out.put("error", str(exc), "not a solution: %s" % exc)
        return EXIT_FAIL
    summary = rep.summary()
    out.put("report", summary)
    for key in ("q", "w", "lambda", "c", "ordering_ok", "b_relation_ok", "top_identity_ok",
                "fm_equation_ok", "borel_ok"):
        out.say("%-16s %s" % (key, summary[key]))
    for pair, tags in summary["borel_classification"].items():
        out.say("borel %-10s %s" % (pair, "/".join(tags) or "-"))
    return EXIT_OK if rep.all_ok else EXIT_FAIL


def cmd_search(args, out):
    eq = _equation(args)
    spec = ode.SearchSpec(parse_scalar(args.w, _ctx(args)), args.q, args.jmax, args.deg, args.jmin)
    found = ode.search_solutions(eq, spec)
    texts = [print_expoly(f) for f in found]
    out.put("solutions", texts)
    if texts:
        out.say("%d-dimensional solution space:" % len(texts))
        for t in texts:
            out.say("  " + t)
    else:
        out.say("no solutions")
    return EXIT_OK


def cmd_construct(args, out):
    ctx = _ctx(args)
    kind = args.family
    p = args.params
    want = {"frei": 1, "oneterm": 4, "tohge": 3, "band": 2, "cosh": 2}[kind]
    if len(p) != want:
        raise argparse.ArgumentTypeError("construct %s takes %d arguments" % (kind, want))
    if kind == "frei":
        fam = construct.frei(int(p[0]))
        eq, f = fam.equation, fam.solution
    elif kind == "oneterm":
        c, b, w = (parse_scalar(x, ctx) for x in p[:3])
        eq, f = construct.one_term_family(c, b, w, parse_poly(p[3], ctx))
    elif kind == "tohge":
        q = int(p[0])
        eq = construct.tohge_equation(q, int(p[1]), parse_expoly(p[2], ctx))
        f = parse_expoly("exp(z^%d) + 1" % q, ctx)
    elif kind == "band":
        eq, f = construct.single_band_family(int(p[0]), parse_expoly(p[1], ctx))
    else:
        eq, f = construct.cosh_band_family(int(p[0]), parse_expoly(p[1], ctx))
    out.put("coefficients", [print_expoly(a) for a in eq.coefficients], str(eq))
    out.put("solution", print_expoly(f), print_expoly(f))
    return EXIT_OK


def cmd_corpus(args, out):
    rep = corpus.run_corpus(args.prefix)
    out.put("corpus", rep.as_dict(), rep.table())
    if not rep.results:
        out.say("no cases match %r" % args.prefix)
        return EXIT_FAIL
    return EXIT_OK if rep.ok else EXIT_FAIL


# ---------------------------------------------------------------- parser

def _default_radicand() -> int:
    raw = os.environ.get(RADICAND_ENV, "1")
    try:
        return int(raw)
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--radicand", type=int, default=_default_radicand(),
                        help="square-free r for sqrt(r) literals (env %s)" % RADICAND_ENV)
    common.add_argument("--tolerance", type=float, default=1e-9)
    common.add_argument("--format", choices=("text", "json"), default="text")

    eqargs = argparse.ArgumentParser(add_help=False)
    eqargs.add_argument("--eq", nargs=2, metavar=("A", "B"), help="f'' + A f' + B f = 0")
    eqargs.add_argument("--coeffs", nargs="+", metavar="C",
                        help="coefficients a_n ... a_0, highest derivative first")

    p = argparse.ArgumentParser(prog="exppoly", description="Exact exponential polynomials.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("normalize", parents=[common], help="normalized form")
    s.add_argument("expr")
    s.set_defaults(func=cmd_normalize)

    s = sub.add_parser("char", parents=[common], help="leading term of T(r,f)")
    s.add_argument("expr")
    s.set_defaults(func=cmd_char)

    s = sub.add_parser("mq", parents=[common], help="leading term of m(r,f/g)")
    s.add_argument("num")
    s.add_argument("den")
    s.set_defaults(func=cmd_mq)

    s = sub.add_parser("zeros", parents=[common], help="leading term of N(r,0,f)")
    s.add_argument("expr")
    s.set_defaults(func=cmd_zeros)

    s = sub.add_parser("duality", parents=[common], help="dual / strongly dual test")
    s.add_argument("f")
    s.add_argument("g")
    s.add_argument("--strong", action="store_true")
    s.set_defaults(func=cmd_duality)

    s = sub.add_parser("verify", parents=[common, eqargs], help="check a solution exactly")
    s.add_argument("--f", required=True)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("riccati", parents=[common, eqargs], help="check f = exp(E)")
    s.add_argument("--logf", required=True, metavar="E")
    s.set_defaults(func=cmd_riccati)

    s = sub.add_parser("report", parents=[common, eqargs], help="duality structure report")
    s.add_argument("--f", required=True)
    s.set_defaults(func=cmd_report)

    s = sub.add_parser("search", parents=[common, eqargs], help="search for solutions")
    s.add_argument("--w", default="1")
    s.add_argument("--q", type=int, default=1)
    s.add_argument("--jmax", type=int, required=True)
    s.add_argument("--jmin", type=int, default=0)
    s.add_argument("--deg", type=int, required=True)
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("construct", parents=[common], help="build an equation family")
    s.add_argument("family", choices=("frei", "oneterm", "tohge", "band", "cosh"))
    s.add_argument("params", nargs="*")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("corpus", parents=[common], help="run the example corpus")
    s.add_argument("prefix", nargs="?")
    s.set_defaults(func=cmd_corpus)
    return p


def _protect_negatives(argv: Sequence[str]) -> list[str]:
    """Keep expressions such as ``-8/3`` or ``-z`` from reading as options.

    Apart from ``-h`` every option is spelled with two dashes, so any other
    single-dash token is an expression; a leading space hides it from
    argparse and is skipped by the expression parser.
    """
    return [" " + a if a.startswith("-") and not a.startswith("--") and a != "-h" else a
            for a in argv]


def main(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    argv = _protect_negatives(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = _Out(args.format)
    try:
        status = args.func(args, out)
    except InternalInconsistency as exc:
        stderr.write("internal inconsistency: %s\n" % exc)
        return EXIT_FAIL
    except (ExpPolyError, argparse.ArgumentTypeError, ValueError, ZeroDivisionError) as exc:
        stderr.write("error: %s\n" % exc)
        return EXIT_USAGE
    out.flush(stdout)
    return status


if __name__ == "__main__":  # pragma: no cover
    main_entry()


def main_entry() -> None:
    try:
        code = main()
        sys.stdout.flush()
    except BrokenPipeError:
        # reader went away (e.g. piped into head); silence the flush at exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        code = 0
    sys.exit(code)
