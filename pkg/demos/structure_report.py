"""Structure report for a solution f of f'' + A f' + B f = 0 that is dual to A,
followed by a higher order equation built from derivative tables.

Run with ``python demos/structure_report.py``.
"""
from exppoly import (ScalarContext, duality_structure_report, is_solution, parse_expoly, tohge_equation,
                     tohge_tables)
from exppoly.textio import format_poly


def main():
    ctx = ScalarContext(6)
    A = parse_expoly("1 - sqrt(6)*i*exp(-z) + 2*exp(-2*z)", ctx)
    B = parse_expoly("-12", ctx)
    f = parse_expoly("1 + 3*exp(2*z) + sqrt(6)*i*exp(3*z)", ctx)
    report = duality_structure_report(A, B, f)
    for key, value in report.summary().items():
        print("%-22s %s" % (key, value))

    print("\ntables for f = exp(z^2) + 1:")
    t = tohge_tables(2)
    for j, row in enumerate(t.P):
        print("  P[%d] = %s" % (j, ", ".join(format_poly(p) for p in row)))
    print("  Q = %s" % ", ".join(format_poly(q) for q in t.Q))
    print("  zero entries:", list(t.zero_entries))

    eq = tohge_equation(3, 2, parse_expoly("z"))
    print("\norder %d equation: %s" % (eq.order, eq))
    print("solved by exp(z^3) + 1:", is_solution(eq, parse_expoly("exp(z^3) + 1")))


if __name__ == "__main__":
    main()
