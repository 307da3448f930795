"""Leading growth of T(r,f) and the duality predicates on small inputs.

Run with ``python demos/growth_and_duality.py``.
"""
from exppoly import (are_dual, are_strongly_dual, characteristic_asymptotic, common_factor, parse_expoly,
                     proximity_quotient_asymptotic, zero_counting_asymptotic)


def main():
    f = parse_expoly("exp(z) + exp(2*z)")
    g = parse_expoly("exp(-4*z)")
    for name, h in (("f", f), ("g", g), ("f*g", f * g)):
        print("     " + characteristic_asymptotic(h).describe("T(r,%s)" % name))
    # multiplying by a dual factor shrinks the hull
    print("     " + characteristic_asymptotic(f * parse_expoly("exp(-z)")).describe("T(r,f*exp(-z))"))
    print("     " + proximity_quotient_asymptotic(f, parse_expoly("exp(-z)")).describe("m(r,f/exp(-z))"))
    print("     " + zero_counting_asymptotic(parse_expoly("exp(z) - 1")).describe("N(r,0,exp(z)-1)"))

    a = parse_expoly("1 + z*exp(z) + 2*exp(3*z)")
    b = parse_expoly("1 - exp(-z)")
    c = b + parse_expoly("2*z^2*exp(-2*z)")
    print("\ndual(a, b) = %s, strongly dual(a, b) = %s" % (are_dual(a, b), are_strongly_dual(a, b)))
    print("dual(a, c) = %s, strongly dual(a, c) = %s" % (are_dual(a, c), are_strongly_dual(a, c)))
    print("common factor of exp(4iz) + exp(6iz):", common_factor(parse_expoly("exp(4*i*z) + exp(6*i*z)")))


if __name__ == "__main__":
    main()
