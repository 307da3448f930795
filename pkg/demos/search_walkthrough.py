"""Walk through the solution search on f'' + e^{-z} f' + alpha f = 0.

Run with ``python demos/search_walkthrough.py``.
"""
from exppoly import LinearODE, SearchSpec, frei, parse_expoly, print_expoly, search_solutions


def main():
    box = SearchSpec(w=1, q=1, j_max=6, deg_bound=2)
    print("ansatz: sum_{j=0}^{6} F_j(z) exp(j z), deg F_j <= 2\n")
    for alpha in range(-1, -10, -1):
        eq = LinearODE.second_order(parse_expoly("exp(-z)"), parse_expoly(str(alpha)))
        found = search_solutions(eq, box)
        shown = print_expoly(found[0]) if found else "none"
        print("alpha = %3d  solutions: %s" % (alpha, shown))

    print("\nonly alpha = -m^2 admits a solution; compare with the generator:")
    for m in (1, 2, 3):
        fam = frei(m)
        print("  m = %d  %s" % (m, print_expoly(fam.solution)))


if __name__ == "__main__":
    main()
