"""Independent checks of the degree-7 fixture pair (needs sympy, python-flint).

Run: python3 data/validate_fixtures.py
"""
from collections import Counter

import flint
import sympy

x, y = sympy.symbols("x y")


def read_poly(path):
    for line in open(path):
        line = line.split("#")[0].strip()
        if line:
            return [int(t) for t in line.split()]


def main():
    import os

    here = os.path.dirname(os.path.abspath(__file__))
    c1 = read_poly(os.path.join(here, "trinks7.poly"))
    c2 = read_poly(os.path.join(here, "trinks7_partner.poly"))
    f1 = sympy.Poly(list(reversed(c1)), x)
    f2 = sympy.Poly(list(reversed(c2)), x)

    for name, c, f in (("f1", c1, f1), ("f2", c2, f2)):
        _, facs = flint.fmpz_poly(c).factor()
        print(name, f.as_expr(), "irreducible:", len(facs) == 1 and facs[0][1] == 1)
        print("  disc", sympy.factorint(sympy.discriminant(f)))

    # Splitting types agree away from 3 and 7, and their frequencies match
    # the cycle types of GL(3,2) on 7 points: 1, 21, 56, 42, 48 out of 168.
    freq = Counter()
    agree = True
    total = 0
    for p in sympy.primerange(2, 10001):
        if p in (3, 7):
            continue
        t1 = sorted((g.degree() for g, e in flint.nmod_poly(c1, p).factor()[1] for _ in range(e)), reverse=True)
        t2 = sorted((g.degree() for g, e in flint.nmod_poly(c2, p).factor()[1] for _ in range(e)), reverse=True)
        agree = agree and t1 == t2
        freq[tuple(t1)] += 1
        total += 1
    print("types agree at every unramified p <= 10^4:", agree)
    for t, n in sorted(freq.items()):
        print("  ", t, round(n / total, 4))
    print("  no 5-cycles (group is not A7 or S7):", all(5 not in t for t in freq))

    # Trager norm: factors of f2 over Q(root of f1) of degree d give norm
    # factors of degree 7d. A linear factor would make the fields isomorphic.
    for k in range(1, 6):
        norm = sympy.resultant(sympy.Poly(f1.as_expr().subs(x, y), y), sympy.Poly(f2.as_expr().subs(x, x - k * y), y), y)
        n = sympy.Poly(norm, x)
        if sympy.gcd(n, n.diff(x)).degree() == 0:
            degs = sorted(g.degree() for g, _ in sympy.factor_list(n)[1])
            print("norm shift", k, "factor degrees", degs, "-> f2 over Q(a1):", [d // 7 for d in degs])
            break


if __name__ == "__main__":
    main()
