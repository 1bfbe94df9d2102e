#!/usr/bin/env python3
"""Walk through the Newton-basis example (nodes 1, 0, 2) for given coefficients.

    python scripts/newton_example.py --a 1 1 1 1 --b 1 1 1
"""
import argparse

from bezout_subres import (
    PolyInBasis,
    bezout_matrix_general,
    bezout_matrix_power,
    bezout_subresultant,
    coefficient_c_omega,
    make_newton_basis,
    sylvester_subresultant,
    transition_matrix,
    truncate_rows,
)
from bezout_subres.poly import as_rational, format_poly, format_rational


def show(title, rows):
    print(title)
    width = max(len(format_rational(v)) for r in rows for v in r)
    for r in rows:
        print("   " + "  ".join(format_rational(v).rjust(width) for v in r))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--a", nargs=4, default=["1", "1", "1", "1"], help="a0 a1 a2 a3")
    parser.add_argument("--b", nargs=3, default=["1", "1", "1"], help="b0 b1 b2")
    parser.add_argument("--k", type=int, default=1)
    args = parser.parse_args()

    nu = make_newton_basis([1, 0, 2])
    F = PolyInBasis(nu, [as_rational(v) for v in args.a])
    G = PolyInBasis(nu, [as_rational(v) for v in args.b])
    Fp, Gp = F.to_power(), G.to_power()
    n, m = Fp.degree, Gp.degree
    print("basis:", ", ".join(f"nu{i} = {format_poly(w)}" for i, w in enumerate(nu.omegas)))
    print(f"F = {format_poly(Fp)}\nG = {format_poly(Gp)}")

    B_nu = bezout_matrix_general(F, G)
    show("Bezout matrix in nu:", B_nu.rows())
    show("Bezout matrix in powers of x:", bezout_matrix_power(Fp, Gp).rows())
    show(f"U (x_bar = U nu_bar), dim {n}:", transition_matrix(nu, n))
    show(f"rows kept for k = {args.k}:", truncate_rows(B_nu, args.k).rows)
    print(f"c = {format_rational(coefficient_c_omega(n, m, args.k, Fp.lc))}")

    S = bezout_subresultant(F, G, args.k)
    terms = " + ".join(f"({format_rational(c)})*nu{i}" for i, c in enumerate(S.coeffs))
    print(f"S_{args.k} = {terms or '0'}")
    print(f"       = {format_poly(S.to_power())}")
    print(f"Sylvester oracle: {format_poly(sylvester_subresultant(Fp, Gp, args.k))}")


if __name__ == "__main__":
    main()
