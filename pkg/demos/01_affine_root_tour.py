"""A walking tour of affine root combinatorics on the BC2 system.

Run with:  python3 demos/01_affine_root_tour.py
"""

from fractions import Fraction as Q

from rgdcheck import (
    affine_reflect,
    affine_root,
    build_root_system,
    chamber_oracle,
    is_positive,
    is_prenilpotent,
    open_interval,
    simple_affine_roots,
)
from rgdcheck.roots import vec


def main():
    bc2 = build_root_system("BC", 2)
    print("BC2 roots:", ", ".join(str(tuple(map(str, a))) for a in bc2.roots))
    print("simple:", [tuple(map(str, a)) for a in bc2.simple])
    print("highest:", tuple(map(str, bc2.highest)))
    print("fundamental point:", tuple(map(str, bc2.fundamental_point)))
    print()

    simples = simple_affine_roots(bc2)
    print("simple affine roots:")
    for alpha in simples:
        print("  ", alpha, "positive:", is_positive(bc2, alpha))
    print()

    alpha = affine_root(vec(1, -1), 1)
    beta = affine_root(vec(0, 1), 0)
    print(f"reflecting {beta} in the wall of {alpha}:")
    print("  ", affine_reflect(bc2, alpha, beta))
    print("involution check:", affine_reflect(bc2, alpha, affine_reflect(bc2, alpha, beta)) == beta)
    print()

    print("positivity agrees with the chamber oracle on every root and level:")
    agree = all(
        is_positive(bc2, affine_root(a, l)) == chamber_oracle(bc2, affine_root(a, l))
        for a in bc2.roots
        for l in range(-3, 4)
    )
    print("  ", agree)
    print()

    gamma = affine_root(vec(1, 0), 0)
    delta = affine_root(vec(1, 0), 1)
    print(f"{gamma} and {delta} prenilpotent:", is_prenilpotent(gamma, delta))
    print("their open interval:", [str(x) for x in open_interval(bc2, gamma, delta)])
    s1 = affine_root(vec(1, -1), 0)
    s2 = affine_root(vec(0, 1), Q(2))
    print(f"{s1} and {s2} open interval:")
    for member in open_interval(bc2, s1, s2):
        print("  ", member)
    opp = affine_root(vec(-1, 0), 2)
    print(f"{gamma} and {opp} prenilpotent:", is_prenilpotent(gamma, opp))


if __name__ == "__main__":
    main()
