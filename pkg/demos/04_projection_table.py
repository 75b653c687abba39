"""The restriction map from absolute A4 roots to relative BC2 roots in SU(5,2).

Every root e_i - e_j of the ambient special linear group restricts to a
relative root of the split torus (or to zero when both indices sit in the
anisotropic middle block, which cannot happen for SU(5,2) since that block
is one dimensional).

Run with:  python3 demos/04_projection_table.py
"""

from fractions import Fraction as Q

from rgdcheck import special_unitary


def main():
    su = special_unitary(5, 2)
    desc = su.descriptor()
    print(f"SU(dim={desc['dim']}, witt={desc['witt']}, disc={desc['disc']}) "
          f"with relative system {desc['relative_system']}")
    print()
    print(f"{'absolute':<14}{'relative':<14}{'positive':<10}{'module dim'}")
    dims = desc["module_dims"]
    for i in range(5):
        for j in range(5):
            if i == j:
                continue
            absolute = [Q(0)] * 5
            absolute[i], absolute[j] = Q(1), Q(-1)
            rel = su.project_root(tuple(absolute))
            name = f"e{i}-e{j}"
            if rel is None:
                print(f"{name:<14}{'0':<14}{'':<10}")
                continue
            rel_name = ",".join(str(x) for x in rel)
            pos = "yes" if su.system.is_positive_root(rel) else "no"
            print(f"{name:<14}{rel_name:<14}{pos:<10}{dims[rel_name]}")
    print()
    print("upper triangular absolute roots (i < j) restrict to positive")
    print("relative roots, so the Borel subgroups are compatible.")


if __name__ == "__main__":
    main()
