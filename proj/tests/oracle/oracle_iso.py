#!/usr/bin/env python3
"""Brute-force oracle for isoperimetric quantities (kappa, fragments, atoms)
and the Petridis minimizer."""
import json
import os
from fractions import Fraction
from itertools import combinations


def sumset(a, b, n):
    return sorted({(x + y) % n for x in a for y in b})


def kappa_atoms(b, k, n):
    """k-th isoperimetric connectivity of b in Z/n, with fragments/atoms.
    Brute force over all subsets."""
    best = None
    frags = []
    for size in range(k, n + 1):
        for xs in combinations(range(n), size):
            s = sumset(xs, b, n)
            if n - len(s) < k:
                continue
            inc = len(s) - len(xs)
            if best is None or inc < best:
                best = inc
                frags = [xs]
            elif inc == best:
                frags.append(xs)
    if best is None:
        return {"separable": False}
    alpha = min(len(f) for f in frags)
    atoms = sorted(sorted(f) for f in frags if len(f) == alpha)
    return {"separable": True, "kappa": best, "alpha": alpha,
            "num_fragments": len(frags), "atoms": atoms}


def petridis(a, b):
    """Subset A' of a minimizing |A'+B|/|A'| exactly; ties -> smaller |A'|,
    then lexicographically smallest sorted list.  Integer sets."""
    a = sorted(a)
    best = None
    for size in range(1, len(a) + 1):
        for xs in combinations(a, size):
            s = {x + y for x in xs for y in b}
            ratio = Fraction(len(s), len(xs))
            key = (ratio, len(xs), xs)
            if best is None or key < best:
                best = key
    ratio, _, xs = best
    return {"A1": list(xs), "num": ratio.numerator, "den": ratio.denominator}


def main():
    out = {}

    # worked example: n=7 B={0,1} k=2 -> kappa=1, atoms {a,a+1}, alpha=2
    out["kappa_n7"] = kappa_atoms([0, 1], 2, 7)

    # n=11 B={0,1,2} k=2 -> kappa=2, alpha=2
    out["kappa_n11"] = kappa_atoms([0, 1, 2], 2, 11)

    # composite with subgroup atoms: n=6 B={0,3} k=1 -> atoms <3>-cosets
    out["kappa_n6"] = kappa_atoms([0, 3], 1, 6)

    # not separable: n=5, B=full group, k=1
    out["kappa_n5_full"] = kappa_atoms(list(range(5)), 1, 5)

    # k=3 sample for the suite: n=13 B={0,1,3}
    out["kappa_n13_k3"] = kappa_atoms([0, 1, 3], 3, 13)

    # petridis worked example: A=B={0,1} (integers) -> A'={0,1}, ratio 3/2
    out["pet_01"] = petridis([0, 1], [0, 1])

    # petridis with a strictly better subset: A={0,1,10}, B={0,1,2}
    out["pet_gap"] = petridis([0, 1, 10], [0, 1, 2])

    dst = os.path.join(os.path.dirname(__file__), "expected", "iso.json")
    with open(dst, "w") as f:
        json.dump(out, f, indent=1, sort_keys=True)
        f.write("\n")
    print(json.dumps(out, indent=1, sort_keys=True))


if __name__ == "__main__":
    main()
