"""Random Reidemeister walks: check determinant, Jones polynomial and writhe bookkeeping.

Prints per-base counts of each move kind and any invariant failures.
"""

import argparse
import collections
import random

from tanglehom.bracket import jones_polynomial
from tanglehom.branched import knot_determinant
from tanglehom.corpus import knot
from tanglehom.diagram import writhe
from tanglehom.moves import random_move


def walk(name, sequences, steps, rng):
    base = knot(name)
    det, jones = knot_determinant(base), jones_polynomial(base)
    kinds = collections.Counter()
    failures = 0
    for _ in range(sequences):
        d = base
        for _ in range(steps):
            w = writhe(d)
            move, d = random_move(d, rng, max_crossings=12)
            kinds[move.kind] += 1
            expected = {"R1+": 1, "R1-": 1}.get(move.kind, 0)
            if abs(writhe(d) - w) != expected or knot_determinant(d) != det:
                failures += 1
        if jones_polynomial(d) != jones:
            failures += 1
    return kinds, failures


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--knots", nargs="*", default=["3_1", "4_1", "5_2", "6_2"])
    ap.add_argument("--sequences", type=int, default=100)
    ap.add_argument("--steps", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    for name in args.knots:
        kinds, failures = walk(name, args.sequences, args.steps, rng)
        print(f"{name}: {dict(sorted(kinds.items()))} failures={failures}")


if __name__ == "__main__":
    main()
