"""Search small cut-open knot diagrams for a tangle whose odd closures all have determinant divisible by 3.

Each candidate is a knot diagram cut at one edge, with one of the remaining
faces marked as the hole.  Candidates are screened on two-passage closures
first and the survivors are re-checked with four passages.
"""

import argparse
import json
import time

from tanglehom.branched import knot_determinant
from tanglehom.diagram import braid_closure
from tanglehom.tangle import (AnnulusTangle, close_tangle, closure_linking, enumerate_closures,
                              tangle_from_knot)

WORDS = {
    "3_1": (2, [1, 1, 1]),
    "4_1": (3, [1, -2, 1, -2]),
    "5_1": (2, [1] * 5),
    "5_2": (3, [1, 1, 1, 2, -1, 2]),
    "6_1": (4, [1, 1, 2, -1, -3, 2, -3]),
    "6_2": (3, [1, 1, 1, -2, 1, -2]),
    "6_3": (3, [1, 1, -2, 1, -2, -2]),
    "3_1#3_1": (3, [1, 1, 1, 2, 2, 2]),
    "3_1#-3_1": (3, [1, 1, 1, -2, -2, -2]),
    "7_1": (2, [1] * 7),
    "T(3,4)": (3, [1, 2] * 4),
    "unknot_a": (3, [1, -2, 1, 2]),
    "unknot_b": (3, [1, 1, 2, -1, 2]),
}


def odd_dets(t, passages, path, modulus, stop_early):
    dets = set()
    n = 0
    for spec in enumerate_closures(t, passages, path):
        if closure_linking(t, spec) % 2 == 0:
            continue
        n += 1
        det = knot_determinant(close_tangle(t, spec))
        dets.add(det)
        if stop_early and det % modulus:
            return n, dets, False
    return n, dets, all(d % modulus == 0 for d in dets)


def candidates(names):
    for name in names:
        strands, word = WORDS[name]
        k = braid_closure(strands, word)
        if k.n_components != 1:
            continue
        for cut in k.edges:
            base = tangle_from_knot(k, cut)
            for hole in base.faces:
                if hole != base.outer_face:
                    yield name, cut, AnnulusTangle(base.crossings, base.endpoints, hole, base.outer_face)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--knots", nargs="*", default=list(WORDS))
    ap.add_argument("--modulus", type=int, default=3)
    ap.add_argument("--path", type=int, default=3)
    args = ap.parse_args()
    for name, cut, t in candidates(args.knots):
        start = time.time()
        n, dets, ok = odd_dets(t, 2, args.path, args.modulus, True)
        if not ok:
            continue
        n4, dets4, ok4 = odd_dets(t, 4, args.path, args.modulus, True)
        print(json.dumps({"knot": name, "cut": cut, "tangle": t.to_json(), "odd2": n, "odd4": n4,
                          "ok4": ok4, "dets": sorted(dets | dets4), "secs": round(time.time() - start, 2)}),
              flush=True)


if __name__ == "__main__":
    main()
