"""Acceptance criteria, one line of output each.

Run with ``pytest -v tests/test_acceptance.py`` or directly with
``python tests/test_acceptance.py``.
"""

import random
import time

import pytest
from hypothesis import given, settings, strategies as st

from tanglehom.bracket import bracket_determinant
from tanglehom.branched import double_cover_group, knot_determinant, krebes_even_cover, surgery_h1
from tanglehom.corpus import DETERMINANTS, knots
from tanglehom.diagram import braid_closure, linking_number
from tanglehom.intlinalg import (AbelianGroup, IntMatrix, cokernel_group, determinant, smith_normal_form,
                                 torsion_order)
from tanglehom.moves import random_move
from tanglehom.tangle import krebes_A, scan_closures

SCAN_PASSAGES, SCAN_PATH = 4, 3


def criterion_1():
    m = IntMatrix.from_rows([[1, 2, 0, 0], [2, 1, 0, 0]])
    d = smith_normal_form(m).d
    g = cokernel_group(m, 4)
    ok = d == (1, 3) and g == AbelianGroup(2, (3,)) and torsion_order(g) == 3
    return ok, f"diagonal {list(d)}, cokernel {g}, torsion order {torsion_order(g)} (exact)"


def criterion_2():
    start = time.perf_counter()
    corpus = knots()
    bad = []
    for name, d in corpus.items():
        g, b = knot_determinant(d), bracket_determinant(d)
        if g != b or g != DETERMINANTS[name]:
            bad.append((name, g, b, DETERMINANTS[name]))
    secs = time.perf_counter() - start
    ok = not bad and len(corpus) >= 10 and secs < 10
    return ok, f"{len(corpus)} knots, mismatches {bad}, {secs:.2f}s (limit 10s)"


_scan_cache = {}


def _scan():
    if "r" not in _scan_cache:
        start = time.perf_counter()
        _scan_cache["r"] = scan_closures(krebes_A(), SCAN_PASSAGES, SCAN_PATH)
        _scan_cache["secs"] = time.perf_counter() - start
    return _scan_cache["r"], _scan_cache["secs"]


def criterion_3():
    r, secs = _scan()
    odd = r.odd
    not_div = [x.det_goeritz for x in odd if x.det_goeritz % 3]
    ok = (len(odd) >= 20 and not not_div and not r.contradiction and not r.disagreements
          and not r.truncated and secs < 120)
    return ok, (f"{len(r.records)} closures, {len(odd)} odd, odd dets not divisible by 3: {not_div}, "
                f"contradiction {r.contradiction}, oracle disagreements {len(r.disagreements)}, "
                f"{secs:.1f}s (limit 120s)")


def criterion_4():
    r, _ = _scan()
    ones = [x.index for x in r.odd if x.det_goeritz == 1]
    return not ones and bool(r.odd), f"odd closures with determinant 1: {len(ones)} of {len(r.odd)} (exact)"


def _snf_property():
    seen = [0]

    @settings(max_examples=500, deadline=None, database=None)
    @given(st.integers(1, 5).flatmap(lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-25, 25), min_size=c, max_size=c), min_size=r, max_size=r))))
    def prop(rows):
        seen[0] += 1
        m = IntMatrix.from_rows(rows)
        res = smith_normal_form(m)
        assert res.u @ m @ res.v == res.diagonal_matrix()
        assert abs(determinant(res.u)) == 1 and abs(determinant(res.v)) == 1
        assert all((b % a == 0) if a else b == 0 for a, b in zip(res.d, res.d[1:]))

    prop()
    return seen[0]


def _move_property(sequences=100, steps=8):
    rng = random.Random(2024)
    count = 0
    for name in ("3_1", "4_1"):
        base = knots()[name]
        want = knot_determinant(base)
        for _ in range(sequences):
            d = base
            for _ in range(steps):
                _, d = random_move(d, rng, max_crossings=10)
                assert knot_determinant(d) == want
            count += 1
    for word in ([1, 1], [1, 1, 1, 1]):
        base = braid_closure(2, word)
        want = linking_number(base, 0, 1)
        for _ in range(sequences):
            d = base
            for _ in range(steps):
                _, d = random_move(d, rng, max_crossings=10)
                assert linking_number(d, 0, 1) == want
            count += 1
    return count


def criterion_5():
    start = time.perf_counter()
    n_snf = _snf_property()
    n_moves = _move_property()
    corpus = knots()
    cover_ok = all(torsion_order(double_cover_group(d)) == knot_determinant(d) for d in corpus.values())
    secs = time.perf_counter() - start
    ok = n_snf >= 500 and n_moves >= 400 and cover_ok and secs < 60
    return ok, (f"(a) {n_snf} SNF certificates, (b) {n_moves} move sequences over 4 bases, "
                f"(c) cover order = det on {len(corpus)} knots: {cover_ok}; {secs:.1f}s (limit 60s)")


def criterion_6():
    p = krebes_even_cover()
    if p is None:
        return None, "even-cover surgery data not transcribed; skipped"
    g = surgery_h1(p)
    return not g.torsion, f"even cover homology {g}"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6]


def _line(n, ok, detail):
    status = "SKIP" if ok is None else ("PASS" if ok else "FAIL")
    return f"criterion {n}: {status} - {detail}"


@pytest.mark.parametrize("n", range(1, len(CRITERIA) + 1))
def test_criterion(n, capsys):
    try:
        ok, detail = CRITERIA[n - 1]()
    except AssertionError as exc:
        ok, detail = False, f"property failed: {exc}"
    with capsys.disabled():
        print("\n" + _line(n, ok, detail))
    if ok is None:
        pytest.skip(detail)
    assert ok, detail


if __name__ == "__main__":
    for n, crit in enumerate(CRITERIA, 1):
        print(_line(n, *crit()), flush=True)
