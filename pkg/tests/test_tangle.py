import json

import pytest
from hypothesis import given, settings, strategies as st

from tanglehom.bracket import bracket_determinant
from tanglehom.branched import knot_determinant
from tanglehom.corpus import knots
from tanglehom.diagram import parse_pd
from tanglehom.intlinalg import AbelianGroup
from tanglehom.tangle import (KREBES_A_DIRECT_DET, ClosureSpec, ClosureSpecError, ClosureVerdict, TangleError,
                              Verdict, close_tangle, closure_linking, dual_paths, enumerate_closures, krebes_A,
                              load_closure_spec, load_tangle, obstruction_verdict, scan_closures, self_check,
                              tangle_from_knot, trivial_tangle)

OUTER = [-9, -5, -1, 1, -4, -6, 9]
HOLE = [3, 7]
MID = [-7, 4, 2]


def visit(into, out, path=(OUTER, MID, HOLE)):
    return [{"path": list(path), "side": into}, {"path": list(reversed(path)), "side": out}]


def spec(*passages):
    return load_closure_spec(json.dumps({"passages": [p for v in passages for p in v]}))


def test_trivial_tangle():
    t = trivial_tangle()
    assert t.hole_face == t.outer_face
    k = close_tangle(t, ClosureSpec())
    assert k.is_knot and knot_determinant(k) == 1


def test_load_round_trip():
    t = krebes_A()
    assert load_tangle(json.dumps(t.to_json())) == t


def test_closed_component_rejected():
    text = json.dumps({"crossings": [[1, 4, 2, 5], [2, 5, 3, 4]], "endpoints": [1, 3],
                       "hole_face": [1], "outer_face": [1]})
    with pytest.raises(TangleError, match="closed components"):
        load_tangle(text)


def test_wrong_outer_face_rejected():
    data = krebes_A().to_json()
    data["outer_face"] = HOLE
    with pytest.raises(TangleError, match="endpoints"):
        load_tangle(json.dumps(data))


def test_missing_hole_face_rejected():
    data = krebes_A().to_json()
    data["hole_face"] = [1, 2, 3]
    with pytest.raises(TangleError, match="hole face"):
        load_tangle(json.dumps(data))
    del data["hole_face"]
    with pytest.raises(TangleError, match="missing"):
        load_tangle(json.dumps(data))


def test_closure_linking_examples():
    t = krebes_A()
    assert closure_linking(t, ClosureSpec()) == 0
    assert closure_linking(t, spec(visit("over", "under"))) == 1
    assert closure_linking(t, spec(visit("under", "over"))) == -1
    assert closure_linking(t, spec(visit("over", "under"), visit("under", "over"))) == 0
    assert closure_linking(t, spec(visit("over", "over"))) == 0


def test_reversal_flips_sign():
    t = krebes_A()
    for s in enumerate_closures(t, 4, 2):
        lk = closure_linking(t, s)
        assert closure_linking(t, s.reversed()) == -lk


def test_direct_closure_regression():
    assert knot_determinant(close_tangle(krebes_A(), ClosureSpec())) == KREBES_A_DIRECT_DET


def test_one_side_changing_visit():
    t = krebes_A()
    k = close_tangle(t, spec(visit("over", "under")))
    assert k.is_knot
    assert knot_determinant(k) % 3 == 0
    assert bracket_determinant(k) == knot_determinant(k)


def test_explicit_edges_in_spec():
    t = krebes_A()
    s = load_closure_spec(json.dumps({"passages": [
        {"path": [OUTER, MID, HOLE], "side": "over", "edges": [4, 7]},
        {"path": [HOLE, MID, OUTER], "side": "under", "edges": [7, 4]}]}))
    assert close_tangle(t, s) == close_tangle(t, spec(visit("over", "under")))


@pytest.mark.parametrize("passages", [
    [{"path": [OUTER, MID, HOLE], "side": "over"}],
    [{"path": [HOLE, MID, OUTER], "side": "over"}, {"path": [OUTER, MID, HOLE], "side": "over"}],
    [{"path": [OUTER, HOLE], "side": "over"}, {"path": [HOLE, MID, OUTER], "side": "over"}],
    [{"path": [OUTER, [9, 9], HOLE], "side": "over"}, {"path": [HOLE, MID, OUTER], "side": "over"}],
    [{"path": [OUTER, MID, HOLE], "side": "over", "edges": [4, 8]},
     {"path": [HOLE, MID, OUTER], "side": "over"}],
])
def test_invalid_specs(passages):
    s = ClosureSpec.from_json({"passages": passages})
    with pytest.raises(ClosureSpecError):
        close_tangle(krebes_A(), s)


def test_bad_side_rejected():
    with pytest.raises(ClosureSpecError):
        ClosureSpec.from_json({"passages": [{"path": [OUTER], "side": "sideways"}]})


def test_obstruction_verdict_examples():
    z3 = AbelianGroup(0, (3,))
    assert obstruction_verdict(z3, 4) is Verdict.EXCLUDED_BY_TORSION
    assert obstruction_verdict(z3, 1) is Verdict.EXCLUDED_BY_TORSION
    assert obstruction_verdict(AbelianGroup(0), 1) is Verdict.INCONCLUSIVE
    assert obstruction_verdict(z3, 0) is Verdict.INCONCLUSIVE
    assert obstruction_verdict(z3, 9) is Verdict.INCONCLUSIVE
    with pytest.raises(ValueError):
        obstruction_verdict(z3, -3)


@given(st.lists(st.integers(2, 12), max_size=3), st.integers(0, 200))
def test_exclusion_needs_torsion(orders, det):
    g = AbelianGroup.from_invariants(0, orders)
    if obstruction_verdict(g, det) is Verdict.EXCLUDED_BY_TORSION:
        assert not g.is_trivial()


def test_verdict_parity_invariant():
    with pytest.raises(ValueError):
        ClosureVerdict("odd", 2, 3, Verdict.INCONCLUSIVE)


def test_trivial_scan():
    r = scan_closures(trivial_tangle(), 0, 2)
    assert len(r.records) == 1
    assert r.records[0].det_goeritz == 1 and r.records[0].parity == "even"


def test_trivial_tangle_odd_closures_are_unknots():
    # nothing to obstruct: with the hole unlinked from the arc every closure is the unknot
    r = scan_closures(trivial_tangle(), 4, 2, odd_torsion=AbelianGroup(0))
    assert r.odd and all(x.det_goeritz == 1 for x in r.records)
    assert not r.contradiction


def test_scan_truncation_marker():
    r = scan_closures(krebes_A(), 4, 3, max_closures=10)
    assert len(r.records) == 10 and r.truncated and r.summary()["truncated"]
    r = scan_closures(krebes_A(), 2, 3, crossing_limit=8)
    assert r.truncated and "crossing" in r.truncation_reason
    assert any(x.det_bracket is None for x in r.records)


def test_scan_order_independent_of_workers():
    a = scan_closures(krebes_A(), 2, 3)
    b = scan_closures(krebes_A(), 2, 3, workers=2)
    assert [x.to_json() for x in a.records] == [x.to_json() for x in b.records]


def test_scan_jsonl():
    lines = scan_closures(krebes_A(), 2, 2).to_jsonl().splitlines()
    records = [json.loads(line) for line in lines]
    assert records[-1]["summary"] and records[-1]["contradiction"] is False
    assert all("det_goeritz" in r for r in records[:-1])


def test_self_check():
    self_check(krebes_A())
    with pytest.raises(TangleError):
        self_check(tangle_from_knot(knots()["3_1"], 2, (-3, 6)))


def test_cut_knot_direct_closure():
    for name, d in knots().items():
        if not d.crossings:
            continue
        for e in d.edges[:3]:
            t = tangle_from_knot(d, e)
            assert knot_determinant(close_tangle(t, ClosureSpec())) == knot_determinant(d), name


def test_dual_paths_avoid_outer_and_hole():
    t = krebes_A()
    for faces_, edges in dual_paths(t, 4):
        assert faces_[0] == t.outer and faces_[-1] == t.hole
        assert len(set(faces_)) == len(faces_)
        assert t.outer not in faces_[1:-1] and t.hole not in faces_[1:-1]


FIXTURE_SPECS = list(enumerate_closures(krebes_A(), 4, 3))


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(FIXTURE_SPECS))
def test_closures_are_valid_knots(s):
    t = krebes_A()
    k = close_tangle(t, s)
    assert k.is_knot
    assert parse_pd(k.to_pd_text()) == k
    det = knot_determinant(k)
    assert bracket_determinant(k) == det
    if closure_linking(t, s) % 2:
        assert det % 3 == 0
