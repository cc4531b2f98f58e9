"""Genus-1 tangles in a solid torus and knots obtained by closing them.

The solid torus projects to an annulus.  A tangle diagram is an arc diagram
(PD crossings plus two free ends) with two marked faces: the outer face,
which holds both ends, and the hole face, which contains the hole of the
annulus.

A closing arc lives outside the solid torus.  It starts at the first end,
alternates between the outer face and the hole face, and returns to the
second end.  Each trip between them (a *passage*) follows a walk in the dual
graph and runs entirely over or entirely under the tangle strands it meets.
A *visit* is a pair of passages, into the hole and back out; entering over
and leaving under threads the arc down through the hole once.

Where pieces of the closing arc cross one another inside a face they are
stacked by height: over-passages above under-passages, and within the same
band the earlier piece on top.  Inside the outer face and the hole face the
arc is free to move vertically, so any consistent stacking gives a valid
closure.
"""

from __future__ import annotations

import itertools
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from enum import Enum
from typing import Iterator, Sequence

from .bracket import DEFAULT_CROSSING_LIMIT, bracket_determinant
from .branched import knot_determinant, krebes_odd_cover, surgery_h1
from .diagram import (DiagramError, LinkDiagram, NonPlanarError, OrientationError,
                      build_diagram, face_key, trace_faces)
from .intlinalg import AbelianGroup, torsion_order


class TangleError(DiagramError):
    pass


class ClosureSpecError(ValueError):
    pass


END1, END2 = ("end", 1), ("end", 2)


def _turn(slot):
    if slot[0] == "end":
        return slot
    c, p = slot
    return (c, (p - 1) % 4)


@dataclass(frozen=True)
class AnnulusTangle:
    crossings: tuple[tuple[int, int, int, int], ...]
    endpoints: tuple[int, int]
    hole_face: tuple[int, ...]
    outer_face: tuple[int, ...]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(int(x) for x in c) for c in self.crossings))
        object.__setattr__(self, "endpoints", tuple(int(e) for e in self.endpoints))
        object.__setattr__(self, "hole_face", tuple(self.hole_face))
        object.__setattr__(self, "outer_face", tuple(self.outer_face))
        arc, tail, head = _walk_arc(self.crossings, self.endpoints)
        object.__setattr__(self, "arc", tuple(arc))
        object.__setattr__(self, "tail", tail)
        object.__setattr__(self, "head", head)
        cycles = trace_faces(tail, head, _turn)
        n = len(self.crossings)
        if (n + 2) - len(arc) + len(cycles) != 2:
            raise NonPlanarError("tangle diagram is not planar")
        keyed = sorted((face_key(c), c) for c in cycles)
        object.__setattr__(self, "faces", tuple(k for k, _ in keyed))
        object.__setattr__(self, "cycles", tuple(c for _, c in keyed))
        dart_face = {dart: i for i, (_, c) in enumerate(keyed) for dart in c}
        object.__setattr__(self, "dart_face", dart_face)
        outer = dart_face[(self.endpoints[0], -1)]
        if dart_face[(self.endpoints[1], 1)] != outer:
            raise TangleError("the two endpoints do not lie on a common face")
        if self.faces[outer] != self.outer_face:
            raise TangleError(f"outer face {self.outer_face} is not the face {self.faces[outer]} holding the endpoints")
        if self.hole_face not in self.faces:
            raise TangleError(f"hole face {self.hole_face} is not a face of the diagram")

    @property
    def outer(self) -> int:
        return self.faces.index(self.outer_face)

    @property
    def hole(self) -> int:
        return self.faces.index(self.hole_face)

    def edge_faces(self, e: int) -> tuple[int, int]:
        """(left face, right face) of edge e, relative to the arc direction."""
        return self.dart_face[(e, 1)], self.dart_face[(e, -1)]

    def to_json(self) -> dict:
        out = {"crossings": [list(c) for c in self.crossings], "endpoints": list(self.endpoints),
               "hole_face": list(self.hole_face), "outer_face": list(self.outer_face)}
        if self.name:
            out["name"] = self.name
        return out


def _walk_arc(crossings, endpoints):
    e1, e2 = endpoints
    ends: dict[int, list] = {}
    for c, labels in enumerate(crossings):
        for p, e in enumerate(labels):
            ends.setdefault(e, []).append((c, p))
    if not crossings:
        if e1 != e2:
            raise TangleError("a crossingless tangle is a single edge")
        return [e1], {e1: END1}, {e1: END2}
    for e, s in ends.items():
        want = 1 if e in (e1, e2) else 2
        if len(s) != want:
            raise TangleError(f"edge {e} appears {len(s)} times; expected {want}")
    if e1 == e2 or e1 not in ends or e2 not in ends:
        raise TangleError(f"bad endpoint edges {endpoints}")
    edge_at = {s: e for e, ss in ends.items() for s in ss}
    arc, tail, head = [e1], {e1: END1}, {}
    e = e1
    while e != e2:
        h = next(s for s in ends[e] if s != tail[e])
        head[e] = h
        c, p = h
        if p == 2:
            raise OrientationError(f"arc runs backwards along the under strand at crossing {c}")
        nxt = (c, (p + 2) % 4)
        e = edge_at[nxt]
        if e in tail:
            raise TangleError("arc walk revisits an edge")
        tail[e] = nxt
        arc.append(e)
    head[e2] = END2
    if len(arc) != len(ends):
        raise TangleError("diagram has closed components besides the arc")
    return arc, tail, head


def load_tangle(text: str) -> AnnulusTangle:
    data = json.loads(text)
    try:
        return AnnulusTangle(tuple(tuple(c) for c in data["crossings"]), tuple(data["endpoints"]),
                             tuple(data["hole_face"]), tuple(data["outer_face"]), data.get("name", ""))
    except KeyError as exc:
        raise TangleError(f"missing field {exc}") from None


# --- closure specifications ----------------------------------------------


@dataclass(frozen=True)
class Passage:
    path: tuple[tuple[int, ...], ...]  # face keys, first to last
    side: str  # "over" | "under"
    edges: tuple[int, ...] | None = None  # edge crossed at each step

    def to_json(self) -> dict:
        out = {"path": [list(f) for f in self.path], "side": self.side}
        if self.edges is not None:
            out["edges"] = list(self.edges)
        return out


@dataclass(frozen=True)
class ClosureSpec:
    passages: tuple[Passage, ...] = ()

    def to_json(self) -> dict:
        return {"passages": [p.to_json() for p in self.passages]}

    @classmethod
    def from_json(cls, data: dict) -> "ClosureSpec":
        ps = []
        for p in data.get("passages", []):
            side = p.get("side")
            if side not in ("over", "under"):
                raise ClosureSpecError(f"passage side must be 'over' or 'under', got {side!r}")
            edges = tuple(p["edges"]) if p.get("edges") is not None else None
            ps.append(Passage(tuple(tuple(f) for f in p["path"]), side, edges))
        return cls(tuple(ps))

    def reversed(self) -> "ClosureSpec":
        """The same arc traversed from the other end."""
        return ClosureSpec(tuple(
            Passage(tuple(reversed(p.path)), p.side, tuple(reversed(p.edges)) if p.edges is not None else None)
            for p in reversed(self.passages)))


def load_closure_spec(text: str) -> ClosureSpec:
    return ClosureSpec.from_json(json.loads(text))


def _resolve(t: AnnulusTangle, spec: ClosureSpec) -> list[tuple[list[int], list[int], str]]:
    """Validate a spec against a tangle: per passage (face indices, crossed edges, side)."""
    if len(spec.passages) % 2:
        raise ClosureSpecError("a closing arc must end in the outer face: passage count must be even")
    out = []
    for i, p in enumerate(spec.passages):
        try:
            path = [t.faces.index(tuple(f)) for f in p.path]
        except ValueError:
            raise ClosureSpecError(f"passage {i} names a face that is not in the tangle") from None
        start, stop = (t.outer, t.hole) if i % 2 == 0 else (t.hole, t.outer)
        if not path or path[0] != start or path[-1] != stop:
            raise ClosureSpecError(f"passage {i} must run from face {t.faces[start]} to {t.faces[stop]}")
        if any(f in (t.outer, t.hole) for f in path[1:-1]):
            raise ClosureSpecError(f"passage {i} re-enters the outer or hole face midway")
        if p.edges is not None and len(p.edges) != len(path) - 1:
            raise ClosureSpecError(f"passage {i}: {len(p.edges)} edges for {len(path) - 1} steps")
        edges = []
        for j in range(len(path) - 1):
            a, b = path[j], path[j + 1]
            if a == b:
                raise ClosureSpecError(f"passage {i} step {j} stays in one face")
            options = [e for e in t.arc if set(t.edge_faces(e)) == {a, b}]
            if p.edges is not None:
                if p.edges[j] not in options:
                    raise ClosureSpecError(f"passage {i} step {j}: edge {p.edges[j]} does not separate these faces")
                edges.append(p.edges[j])
            elif options:
                edges.append(min(options))
            else:
                raise ClosureSpecError(f"passage {i} step {j}: faces are not adjacent")
        if p.side not in ("over", "under"):
            raise ClosureSpecError(f"passage {i}: bad side {p.side!r}")
        out.append((path, edges, p.side))
    return out


def closure_linking(t: AnnulusTangle, spec: ClosureSpec) -> int:
    """Signed number of times the closing arc threads the hole.

    A visit entering over and leaving under counts +1, the reverse -1.
    """
    resolved = _resolve(t, spec)
    lk = 0
    for k in range(0, len(resolved), 2):
        into, out = resolved[k][2], resolved[k + 1][2]
        if into != out:
            lk += 1 if into == "over" else -1
    return lk


def _chord_order(n_points: int, chords: list[tuple[int, int]], rng: random.Random):
    """Crossing pairs and their order along each chord for chords of a convex polygon.

    Boundary positions are placed on a parabola, which keeps them in convex
    position; exact rational arithmetic decides the order of crossings along
    each chord.  Concurrent triples are broken by perturbing the positions.
    """
    def interleaved(a, b):
        (a0, a1), (b0, b1) = sorted(a), sorted(b)
        return (a0 < b0 < a1) != (a0 < b1 < a1)

    pairs = [(i, j) for i in range(len(chords)) for j in range(i + 1, len(chords))
             if interleaved(chords[i], chords[j])]
    xs = [Fraction(i) for i in range(n_points)]
    for _ in range(100):
        pts = [(x, x * x) for x in xs]
        along: dict[int, list[tuple[Fraction, int]]] = {i: [] for i in range(len(chords))}
        for i, j in pairs:
            (p, q), (r, s) = [pts[k] for k in chords[i]], [pts[k] for k in chords[j]]
            dx1, dy1 = q[0] - p[0], q[1] - p[1]
            dx2, dy2 = s[0] - r[0], s[1] - r[1]
            den = dx1 * dy2 - dy1 * dx2
            u = ((r[0] - p[0]) * dy2 - (r[1] - p[1]) * dx2) / den
            v = ((r[0] - p[0]) * dy1 - (r[1] - p[1]) * dx1) / den
            along[i].append((u, j))
            along[j].append((v, i))
        if all(len({u for u, _ in lst}) == len(lst) for lst in along.values()):
            return pairs, {i: [j for _, j in sorted(lst)] for i, lst in along.items()}
        xs = [x + Fraction(rng.randint(1, 997), 7919) for x in xs]
    raise ArithmeticError("could not separate concurrent chords")


def close_tangle(t: AnnulusTangle, spec: ClosureSpec) -> LinkDiagram:
    """Knot diagram of the tangle closed up by the arc described in ``spec``.

    The knot is oriented along the tangle from the first end to the second,
    then back along the closing arc.
    """
    resolved = _resolve(t, spec)
    n0 = len(t.crossings)
    under_even: list[bool] = [True] * n0

    # crossing points of the closing arc with tangle edges
    points = []  # (passage, step, edge, from face, to face, side)
    for i, (path, edges, side) in enumerate(resolved):
        for j, e in enumerate(edges):
            points.append((i, j, e, path[j], path[j + 1], side))
    point_xing = {}
    on_edge: dict[int, list[int]] = {e: [] for e in t.arc}
    for k, (i, j, e, a, b, side) in enumerate(points):
        point_xing[k] = len(under_even)
        under_even.append(side == "over")  # tangle strand is at positions 0/2
        on_edge[e].append(k)

    # the closing arc as nodes joined by chords
    nodes: list = [END1]
    chord_face, chord_band = [], []
    cur_face = t.outer
    k = 0
    for i, (path, edges, side) in enumerate(resolved):
        for j in range(len(edges)):
            chord_face.append(cur_face)
            chord_band.append(0 if j == 0 else (1 if side == "over" else -1))
            nodes.append(k)
            cur_face = path[j + 1]
            k += 1
    chord_face.append(cur_face)
    chord_band.append(0)
    nodes.append(END2)
    n_chords = len(chord_face)

    # boundary sequence of each face, with the arc's attachment points
    boundary: dict[int, list] = {}
    for f, cyc in enumerate(t.cycles):
        seq = []
        for e, s in cyc:
            pts = on_edge[e] if s == 1 else on_edge[e][::-1]
            seq += [("pt", p) for p in pts]
            if (e, s) == (t.endpoints[0], -1):
                seq.append(("end", END1))
            if (e, s) == (t.endpoints[1], 1):
                seq.append(("end", END2))
        boundary[f] = seq

    def marker(node):
        return ("end", node) if isinstance(node, tuple) else ("pt", node)

    rng = random.Random(0)
    chord_cross: dict[tuple[int, int], int] = {}
    along: dict[int, list[int]] = {}
    slot_toward: dict[tuple[int, int], int] = {}  # (crossing, chord end node index) -> position
    for f in range(len(t.faces)):
        members = [c for c in range(n_chords) if chord_face[c] == f]
        if not members:
            continue
        seq = boundary[f]
        pos = {m: i for i, m in enumerate(seq)}
        ends = [(pos[marker(nodes[c])], pos[marker(nodes[c + 1])]) for c in members]
        pairs, order = _chord_order(len(seq), ends, rng)
        for a, b in pairs:
            ca, cb = members[a], members[b]
            x = len(under_even)
            chord_cross[(ca, cb)] = chord_cross[(cb, ca)] = x
            four = sorted([(ends[a][0], ca, 0), (ends[a][1], ca, 1), (ends[b][0], cb, 0), (ends[b][1], cb, 1)])
            for position, (_, c, which) in enumerate(four):
                slot_toward[(x, c, which)] = position
            lower = min((ca, cb), key=lambda c: (chord_band[c], -c))
            under_even.append(four[0][1] == lower)
        for a, lst in order.items():
            along[members[a]] = [members[b] for b in lst]

    # walk the knot: tangle forward, then the closing arc backward
    passes = []  # (crossing, in position, out position)
    for e in t.arc:
        for p in on_edge[e]:
            passes.append((point_xing[p], 2, 0))
        h = t.head[e]
        if h != END2:
            passes.append((h[0], h[1], (h[1] + 2) % 4))
    left_right = {}
    for p, (i, j, e, a, b, side) in enumerate(points):
        left, right = t.edge_faces(e)
        left_right[p] = {left: 1, right: 3}
    for c in reversed(range(n_chords)):
        for other in reversed(along.get(c, [])):
            x = chord_cross[(c, other)]
            passes.append((x, slot_toward[(x, c, 1)], slot_toward[(x, c, 0)]))
        u = nodes[c]
        if not isinstance(u, tuple):
            _, _, _, a, b, _ = points[u]
            passes.append((point_xing[u], left_right[u][b], left_right[u][a]))

    if not passes:
        return LinkDiagram((), 1)
    edges = [((passes[k][0], passes[k][2]), (passes[(k + 1) % len(passes)][0], passes[(k + 1) % len(passes)][1]))
             for k in range(len(passes))]
    return build_diagram(under_even, edges)


# --- verdicts and scans --------------------------------------------------


class Verdict(str, Enum):
    EXCLUDED_BY_TORSION = "excluded_by_torsion"
    INCONCLUSIVE = "inconclusive"


def obstruction_verdict(torsion: AbelianGroup, det: int) -> Verdict:
    """Can a knot with this determinant induce a cover with this torsion?

    Torsion of the cover injects into H1 of the knot's double branched cover,
    whose order is the determinant, so the torsion order must divide it.
    Determinant 0 (infinite homology) never excludes.
    """
    if det < 0:
        raise ValueError("determinant must be nonnegative")
    order = torsion_order(torsion)
    if det == 0 or det % order == 0:
        return Verdict.INCONCLUSIVE
    return Verdict.EXCLUDED_BY_TORSION


@dataclass(frozen=True)
class ClosureVerdict:
    parity: str
    lk_with_longitude: int
    determinant: int
    obstruction: Verdict

    def __post_init__(self):
        if (self.parity == "odd") != (self.lk_with_longitude % 2 == 1):
            raise ValueError("parity disagrees with the linking number")


@dataclass
class ScanRecord:
    index: int
    spec: ClosureSpec
    crossings: int
    lk: int
    det_goeritz: int
    det_bracket: int | None
    verdict: ClosureVerdict

    @property
    def parity(self) -> str:
        return self.verdict.parity

    def to_json(self) -> dict:
        return {"index": self.index, "passages": self.spec.to_json()["passages"],
                "crossings": self.crossings, "lk": self.lk, "parity": self.parity,
                "det_goeritz": self.det_goeritz, "det_bracket": self.det_bracket,
                "verdict": self.verdict.obstruction.value}


@dataclass
class ScanReport:
    records: list[ScanRecord] = field(default_factory=list)
    truncated: bool = False
    truncation_reason: str = ""

    @property
    def odd(self) -> list[ScanRecord]:
        return [r for r in self.records if r.parity == "odd"]

    @property
    def even(self) -> list[ScanRecord]:
        return [r for r in self.records if r.parity == "even"]

    @property
    def contradiction(self) -> bool:
        """An odd closure whose determinant the cover torsion excludes."""
        return any(r.verdict.obstruction is Verdict.EXCLUDED_BY_TORSION for r in self.odd)

    @property
    def disagreements(self) -> list[ScanRecord]:
        return [r for r in self.records if r.det_bracket is not None and r.det_bracket != r.det_goeritz]

    def summary(self) -> dict:
        odd = self.odd
        return {"summary": True, "closures": len(self.records), "odd": len(odd), "even": len(self.even),
                "odd_dets": sorted({r.det_goeritz for r in odd}),
                "even_dets": sorted({r.det_goeritz for r in self.even}),
                "odd_det_one": any(r.det_goeritz == 1 for r in odd),
                "contradiction": self.contradiction,
                "oracle_disagreements": len(self.disagreements),
                "truncated": self.truncated, "truncation_reason": self.truncation_reason}

    def to_jsonl(self) -> str:
        lines = [json.dumps(r.to_json()) for r in self.records] + [json.dumps(self.summary())]
        return "\n".join(lines) + "\n"


def dual_paths(t: AnnulusTangle, max_length: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Simple dual-graph walks from the outer face to the hole face.

    Returned as (face indices, crossed edges), shortest first, then by edges.
    Intermediate faces avoid the outer and hole faces.
    """
    if t.outer == t.hole:
        return [((t.outer,), ())]
    adj: dict[int, list[tuple[int, int]]] = {}
    for e in t.arc:
        a, b = t.edge_faces(e)
        if a != b:
            adj.setdefault(a, []).append((e, b))
            adj.setdefault(b, []).append((e, a))
    found = []

    def extend(faces, edges):
        here = faces[-1]
        if here == t.hole:
            found.append((tuple(faces), tuple(edges)))
            return
        if len(edges) == max_length:
            return
        for e, nxt in sorted(adj.get(here, [])):
            if nxt in faces or (nxt == t.outer):
                continue
            extend(faces + [nxt], edges + [e])

    extend([t.outer], [])
    found.sort(key=lambda fe: (len(fe[1]), fe[1]))
    return found


def enumerate_closures(t: AnnulusTangle, max_passages: int, max_path_length: int) -> Iterator[ClosureSpec]:
    """All closure specs within the bounds, fewest passages first, deterministic order."""
    paths = dual_paths(t, max_path_length)
    choices = []
    for faces_, edges in paths:
        for side in ("over", "under"):
            choices.append((faces_, edges, side))
    for n_visits in range(max_passages // 2 + 1):
        for combo in itertools.product(choices, repeat=2 * n_visits):
            passages = []
            for k, (faces_, edges, side) in enumerate(combo):
                if k % 2:  # return trip: walk the path backwards
                    faces_, edges = faces_[::-1], edges[::-1]
                passages.append(Passage(tuple(t.faces[f] for f in faces_), side, tuple(edges)))
            yield ClosureSpec(tuple(passages))


def _odd_torsion_default() -> AbelianGroup:
    return surgery_h1(krebes_odd_cover()).torsion_subgroup()


def evaluate_closure(t: AnnulusTangle, spec: ClosureSpec, index: int = 0,
                     odd_torsion: AbelianGroup | None = None,
                     even_torsion: AbelianGroup | None = None,
                     crossing_limit: int = DEFAULT_CROSSING_LIMIT,
                     use_bracket: bool = True) -> ScanRecord:
    odd_torsion = _odd_torsion_default() if odd_torsion is None else odd_torsion
    even_torsion = AbelianGroup(0) if even_torsion is None else even_torsion
    k = close_tangle(t, spec)
    lk = closure_linking(t, spec)
    det = knot_determinant(k)
    det_b = None
    if use_bracket and len(k.crossings) <= crossing_limit:
        det_b = bracket_determinant(k, crossing_limit)
    parity = "odd" if lk % 2 else "even"
    torsion = odd_torsion if parity == "odd" else even_torsion
    verdict = ClosureVerdict(parity, lk, det, obstruction_verdict(torsion, det))
    return ScanRecord(index, spec, len(k.crossings), lk, det, det_b, verdict)


def _evaluate_star(args):
    return evaluate_closure(*args)


def scan_closures(t: AnnulusTangle, max_passages: int, max_path_length: int,
                  odd_torsion: AbelianGroup | None = None,
                  crossing_limit: int = DEFAULT_CROSSING_LIMIT,
                  max_closures: int | None = None, workers: int = 1,
                  check_bracket: bool = True) -> ScanReport:
    """Close the tangle every way the bounds allow and check each closure.

    Every closure gets its determinant from the Goeritz matrix and, when it
    fits under ``crossing_limit``, from the bracket state sum as well.  The
    report flags a contradiction if an odd closure's determinant is not
    divisible by the order of ``odd_torsion`` (default: the torsion of the
    odd cover fixture).
    """
    specs = []
    report = ScanReport()
    for spec in enumerate_closures(t, max_passages, max_path_length):
        if max_closures is not None and len(specs) >= max_closures:
            report.truncated = True
            report.truncation_reason = f"stopped after {max_closures} closures"
            break
        specs.append(spec)
    args = [(t, s, i, odd_torsion, None, crossing_limit, check_bracket) for i, s in enumerate(specs)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            report.records = list(pool.map(_evaluate_star, args, chunksize=16))
    else:
        report.records = [evaluate_closure(*a) for a in args]
    skipped = sum(1 for r in report.records if r.det_bracket is None) if check_bracket else 0
    if skipped:
        report.truncated = True
        reason = f"{skipped} closures exceed the {crossing_limit}-crossing bracket limit"
        report.truncation_reason = "; ".join(x for x in (report.truncation_reason, reason) if x)
    return report


def tangle_from_knot(d: LinkDiagram, cut_edge: int, hole_face: Sequence[int] | None = None,
                     name: str = "") -> AnnulusTangle:
    """Cut a knot diagram open at an edge; the two faces beside the cut merge into the outer face.

    The arc runs from the cut along the knot's orientation.  ``hole_face`` is
    a face key of the resulting tangle; by default the first face other than
    the outer one.
    """
    if d.n_components != 1 or not d.crossings:
        raise TangleError("need a knot diagram with crossings")
    comp = d.components[0]
    k = comp.index(cut_edge)
    order = comp[k:] + comp[:k]
    # arc edges: second half of the cut edge, the rest of the knot, first half of the cut edge
    relabel = {e: i + 1 for i, e in enumerate(order)}
    last = len(order) + 1
    crossings = []
    for c, x in enumerate(d.crossings):
        row = []
        for p, e in enumerate(x):
            if e == cut_edge and d.tail[e] == (c, p):
                row.append(last)
            else:
                row.append(relabel[e])
        crossings.append(tuple(row))
    _, tail, head = _walk_arc(tuple(crossings), (1, last))
    cycles = trace_faces(tail, head, _turn)
    keys = sorted(face_key(c) for c in cycles)
    dart_face = {dart: face_key(c) for c in cycles for dart in c}
    outer = dart_face[(1, -1)]
    if hole_face is None:
        hole_face = next(k for k in keys if k != outer)
    return AnnulusTangle(tuple(crossings), (1, last), tuple(hole_face), outer, name)


# --- fixtures ------------------------------------------------------------

KREBES_A = {
    "crossings": [[2, 8, 3, 7], [8, 5, 9, 6], [6, 4, 7, 3], [4, 1, 5, 2]],
    "endpoints": [1, 9],
    "hole_face": [3, 7],
    "outer_face": [-9, -5, -1, 1, -4, -6, 9],
}
KREBES_A_DIRECT_DET = 5  # zero-passage closure: the figure-eight knot

TRIVIAL = {"crossings": [], "endpoints": [1, 1], "hole_face": [-1, 1], "outer_face": [-1, 1]}


def krebes_A() -> AnnulusTangle:
    """Four-crossing genus-1 tangle whose odd closures all have determinant divisible by 3.

    The arc is a figure-eight diagram cut open at one edge; the hole sits in
    a bigon.
    """
    return load_tangle(json.dumps(KREBES_A))


def trivial_tangle() -> AnnulusTangle:
    return load_tangle(json.dumps(TRIVIAL))


TANGLE_FIXTURES = {"krebes_A": krebes_A, "trivial": trivial_tangle}


def self_check(t: AnnulusTangle, modulus: int = 3, max_passages: int = 2, max_path_length: int = 2) -> None:
    """Raise TangleError unless every odd closure in a small scan has determinant divisible by ``modulus``."""
    for spec in enumerate_closures(t, max_passages, max_path_length):
        if closure_linking(t, spec) % 2:
            det = knot_determinant(close_tangle(t, spec))
            if det % modulus:
                raise TangleError(f"odd closure with determinant {det}: {json.dumps(spec.to_json())}")
