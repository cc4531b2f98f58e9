"""Reidemeister moves on PD diagrams.

Moves are applied to the slot graph of a diagram (crossings with four CCW
positions, edges as tail/head slot pairs) and the result is re-encoded as
PD, so edge labels are not preserved across a move.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .diagram import (DiagramError, LinkDiagram, build_diagram, diagram_edges,
                      face_key, trace_faces, _crossing_turn)


class MoveError(DiagramError):
    """The requested move site does not exist or the move is not allowed there."""


@dataclass(frozen=True)
class MoveSpec:
    """kind is one of R1+, R1-, R2+, R2-, R3.

    Sites: R1+ an edge label (0 means a crossingless circle), R1- a crossing
    index, R2+ two signed edge labels (darts) on a common face, R2- and R3 a
    face key.  ``variant`` picks the kink type for R1+ (0..3) and which
    strand goes over for R2+ (0: first dart over).
    """

    kind: str
    site: tuple
    variant: int = 0


def _opp(slot):
    c, p = slot
    return (c, (p + 2) % 4)


def _splice_out(under_even, edges, unknots, removed: set[int]):
    """Delete crossings by letting both strands pass straight through them."""
    by_tail = {t: (t, h) for t, h in edges}
    new_edges = []
    used = set()
    for t, h in edges:
        if t[0] in removed:
            continue
        used.add((t, h))
        while h[0] in removed:
            nxt = by_tail[_opp(h)]
            used.add(nxt)
            h = nxt[1]
        new_edges.append((t, h))
    # strands that now run only through deleted crossings close up into circles
    rest = [e for e in edges if e not in used]
    seen = set()
    for e in rest:
        if e in seen:
            continue
        unknots += 1
        cur = e
        while cur not in seen:
            seen.add(cur)
            cur = by_tail[_opp(cur[1])]
    keep = [c for c in range(len(under_even)) if c not in removed]
    renum = {c: i for i, c in enumerate(keep)}
    new_edges = [((renum[t[0]], t[1]), (renum[h[0]], h[1])) for t, h in new_edges]
    return [under_even[c] for c in keep], new_edges, unknots


def _darts_by_face(d: LinkDiagram):
    return {face_key(cyc): cyc for cyc in trace_faces(d.tail, d.head, _crossing_turn)} if d.crossings else {}


def _arrival(d: LinkDiagram, dart):
    e, s = dart
    return d.head[e] if s == 1 else d.tail[e]


def _departure(d: LinkDiagram, dart):
    e, s = dart
    return d.tail[e] if s == 1 else d.head[e]


_KINKS = (
    # (entry slot, loop tail, loop head, exit slot); first pass under/over, sign -/+
    ((0,), (2, 1), (3,)),
    ((0,), (2, 3), (1,)),
    ((1,), (3, 0), (2,)),
    ((3,), (1, 0), (2,)),
)


def _r1_insert(d, under_even, edges, unknots, site, variant):
    (e,) = site
    k = len(under_even)
    (entry,), (lt, lh), (exit_,) = _KINKS[variant % 4]
    loop = ((k, lt), (k, lh))
    if e == 0:
        if not unknots:
            raise MoveError("no crossingless circle to twist")
        return under_even + [True], edges + [loop, ((k, exit_), (k, entry))], unknots - 1
    if e not in d.tail:
        raise MoveError(f"no edge {e}")
    t, h = d.tail[e], d.head[e]
    edges = [x for x in edges if x != (t, h)]
    return under_even + [True], edges + [(t, (k, entry)), loop, ((k, exit_), h)], unknots


def _r1_delete(d, under_even, edges, unknots, site):
    (c,) = site
    if not 0 <= c < len(under_even):
        raise MoveError(f"no crossing {c}")
    for t, h in edges:
        if t[0] == c and h[0] == c and (t[1] - h[1]) % 4 in (1, 3):
            return _splice_out(under_even, edges, unknots, {c})
    raise MoveError(f"crossing {c} is not a kink")


def _r2_insert(d, under_even, edges, unknots, site, variant):
    a, b = (abs(x) for x in site)
    da = (a, 1 if site[0] > 0 else -1)
    db = (b, 1 if site[1] > 0 else -1)
    if a == b:
        raise MoveError("R2 needs two different edges")
    if not any(da in cyc and db in cyc for cyc in _darts_by_face(d).values()):
        raise MoveError(f"darts {site} do not bound a common face")
    p, q = len(under_even), len(under_even) + 1
    alpha = [(_departure(d, da), (p, 1)), ((p, 3), (q, 3)), ((q, 1), _arrival(d, da))]
    beta = [(_departure(d, db), (q, 2)), ((q, 0), (p, 2)), ((p, 0), _arrival(d, db))]
    if da[1] < 0:
        alpha = [(h, t) for t, h in alpha]
    if db[1] < 0:
        beta = [(h, t) for t, h in beta]
    old = {(d.tail[a], d.head[a]), (d.tail[b], d.head[b])}
    edges = [x for x in edges if x not in old] + alpha + beta
    alpha_over = variant % 2 == 0
    return under_even + [alpha_over, alpha_over], edges, unknots


def _r2_delete(d, under_even, edges, unknots, site):
    cyc = _darts_by_face(d).get(tuple(site))
    if cyc is None or len(cyc) != 2:
        raise MoveError(f"{site} is not a bigon face")
    (x, _), (y, _) = cyc
    if x == y:
        raise MoveError("degenerate bigon")
    cx = {d.tail[x][0], d.head[x][0]}
    if len(cx) != 2:
        raise MoveError("bigon edge is a loop")
    if d.tail[x][1] % 2 != d.head[x][1] % 2:
        raise MoveError("bigon strands alternate; not an R2 site")
    return _splice_out(under_even, edges, unknots, cx)


def _r3(d, under_even, edges, unknots, site):
    cyc = _darts_by_face(d).get(tuple(site))
    if cyc is None or len(cyc) != 3:
        raise MoveError(f"{site} is not a triangular face")
    arrivals = [_arrival(d, dart) for dart in cyc]
    P, Q, R = (s[0] for s in arrivals)
    if len({P, Q, R}) != 3 or len({dart[0] for dart in cyc}) != 3:
        raise MoveError("triangle is degenerate")
    kP, kQ, kR = ((s[1] - 1) % 4 for s in arrivals)
    over = lambda c, k: k % 2 == 1  # noqa: E731  odd positions are over
    lines = {"PQ": (over(P, kP), over(Q, kQ + 1)), "RP": (over(R, kR), over(P, kP + 1)),
             "QR": (over(Q, kQ), over(R, kR + 1))}
    if not any(a == b for a, b in lines.values()):
        raise MoveError("triangle is cyclically alternating; R3 does not apply")
    E = [(P, (kP + 2) % 4), (P, (kP + 3) % 4), (Q, (kQ + 2) % 4),
         (Q, (kQ + 3) % 4), (R, (kR + 2) % 4), (R, (kR + 3) % 4)]
    incoming = {h for _, h in edges}
    new_slot = {E[0]: (Q, 0), E[3]: (P, 2), E[1]: (R, 0), E[4]: (P, 3), E[2]: (R, 1), E[5]: (Q, 3)}
    internal = {  # line -> its new internal pieces in order from the lower-index end
        (0, 3): [((Q, 2), (P, 0))],
        (1, 4): [((R, 2), (P, 1))],
        (2, 5): [((R, 3), (Q, 1))],
    }
    side_edges = {(d.tail[e], d.head[e]) for e, _ in cyc}
    keep = []
    for t, h in edges:
        if (t, h) in side_edges:
            continue
        keep.append((new_slot.get(t, t), new_slot.get(h, h)))
    for (i, j), pieces in internal.items():
        forward = E[i] in incoming
        for t, h in pieces:
            keep.append((t, h) if forward else (h, t))
    ue = list(under_even)
    ue[P] = kP % 2 == 0
    ue[Q] = (kQ + 1) % 2 == 0
    ue[R] = kR % 2 == 0
    return ue, keep, unknots


def apply_reidemeister(d: LinkDiagram, move: MoveSpec) -> LinkDiagram:
    under_even = [True] * len(d.crossings)
    edges = diagram_edges(d)
    handlers = {
        "R1+": lambda: _r1_insert(d, under_even, edges, d.unknots, move.site, move.variant),
        "R1-": lambda: _r1_delete(d, under_even, edges, d.unknots, move.site),
        "R2+": lambda: _r2_insert(d, under_even, edges, d.unknots, move.site, move.variant),
        "R2-": lambda: _r2_delete(d, under_even, edges, d.unknots, move.site),
        "R3": lambda: _r3(d, under_even, edges, d.unknots, move.site),
    }
    if move.kind not in handlers:
        raise MoveError(f"unknown move kind {move.kind!r}")
    ue, new_edges, unknots = handlers[move.kind]()
    try:
        return build_diagram(ue, new_edges, unknots)
    except DiagramError as exc:
        raise MoveError(f"{move.kind} produced an unusable diagram: {exc}") from exc


def move_sites(d: LinkDiagram) -> list[MoveSpec]:
    """Every site where a move can be attempted (inserts are always listed)."""
    sites = [MoveSpec("R1+", (e,), v) for e in d.edges for v in range(4)]
    if d.unknots:
        sites += [MoveSpec("R1+", (0,), v) for v in range(4)]
    for c in range(len(d.crossings)):
        if any(d.tail[e][0] == c and d.head[e][0] == c and (d.tail[e][1] - d.head[e][1]) % 4 in (1, 3)
               for e in d.crossings[c]):
            sites.append(MoveSpec("R1-", (c,)))
    for key, cyc in _darts_by_face(d).items():
        signed = [e * s for e, s in cyc]
        for i, a in enumerate(signed):
            for b in signed[i + 1:]:
                if abs(a) != abs(b):
                    sites += [MoveSpec("R2+", (a, b), 0), MoveSpec("R2+", (a, b), 1)]
        if len(cyc) == 2:
            sites.append(MoveSpec("R2-", key))
        if len(cyc) == 3:
            sites.append(MoveSpec("R3", key))
    return sites


def random_move(d: LinkDiagram, rng: random.Random, max_crossings: int = 12) -> tuple[MoveSpec, LinkDiagram]:
    """Apply one random applicable move, preferring deletions once the diagram is large."""
    sites = move_sites(d)
    by_kind: dict[str, list[MoveSpec]] = {}
    for s in sites:
        by_kind.setdefault(s.kind, []).append(s)
    kinds = sorted(by_kind)
    for _ in range(200):
        if len(d.crossings) >= max_crossings:
            pool = [k for k in kinds if k in ("R1-", "R2-", "R3")] or kinds
        else:
            pool = kinds
        move = rng.choice(by_kind[rng.choice(pool)])
        try:
            return move, apply_reidemeister(d, move)
        except MoveError:
            continue
    raise MoveError("no applicable move found")
