"""Planar diagram (PD) combinatorics for knots and links.

PD convention: each crossing ``X[a,b,c,d]`` lists its four edge ends
counterclockwise, starting with the incoming under-strand.  So the under
strand runs a -> c and the over strand joins b and d.  Crossingless
circles cannot be written in PD and are carried as a separate count.

Sign convention: a crossing is positive when the over strand runs d -> b.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Sequence

Slot = tuple  # (crossing index, position) or any hashable vertex-end marker
Dart = tuple  # (edge label, +1 | -1)


class DiagramError(ValueError):
    """Base class for rejected diagrams."""


class PDSyntaxError(DiagramError):
    pass


class EdgeLabelError(DiagramError):
    """An edge label does not occur exactly twice."""


class OrientationError(DiagramError):
    """Component orientations cannot be recovered unambiguously."""


class NonPlanarError(DiagramError):
    pass


class ComponentError(DiagramError):
    """Unknown component index, or the wrong number of components."""


def trace_faces(tail: dict, head: dict, turn: Callable[[Slot], Slot]) -> list[tuple[Dart, ...]]:
    """Orbits of darts under 'follow the edge, then turn clockwise'.

    Each orbit walks one face with the face on its left.  ``turn`` maps the
    slot where a dart arrives to the slot where the walk leaves.
    """
    end_at: dict = {}
    for e, s in tail.items():
        end_at[s] = (e, 1)
    for e, s in head.items():
        end_at[s] = (e, -1)
    seen = set()
    out = []
    for start in sorted(((e, s) for e in tail for s in (1, -1)), key=lambda d: (d[0], -d[1])):
        if start in seen:
            continue
        cycle = []
        d = start
        while d not in seen:
            seen.add(d)
            cycle.append(d)
            e, sgn = d
            arrive = head[e] if sgn == 1 else tail[e]
            d = end_at[turn(arrive)]
        if d != start:
            raise NonPlanarError("face walk did not close up")
        out.append(tuple(cycle))
    return out


def face_key(cycle: Sequence[Dart]) -> tuple[int, ...]:
    """Canonical key: signed labels, rotated to the lexicographically least form."""
    signed = [e * s for e, s in cycle]
    return min(tuple(signed[i:] + signed[:i]) for i in range(len(signed)))


def _crossing_turn(slot):
    c, p = slot
    return (c, (p - 1) % 4)


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[tuple[int, int, int, int], ...]
    unknots: int = 0

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(int(x) for x in c) for c in self.crossings))
        if any(len(c) != 4 for c in self.crossings):
            raise PDSyntaxError("every crossing needs exactly four edge labels")
        if self.unknots < 0:
            raise PDSyntaxError("negative unknot count")
        self._orientation  # validates

    # --- structure -------------------------------------------------------

    @cached_property
    def _ends(self) -> dict[int, list[Slot]]:
        ends: dict[int, list[Slot]] = {}
        for c, labels in enumerate(self.crossings):
            for p, e in enumerate(labels):
                if e <= 0:
                    raise PDSyntaxError(f"edge labels must be positive, got {e}")
                ends.setdefault(e, []).append((c, p))
        bad = sorted(e for e, s in ends.items() if len(s) != 2)
        if bad:
            raise EdgeLabelError(f"edge labels {bad} do not appear exactly twice")
        return ends

    @cached_property
    def _orientation(self):
        """(tail, head, components) with components as edge lists in traversal order."""
        ends = self._ends
        edge_at = {s: e for e, ss in ends.items() for s in ss}
        tail: dict[int, Slot] = {}
        head: dict[int, Slot] = {}
        components = []
        for start in sorted(ends):
            if start in tail:
                continue
            # walk the cycle assuming start runs ends[start][0] -> ends[start][1]
            walk = []
            e, t = start, ends[start][0]
            while True:
                s0, s1 = ends[e]
                h = s1 if t == s0 else s0
                walk.append((e, t, h))
                c, p = h
                nxt_slot = (c, (p + 2) % 4)
                e = edge_at[nxt_slot]
                t = nxt_slot
                if e == start and t == ends[start][0]:
                    break
                if len(walk) > len(ends):
                    raise OrientationError("strand walk does not close")
            forward = backward = False
            for e, t, h in walk:
                if h[1] == 0 or t[1] == 2:
                    forward = True
                if h[1] == 2 or t[1] == 0:
                    backward = True
            if forward and backward:
                raise OrientationError(f"component through edge {start} passes under in both directions")
            if not forward and not backward:
                fw = _label_steps([w[0] for w in walk])
                bw = _label_steps([w[0] for w in reversed(walk)])
                if fw == bw:
                    raise OrientationError(
                        f"component through edge {start} never passes under and its labels are ambiguous")
                backward = bw > fw
            if backward:
                walk = [(e, h, t) for e, t, h in reversed(walk)]
            for e, t, h in walk:
                tail[e], head[e] = t, h
            components.append([w[0] for w in walk])
        # rotate each component to start at its smallest label
        components = [c[c.index(min(c)):] + c[:c.index(min(c))] for c in components]
        components.sort(key=min)
        return tail, head, components

    @property
    def tail(self) -> dict[int, Slot]:
        return self._orientation[0]

    @property
    def head(self) -> dict[int, Slot]:
        return self._orientation[1]

    @property
    def components(self) -> list[list[int]]:
        """Edge cycles of the components that have crossings, in traversal order."""
        return self._orientation[2]

    @property
    def n_components(self) -> int:
        return len(self.components) + self.unknots

    @cached_property
    def component_of(self) -> dict[int, int]:
        return {e: i for i, comp in enumerate(self.components) for e in comp}

    @property
    def edges(self) -> list[int]:
        return sorted(self._ends)

    def crossing_sign(self, c: int) -> int:
        b = self.crossings[c][1]
        return -1 if self.head[b] == (c, 1) else 1

    def strand_components(self, c: int) -> tuple[int, int]:
        """(under component, over component) at crossing c."""
        x = self.crossings[c]
        return self.component_of[x[0]], self.component_of[x[1]]

    def is_knot(self) -> bool:
        return self.n_components == 1

    def __len__(self) -> int:
        return len(self.crossings)

    # --- serialization ---------------------------------------------------

    def to_pd_text(self) -> str:
        terms = [f"X[{','.join(map(str, c))}]" for c in self.crossings]
        if self.unknots:
            terms.append(f"O[{self.unknots}]")
        return " ".join(terms)

    def to_json(self) -> dict:
        return {"crossings": [list(c) for c in self.crossings], "unknots": self.unknots}


def _label_steps(labels: list[int]) -> int:
    return sum(1 for a, b in zip(labels, labels[1:] + labels[:1]) if b == a + 1)


_TERM = re.compile(r"([XO])\[\s*([^\]]*)\]")


def parse_pd(text: str) -> LinkDiagram:
    """Parse PD text (``X[a,b,c,d]`` and ``O[k]`` terms) or its JSON form."""
    stripped = "\n".join(line.split("#", 1)[0] for line in text.splitlines()).strip()
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
            crossings = [tuple(c) for c in data.get("crossings", [])]
            unknots = int(data.get("unknots", 0))
        except (json.JSONDecodeError, TypeError, AttributeError, ValueError) as exc:
            raise PDSyntaxError(f"bad PD JSON: {exc}") from None
        return _checked(crossings, unknots)
    crossings, unknots, pos = [], 0, 0
    for m in _TERM.finditer(stripped):
        if stripped[pos:m.start()].strip(" \t\n,"):
            raise PDSyntaxError(f"unexpected text {stripped[pos:m.start()].strip()!r}")
        pos = m.end()
        try:
            args = [int(a) for a in m.group(2).split(",") if a.strip()]
        except ValueError:
            raise PDSyntaxError(f"non-integer label in {m.group(0)}") from None
        if m.group(1) == "X":
            if len(args) != 4:
                raise PDSyntaxError(f"{m.group(0)} needs four labels")
            crossings.append(tuple(args))
        else:
            if len(args) != 1 or args[0] < 0:
                raise PDSyntaxError(f"{m.group(0)} needs one nonnegative count")
            unknots += args[0]
    if stripped[pos:].strip(" \t\n,"):
        raise PDSyntaxError(f"unexpected text {stripped[pos:].strip()!r}")
    return _checked(crossings, unknots)


def _checked(crossings, unknots) -> LinkDiagram:
    if not crossings and not unknots:
        raise PDSyntaxError("empty diagram")
    if any(len(c) != 4 for c in crossings):
        raise PDSyntaxError("every crossing needs four labels")
    d = LinkDiagram(tuple(crossings), unknots)
    d.components  # orientation check
    faces(d)  # planarity check
    return d


# --- faces and coloring --------------------------------------------------


@dataclass(frozen=True)
class FaceMap:
    faces: tuple[tuple, ...]  # face keys; crossingless circles contribute ('O', i)
    cycles: tuple[tuple[Dart, ...], ...]
    corner_face: dict = field(default_factory=dict)  # (crossing, corner k between pos k, k+1) -> face index
    edge_faces: dict = field(default_factory=dict)  # edge -> (left face, right face)
    unbounded: int = 0

    def __len__(self) -> int:
        return len(self.faces)

    def index(self, key) -> int:
        return self.faces.index(tuple(key))


def faces(d: LinkDiagram, unbounded: tuple | None = None) -> FaceMap:
    """Faces of the diagram on the sphere, plus the choice of unbounded face.

    By default the unbounded face is the one with the most sides (ties go to
    the smallest key).  Crossingless circles are assumed to sit in the
    unbounded face; each adds one disk face.
    """
    cycles = trace_faces(d.tail, d.head, _crossing_turn) if d.crossings else []
    keyed = sorted(((face_key(c), c) for c in cycles), key=lambda kc: kc[0])
    keys = [k for k, _ in keyed]
    cycles = [c for _, c in keyed]
    _check_euler(d, len(keys))
    corner_face = {}
    edge_faces: dict[int, list] = {}
    for i, cyc in enumerate(cycles):
        for e, s in cyc:
            arrive = d.head[e] if s == 1 else d.tail[e]
            c, p = arrive
            corner_face[(c, (p - 1) % 4)] = i
            edge_faces.setdefault(e, [None, None])[0 if s == 1 else 1] = i
    if not keys:
        keys, cycles = [("O", -1)], [()]
    keys += [("O", i) for i in range(d.unknots)]
    cycles += [()] * (len(keys) - len(cycles))
    if unbounded is None:
        ub = min(range(len(keys)), key=lambda i: (-len(cycles[i]), _sortable(keys[i])))
    else:
        ub = keys.index(tuple(unbounded))
    return FaceMap(tuple(keys), tuple(cycles), corner_face,
                   {e: tuple(v) for e, v in edge_faces.items()}, ub)


def _sortable(key):
    return tuple((0, x) if isinstance(x, int) else (1, str(x)) for x in key)


def _check_euler(d: LinkDiagram, n_faces: int) -> None:
    if not d.crossings:
        return
    parent = list(range(len(d.crossings)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in d.edges:
        parent[find(d.tail[e][0])] = find(d.head[e][0])
    pieces = len({find(i) for i in range(len(d.crossings))})
    v, e = len(d.crossings), 2 * len(d.crossings)
    # faces of disconnected pieces are traced separately, so each piece has chi = 2
    if v - e + n_faces != 2 * pieces:
        raise NonPlanarError(f"Euler characteristic {v - e + n_faces} != {2 * pieces}; diagram is not planar")


@dataclass(frozen=True)
class Coloring:
    white: tuple[bool, ...]  # indexed like FaceMap.faces

    def color(self, face: int) -> str:
        return "white" if self.white[face] else "black"

    def counts(self) -> tuple[int, int]:
        w = sum(self.white)
        return w, len(self.white) - w


def checkerboard(d: LinkDiagram, f: FaceMap) -> Coloring:
    """Proper 2-colouring of the faces with the unbounded face white."""
    n = len(f.faces)
    color: list[bool | None] = [None] * n
    adj: dict[int, list[int]] = {i: [] for i in range(n)}
    for left, right in f.edge_faces.values():
        adj[left].append(right)
        adj[right].append(left)
    for i in range(n):
        if f.faces[i][0] == "O" and i != f.unbounded:
            adj[i].append(f.unbounded)
            adj[f.unbounded].append(i)
    order = [f.unbounded] + [i for i in range(n) if i != f.unbounded]
    for root in order:
        if color[root] is not None:
            continue
        color[root] = True
        stack = [root]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if color[y] is None:
                    color[y] = not color[x]
                    stack.append(y)
                elif color[y] == color[x]:
                    raise NonPlanarError("faces do not admit a checkerboard colouring")
    return Coloring(tuple(bool(c) for c in color))


# --- signed crossing counts ----------------------------------------------


def _check_component(d: LinkDiagram, i: int) -> None:
    if not 0 <= i < d.n_components:
        raise ComponentError(f"no component {i}; diagram has {d.n_components}")


def linking_number(d: LinkDiagram, i: int, j: int) -> int:
    _check_component(d, i)
    _check_component(d, j)
    if i == j:
        raise ComponentError("linking number needs two distinct components")
    total = sum(d.crossing_sign(c) for c in range(len(d.crossings))
                if set(d.strand_components(c)) == {i, j})
    return total // 2


def writhe(d: LinkDiagram, i: int | None = None) -> int:
    """Signed self-crossing count of component i (all crossings if i is None)."""
    if i is None:
        return sum(d.crossing_sign(c) for c in range(len(d.crossings)))
    _check_component(d, i)
    return sum(d.crossing_sign(c) for c in range(len(d.crossings))
               if d.strand_components(c) == (i, i))


# --- building diagrams from slot graphs ----------------------------------


def build_diagram(under_even: Sequence[bool], edges: Iterable[tuple[Slot, Slot]],
                  unknots: int = 0) -> LinkDiagram:
    """Assemble a PD diagram from crossings given by CCW slot positions.

    ``under_even[c]`` says whether the under strand of crossing c uses
    positions {0, 2} (else {1, 3}).  ``edges`` are (tail slot, head slot)
    pairs.  Edges are relabelled consecutively along each component and every
    crossing is rotated to start at its incoming under-strand.
    """
    edges = list(edges)
    by_tail = {t: i for i, (t, h) in enumerate(edges)}
    if len(by_tail) != len(edges) or len({h for _, h in edges}) != len(edges):
        raise EdgeLabelError("slot used by two edges")
    label = [0] * len(edges)
    nxt = 1
    for start in range(len(edges)):
        if label[start]:
            continue
        i = start
        while not label[i]:
            label[i] = nxt
            nxt += 1
            c, p = edges[i][1]
            i = by_tail[(c, (p + 2) % 4)]
    slot_label = {}
    incoming = set()
    for i, (t, h) in enumerate(edges):
        slot_label[t] = label[i]
        slot_label[h] = label[i]
        incoming.add(h)
    pd = []
    for c, ue in enumerate(under_even):
        under = (0, 2) if ue else (1, 3)
        start = next(p for p in under if (c, p) in incoming)
        pd.append(tuple(slot_label[(c, (start + k) % 4)] for k in range(4)))
    return LinkDiagram(tuple(pd), unknots)


def diagram_edges(d: LinkDiagram) -> list[tuple[Slot, Slot]]:
    return [(d.tail[e], d.head[e]) for e in d.edges]


def braid_closure(n_strands: int, word: Sequence[int]) -> LinkDiagram:
    """Closure of a braid word; generator +i / -i crosses strands i and i+1 (1-based).

    Strands run upward and +i is a positive crossing.
    """
    if not word:
        return LinkDiagram((), n_strands)
    pos_edge: list[int] = list(range(n_strands))  # open edge id at each strand position
    bottom = list(range(n_strands))
    tails: dict[int, Slot] = {}
    heads: dict[int, Slot] = {}
    fresh = n_strands
    under_even = []
    for c, g in enumerate(word):
        i = abs(g) - 1
        if not 0 <= i < n_strands - 1:
            raise ValueError(f"generator {g} out of range for {n_strands} strands")
        left, right = pos_edge[i], pos_edge[i + 1]
        new_left, new_right = fresh, fresh + 1
        fresh += 2
        if g > 0:  # under: bottom-right -> top-left; over: bottom-left -> top-right
            heads[right], heads[left] = (c, 0), (c, 3)
            tails[new_right], tails[new_left] = (c, 1), (c, 2)
        else:  # under: bottom-left -> top-right; over: bottom-right -> top-left
            heads[left], heads[right] = (c, 0), (c, 1)
            tails[new_right], tails[new_left] = (c, 2), (c, 3)
        pos_edge[i], pos_edge[i + 1] = new_left, new_right
        under_even.append(True)
    # close: top edge at position j continues as bottom edge at position j
    alias = {}
    free_circles = 0
    for j in range(n_strands):
        top, bot = pos_edge[j], bottom[j]
        if top == bot:  # strand never touched by any generator
            free_circles += 1
            continue
        alias[bot] = top
    edges = []
    for e, t in tails.items():
        if e in heads:
            edges.append((t, heads[e]))
    for bot, top in alias.items():
        edges.append((tails[top], heads[bot]))
    return build_diagram(under_even, edges, free_circles)
