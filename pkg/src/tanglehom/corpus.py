"""Bundled knot diagrams, mostly closed braids, with their known determinants."""

from __future__ import annotations

from .diagram import LinkDiagram, braid_closure, parse_pd

TREFOIL_PD = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"

BRAIDS = {
    "unknot_r1": (2, [1]),
    "unknot_4": (3, [1, -2, 1, 2]),
    "3_1": (2, [1, 1, 1]),
    "4_1": (3, [1, -2, 1, -2]),
    "5_1": (2, [1] * 5),
    "5_2": (3, [1, 1, 1, 2, -1, 2]),
    "6_1": (4, [1, 1, 2, -1, -3, 2, -3]),
    "6_2": (3, [1, 1, 1, -2, 1, -2]),
    "6_3": (3, [1, 1, -2, 1, -2, -2]),
    "7_1": (2, [1] * 7),
    "7_2": (4, [1, 1, 1, 2, -1, 2, 3, -2, 3]),
    "8_19": (3, [1, 2] * 4),
    "8_20": (3, [1, 1, 1, -2, -1, -1, -1, -2]),
    "3_1#3_1": (3, [1, 1, 1, 2, 2, 2]),
}

DETERMINANTS = {
    "unknot": 1, "unknot_r1": 1, "unknot_4": 1, "trefoil": 3, "3_1": 3, "4_1": 5, "5_1": 5, "5_2": 7,
    "6_1": 9, "6_2": 11, "6_3": 13, "7_1": 7, "7_2": 11, "8_19": 3, "8_20": 9, "3_1#3_1": 9,
}


def knot(name: str) -> LinkDiagram:
    if name == "unknot":
        return LinkDiagram((), 1)
    if name == "trefoil":
        return parse_pd(TREFOIL_PD)
    if name not in BRAIDS:
        raise KeyError(f"no bundled knot named {name!r}")
    return braid_closure(*BRAIDS[name])


def knots() -> dict[str, LinkDiagram]:
    return {name: knot(name) for name in DETERMINANTS}
