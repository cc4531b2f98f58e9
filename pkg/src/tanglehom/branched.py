"""First homology of double branched covers.

Two presentations are supported: the Goeritz matrix of a knot diagram
(presenting H1 of the double cover of S^3 branched over the knot), and the
linking matrix of a surgery description inside a handlebody (presenting H1
of a cover of the solid torus branched over a genus-1 tangle).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .diagram import (ComponentError, Coloring, DiagramError, FaceMap, LinkDiagram,
                      checkerboard, faces)
from .intlinalg import AbelianGroup, IntMatrix, cokernel_group, determinant


def goeritz_matrix(d: LinkDiagram, c: Coloring | None = None, f: FaceMap | None = None,
                   drop: int | None = None) -> IntMatrix:
    """Reduced Goeritz matrix over the white regions.

    A crossing joining white regions i != j contributes -eta to entry (i, j),
    where eta = +1 when the white corners are the ones entered by turning the
    over strand counterclockwise (corners 1 and 3 in PD order), else -1.
    Diagonals make every row sum to zero.  The row and column of the white
    region ``drop`` (default: the unbounded face) are then deleted.
    """
    if d.n_components != 1:
        raise ComponentError(f"Goeritz matrix needs a knot, got {d.n_components} components")
    if not d.crossings:
        return IntMatrix(0, 0, ())
    f = f or faces(d)
    c = c or checkerboard(d, f)
    white = [i for i in range(len(f.faces)) if c.white[i]]
    index = {face: k for k, face in enumerate(white)}
    n = len(white)
    g = [[0] * n for _ in range(n)]
    for x in range(len(d.crossings)):
        corners = [f.corner_face[(x, k)] for k in range(4)]
        if c.white[corners[1]]:
            eta, (u, v) = 1, (corners[1], corners[3])
        else:
            eta, (u, v) = -1, (corners[0], corners[2])
        if u == v:
            continue
        i, j = index[u], index[v]
        g[i][j] -= eta
        g[j][i] -= eta
    for i in range(n):
        g[i][i] = -sum(g[i][j] for j in range(n) if j != i)
    drop = f.unbounded if drop is None else drop
    if drop not in index:
        raise DiagramError(f"face {drop} is not white")
    k = index[drop]
    rows = [row[:k] + row[k + 1:] for i, row in enumerate(g) if i != k]
    return IntMatrix(n - 1, n - 1, tuple(x for r in rows for x in r))


def knot_determinant(d: LinkDiagram) -> int:
    return abs(determinant(goeritz_matrix(d)))


def double_cover_group(d: LinkDiagram) -> AbelianGroup:
    g = goeritz_matrix(d)
    return cokernel_group(g, g.cols)


@dataclass(frozen=True)
class SurgeryCurve:
    label: str
    framing: int


@dataclass(frozen=True)
class SurgeryPresentation:
    """Framed surgery curves in a handlebody plus the handlebody's free generators.

    Rows of the linking matrix are surgery curves; columns are the surgery
    curves followed by the free generators.  Diagonal entries of the square
    block are the framings.
    """

    surgery: tuple[SurgeryCurve, ...]
    free: tuple[str, ...]
    linking: IntMatrix

    def __post_init__(self):
        k, n = len(self.surgery), len(self.surgery) + len(self.free)
        if self.linking.rows != k or self.linking.cols != n:
            raise ValueError(f"linking matrix is {self.linking.rows}x{self.linking.cols}, expected {k}x{n}")
        for i in range(k):
            if self.linking[i, i] != self.surgery[i].framing:
                raise ValueError(f"diagonal entry {i} differs from the framing of {self.surgery[i].label}")
            for j in range(i):
                if self.linking[i, j] != self.linking[j, i]:
                    raise ValueError(f"linking block not symmetric at ({i}, {j})")

    @property
    def generators(self) -> list[str]:
        return [s.label for s in self.surgery] + list(self.free)

    def to_json(self) -> dict:
        return {"surgery": [{"label": s.label, "framing": s.framing} for s in self.surgery],
                "free": list(self.free), "linking": self.linking.to_rows()}

    @classmethod
    def from_json(cls, data: dict) -> "SurgeryPresentation":
        surgery = tuple(SurgeryCurve(str(s["label"]), int(s["framing"])) for s in data.get("surgery", []))
        free = tuple(str(x) for x in data.get("free", []))
        linking = IntMatrix.from_rows(data.get("linking", []), cols=len(surgery) + len(free))
        if not surgery:
            linking = IntMatrix(0, len(free), ())
        return cls(surgery, free, linking)


def load_presentation(text: str) -> SurgeryPresentation:
    return SurgeryPresentation.from_json(json.loads(text))


@dataclass(frozen=True)
class CoverIndex:
    """n-fold cover picked out by the image of the longitude in Z/n."""

    degree: int
    longitude_image: int

    def __post_init__(self):
        if self.degree < 2:
            raise ValueError("cover degree must be at least 2")
        if not 0 <= self.longitude_image < self.degree:
            raise ValueError(f"longitude image must lie in [0, {self.degree})")

    @classmethod
    def for_linking(cls, lk: int, degree: int = 2) -> "CoverIndex":
        return cls(degree, lk % degree)


def surgery_h1(p: SurgeryPresentation) -> AbelianGroup:
    return cokernel_group(p.linking, len(p.generators))


def krebes_odd_cover() -> SurgeryPresentation:
    """Two +1-framed curves linking twice, in a genus-2 handlebody."""
    return SurgeryPresentation(
        (SurgeryCurve("sigma", 1), SurgeryCurve("tau", 1)),
        ("alpha1", "alpha2"),
        IntMatrix.from_rows([[1, 2, 0, 0], [2, 1, 0, 0]]),
    )


def krebes_even_cover() -> SurgeryPresentation | None:
    """Surgery description of the even cover; no linking data is available for it yet."""
    return None


def handlebody(genus: int) -> SurgeryPresentation:
    return SurgeryPresentation((), tuple(f"alpha{i + 1}" for i in range(genus)), IntMatrix(0, genus, ()))


FIXTURES = {
    "krebes_odd_cover": krebes_odd_cover,
    "krebes_even_cover": krebes_even_cover,
}
