"""Exact integer linear algebra: Smith normal form and abelian group classification.

Everything here works on plain Python ints, so intermediate entries never
overflow.  Matrices are immutable row-major tuples.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence


class DimensionError(ValueError):
    """Raised when matrix shapes do not fit the requested operation."""


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(self.entries)} entries do not fill a {self.rows}x{self.cols} matrix"
            )
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if not rows:
            return cls(0, cols or 0, ())
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionError("ragged rows")
        if cols is not None and cols != width:
            raise DimensionError(f"expected {cols} columns, got {width}")
        return cls(len(rows), width, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows,
                         tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        a, b = self.to_rows(), other.to_rows()
        out = [[sum(a[i][k] * b[k][j] for k in range(self.cols)) for j in range(other.cols)]
               for i in range(self.rows)]
        return IntMatrix(self.rows, other.cols, tuple(x for r in out for x in r))

    def is_diagonal(self) -> bool:
        return all(self[i, j] == 0 for i in range(self.rows) for j in range(self.cols) if i != j)

    def __str__(self) -> str:
        if not self.entries:
            return ""
        width = max(len(str(x)) for x in self.entries)
        return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in self.to_rows())


def determinant(m: IntMatrix) -> int:
    """Fraction-free (Bareiss) determinant.  The 0x0 determinant is 1."""
    if m.rows != m.cols:
        raise DimensionError("determinant of a non-square matrix")
    n = m.rows
    a = m.to_rows()
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


@dataclass(frozen=True)
class SnfResult:
    """``u @ m @ v == diag(d)`` with ``u`` and ``v`` unimodular."""

    d: tuple[int, ...]
    u: IntMatrix
    v: IntMatrix

    def diagonal_matrix(self) -> IntMatrix:
        rows, cols = self.u.rows, self.v.rows
        return IntMatrix(rows, cols, tuple(self.d[i] if i == j else 0
                                           for i in range(rows) for j in range(cols)))


def smith_normal_form(m: IntMatrix) -> SnfResult:
    """Smith normal form with transform certificates.

    Pivots on the smallest nonzero absolute value left in the active block,
    which keeps entry growth modest.  Diagonal entries come out nonnegative,
    form a divisibility chain, and zeros trail.
    """
    if m.rows == 0 or m.cols == 0:
        raise DimensionError("Smith normal form of an empty matrix")
    r, c = m.rows, m.cols
    a = m.to_rows()
    u = IntMatrix.identity(r).to_rows()
    v = IntMatrix.identity(c).to_rows()

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    for t in range(min(r, c)):
        while True:
            best = None
            for i in range(t, r):
                for j in range(t, c):
                    x = a[i][j]
                    if x and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = a[t][t]
            for i in range(t + 1, r):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
            for j in range(t + 1, c):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
            if any(a[i][t] for i in range(t + 1, r)) or any(a[t][j] for j in range(t + 1, c)):
                continue
            bad = next((i for i in range(t + 1, r) for j in range(t + 1, c) if a[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    d = tuple(a[i][i] for i in range(min(r, c)))
    return SnfResult(d, IntMatrix.from_rows(u), IntMatrix.from_rows(v))


@dataclass(frozen=True)
class AbelianGroup:
    """Z^free_rank + Z/t1 + ... with t1 | t2 | ... and every ti >= 2."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(t) for t in self.torsion))
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        if any(t < 2 for t in self.torsion):
            raise ValueError(f"torsion coefficients must be >= 2, got {self.torsion}")
        if any(b % a for a, b in zip(self.torsion, self.torsion[1:])):
            raise ValueError(f"torsion {self.torsion} is not a divisibility chain")

    @classmethod
    def from_invariants(cls, free_rank: int, orders: Iterable[int]) -> "AbelianGroup":
        """Canonicalize an arbitrary direct sum Z^r + sum Z/n_i (n_i = 0 means Z)."""
        orders = [abs(int(n)) for n in orders]
        free_rank += sum(1 for n in orders if n == 0)
        orders = [n for n in orders if n > 1]
        # invariant factors from the p-primary parts
        primes: dict[int, list[int]] = {}
        for n in orders:
            for p, e in _factor(n).items():
                primes.setdefault(p, []).append(p ** e)
        width = max((len(v) for v in primes.values()), default=0)
        chain = [1] * width
        for powers in primes.values():
            powers.sort()
            for k, q in enumerate(powers):
                chain[width - len(powers) + k] *= q
        return cls(free_rank, tuple(chain))

    def torsion_subgroup(self) -> "AbelianGroup":
        return AbelianGroup(0, self.torsion)

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


def _factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def cokernel_group(relations: IntMatrix, n_generators: int) -> AbelianGroup:
    """The group Z^n_generators modulo the row span of ``relations``."""
    if relations.cols != n_generators:
        raise DimensionError(
            f"relation matrix has {relations.cols} columns but there are {n_generators} generators"
        )
    if relations.rows == 0 or n_generators == 0:
        return AbelianGroup(n_generators)
    d = smith_normal_form(relations).d
    nonzero = [x for x in d if x]
    return AbelianGroup(n_generators - len(nonzero), tuple(x for x in nonzero if x > 1))


def torsion_order(g: AbelianGroup) -> int:
    return reduce(lambda a, b: a * b, g.torsion, 1)


def gcd_all(values: Iterable[int]) -> int:
    return reduce(math.gcd, values, 0)


def parse_matrix_text(text: str) -> IntMatrix:
    """Whitespace-separated integers, one row per line (or separated by '/' or ';').

    '#' starts a comment.
    """
    rows = []
    lines = [part for line in text.splitlines() for part in re.split(r"[/;]", line.split("#", 1)[0])]
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    return IntMatrix.from_rows(rows)


def format_matrix_text(m: IntMatrix) -> str:
    return str(m) + "\n" if m.entries else ""
