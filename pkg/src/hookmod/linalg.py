"""Exact Gaussian elimination over ``Q`` for sparse vectors and small dense matrices."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, Sequence


class EchelonSpace:
    """Incrementally maintained reduced row-echelon basis of a subspace.

    Vectors are dicts ``coordinate -> rational``. The pivot of each row is its
    largest coordinate under ``key``; the pivot entry is 1 and no other row
    has a nonzero entry in that coordinate.
    """

    def __init__(self, key: Callable[[Hashable], object]):
        self.key = key
        self.rows: dict[Hashable, dict] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        """Remainder of ``vec`` after clearing every pivot coordinate."""
        out = dict(vec)
        for pivot in [p for p in out if p in self.rows]:
            c = out.get(pivot)
            if not c:
                continue
            for coord, v in self.rows[pivot].items():
                nv = out.get(coord, 0) - c * v
                if nv:
                    out[coord] = nv
                else:
                    out.pop(coord, None)
        return out

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def insert(self, vec: dict) -> bool:
        """Add ``vec`` to the span; return ``False`` when it was already there."""
        rem = self.reduce(vec)
        if not rem:
            return False
        pivot = max(rem, key=self.key)
        inv = Fraction(1) / rem[pivot]
        row = {coord: _clean(v * inv) for coord, v in rem.items()}
        for other in self.rows.values():
            c = other.get(pivot)
            if c:
                for coord, v in row.items():
                    nv = other.get(coord, 0) - c * v
                    if nv:
                        other[coord] = _clean(nv)
                    else:
                        other.pop(coord, None)
        self.rows[pivot] = row
        return True

    def coordinates(self, vec: dict) -> dict:
        """Coefficients of ``vec`` in the row basis, keyed by pivot (``vec`` must lie in the span)."""
        if self.reduce(vec):
            raise ValueError("vector is not in the span")
        return {p: vec[p] for p in self.rows if vec.get(p)}

    def basis(self) -> list[dict]:
        """Rows in decreasing pivot order."""
        return [self.rows[p] for p in sorted(self.rows, key=self.key, reverse=True)]


def _clean(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v.numerator)
    return v


def rank(matrix: Sequence[Sequence]) -> int:
    """Rank of a dense rational matrix (rows of equal length)."""
    rows = [[Fraction(v) for v in row] for row in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            if f:
                factor = f / pv
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def identity_matrix(size: int) -> list[list[int]]:
    return [[int(i == j) for j in range(size)] for i in range(size)]


def trace(a: Sequence[Sequence]) -> int:
    return sum(a[i][i] for i in range(len(a)))


def span_rank(vectors: Iterable[dict], key: Callable) -> int:
    space = EchelonSpace(key)
    for v in vectors:
        space.insert(v)
    return len(space)
