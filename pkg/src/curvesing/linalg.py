"""Exact sparse Gaussian elimination over a Field.

Rows are dicts ``{column: value}``.  Columns are integers and the pivot of a
row is its smallest column, so callers choose the elimination order by how
they number columns.
"""

from __future__ import annotations

from .field import Field


class EchelonBasis:
    """Incrementally maintained row-echelon basis of a span of sparse rows."""

    def __init__(self, field: Field):
        self.field = field
        self.pivots: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        F = self.field
        row = {c: v for c, v in row.items() if v != 0}
        done: dict = {}
        while row:
            col = min(row)
            val = row.pop(col)
            piv = self.pivots.get(col)
            if piv is None:
                done[col] = val
                continue
            for c, v in piv.items():
                if c == col:
                    continue
                s = F.reduce(row.get(c, 0) - val * v)
                if s != 0:
                    row[c] = s
                else:
                    row.pop(c, None)
        return done

    def add(self, row: dict) -> bool:
        """Insert a row; return True when it increased the rank."""
        F = self.field
        red = self.reduce(row)
        if not red:
            return False
        col = min(red)
        inv = F.inv(red[col])
        self.pivots[col] = {c: F.reduce(v * inv) for c, v in red.items()}
        return True


def rank(field: Field, rows: list[dict]) -> int:
    basis = EchelonBasis(field)
    for r in rows:
        basis.add(r)
    return basis.rank


def nullspace(field: Field, rows: list[dict], ncols: int) -> list[list]:
    """Basis of {v : row . v = 0 for every row}, as dense vectors."""
    F = field
    # full reduced row echelon form
    basis = EchelonBasis(F)
    for r in rows:
        basis.add(r)
    piv = dict(basis.pivots)
    # back-substitute so each pivot column appears in exactly one row
    for col in sorted(piv, reverse=True):
        row = piv[col]
        for other_col, other in piv.items():
            if other_col == col or col not in other:
                continue
            f = other[col]
            for c, v in row.items():
                s = F.reduce(other.get(c, 0) - f * v)
                if s != 0:
                    other[c] = s
                else:
                    other.pop(c, None)
    free = [c for c in range(ncols) if c not in piv]
    out = []
    for fc in free:
        vec = [0] * ncols
        vec[fc] = 1
        for pc, row in piv.items():
            if fc in row:
                vec[pc] = F.reduce(-row[fc])
        out.append(vec)
    return out
