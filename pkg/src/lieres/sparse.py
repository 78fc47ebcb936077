"""Exact sparse matrices over the rationals.

Rank uses fraction-free elimination: rows are scaled to integers, and each
update ``row <- pivot * row - entry * pivot_row`` is followed by division by
the row's content.  The pivot is the first column of the sparsest remaining
row, ties broken by lowest row then lowest column, so results and any
intermediate state are reproducible.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping


class SparseMatrix:
    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: Mapping[int, Mapping[int, object]] | None = None):
        self.rows, self.cols = rows, cols
        self.data: dict[int, dict[int, Fraction]] = {}
        for r, row in (data or {}).items():
            for c, v in row.items():
                self[r, c] = v

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Iterable[tuple[int, int, object]]) -> "SparseMatrix":
        M = cls(rows, cols)
        for r, c, v in entries:
            M.add(r, c, v)
        return M

    @classmethod
    def from_dense(cls, dense: list[list[object]]) -> "SparseMatrix":
        rows = len(dense)
        cols = len(dense[0]) if rows else 0
        return cls.from_entries(rows, cols, ((r, c, v) for r, row in enumerate(dense) for c, v in enumerate(row)))

    def _check(self, r: int, c: int) -> None:
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError(f"entry ({r}, {c}) outside a {self.rows}x{self.cols} matrix")

    def __getitem__(self, rc: tuple[int, int]) -> Fraction:
        r, c = rc
        self._check(r, c)
        return self.data.get(r, {}).get(c, Fraction(0))

    def __setitem__(self, rc: tuple[int, int], value) -> None:
        r, c = rc
        self._check(r, c)
        value = Fraction(value)
        if value:
            self.data.setdefault(r, {})[c] = value
        elif r in self.data:
            self.data[r].pop(c, None)
            if not self.data[r]:
                del self.data[r]

    def add(self, r: int, c: int, value) -> None:
        self[r, c] = self[r, c] + value

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def nnz(self) -> int:
        return sum(len(row) for row in self.data.values())

    def is_zero(self) -> bool:
        return not self.data

    def entries(self) -> list[tuple[int, int, Fraction]]:
        return [(r, c, v) for r in sorted(self.data) for c, v in sorted(self.data[r].items())]

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix.from_entries(self.cols, self.rows, ((c, r, v) for r, c, v in self.entries()))

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        out = SparseMatrix(self.rows, other.cols)
        for r, row in self.data.items():
            acc: dict[int, Fraction] = {}
            for k, v in row.items():
                for c, w in other.data.get(k, {}).items():
                    acc[c] = acc.get(c, 0) + v * w
            for c, v in acc.items():
                if v:
                    out.data.setdefault(r, {})[c] = Fraction(v)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def permuted(self, row_perm: list[int] | None = None, col_perm: list[int] | None = None) -> "SparseMatrix":
        """Matrix with row r moved to row_perm[r] and column c to col_perm[c]."""
        rp = row_perm or list(range(self.rows))
        cp = col_perm or list(range(self.cols))
        return SparseMatrix.from_entries(self.rows, self.cols, ((rp[r], cp[c], v) for r, c, v in self.entries()))

    def to_dense(self) -> list[list[Fraction]]:
        return [[self[r, c] for c in range(self.cols)] for r in range(self.rows)]

    def rank(self) -> int:
        return sparse_rank(self)

    def nullspace(self) -> tuple[list[int], list[dict[int, Fraction]]]:
        return nullspace(self)


def _integer_rows(M: SparseMatrix) -> dict[int, dict[int, int]]:
    rows = {}
    for r, row in M.data.items():
        scale = lcm(*(v.denominator for v in row.values()))
        ints = {c: int(v * scale) for c, v in row.items()}
        g = gcd(*ints.values())
        rows[r] = {c: v // g for c, v in ints.items()}
    return rows


def sparse_rank(M: SparseMatrix) -> int:
    """Exact rank by fraction-free elimination with sparsity-driven pivoting."""
    active = _integer_rows(M)
    col_rows: dict[int, set[int]] = {}
    for r, row in active.items():
        for c in row:
            col_rows.setdefault(c, set()).add(r)
    rank = 0
    while active:
        pr = min(active, key=lambda r: (len(active[r]), r))
        prow = active.pop(pr)
        pc = min(prow)
        pv = prow[pc]
        for c in prow:
            col_rows[c].discard(pr)
        for r in sorted(col_rows.get(pc, ())):
            row = active[r]
            f = row[pc]
            for c in row:
                col_rows[c].discard(r)
            new = {c: pv * v for c, v in row.items()}
            for c, v in prow.items():
                x = new.get(c, 0) - f * v
                if x:
                    new[c] = x
                else:
                    new.pop(c, None)
            if new:
                g = gcd(*new.values())
                if g != 1:
                    new = {c: v // g for c, v in new.items()}
                active[r] = new
                for c in new:
                    col_rows.setdefault(c, set()).add(r)
            else:
                del active[r]
        rank += 1
    return rank


def rref(M: SparseMatrix) -> tuple[list[dict[int, Fraction]], list[int]]:
    """Reduced row echelon form: nonzero rows and their pivot columns, pivots increasing."""
    rows = [dict(M.data[r]) for r in sorted(M.data)]
    pivots: list[int] = []
    done: list[dict[int, Fraction]] = []
    for col in range(M.cols):
        idx = next((i for i, row in enumerate(rows) if col in row), None)
        if idx is None:
            continue
        prow = rows.pop(idx)
        inv = 1 / prow[col]
        prow = {c: v * inv for c, v in prow.items()}
        for group in (rows, done):
            for i, row in enumerate(group):
                f = row.get(col)
                if f:
                    new = dict(row)
                    for c, v in prow.items():
                        x = new.get(c, 0) - f * v
                        if x:
                            new[c] = x
                        else:
                            new.pop(c, None)
                    group[i] = new
        rows = [row for row in rows if row]
        done.append(prow)
        pivots.append(col)
    return done, pivots


def nullspace(M: SparseMatrix) -> tuple[list[int], list[dict[int, Fraction]]]:
    """Kernel basis, one vector per free column, each equal to 1 on its own free column.

    Coordinates of any kernel vector in this basis are its entries on the free columns.
    """
    reduced, pivots = rref(M)
    pivot_set = set(pivots)
    free = [c for c in range(M.cols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = {f: Fraction(1)}
        for row, pc in zip(reduced, pivots):
            v = row.get(f)
            if v:
                vec[pc] = -v
        basis.append(vec)
    return free, basis
