"""Dense matrices over a finite field with exact elimination."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import FieldMismatchError, TgrsError
from .field import GF, FieldElem


class MatGF:
    """Row-major matrix of packed field ints.

    Zero-row matrices are allowed so that e.g. a kernel basis of a full-rank
    map can be represented.
    """

    __slots__ = ("ctx", "rows", "ncols")

    def __init__(self, ctx: GF, rows: Sequence[Sequence[int | FieldElem]], ncols: int | None = None):
        self.ctx = ctx
        self.rows = [[ctx.coerce(x) for x in r] for r in rows]
        if ncols is None:
            if not self.rows:
                raise TgrsError("empty matrix needs an explicit column count")
            ncols = len(self.rows[0])
        if any(len(r) != ncols for r in self.rows):
            raise TgrsError("ragged matrix rows")
        self.ncols = ncols

    @classmethod
    def _raw(cls, ctx: GF, rows: list[list[int]], ncols: int) -> MatGF:
        obj = cls.__new__(cls)
        obj.ctx, obj.rows, obj.ncols = ctx, rows, ncols
        return obj

    @classmethod
    def identity(cls, ctx: GF, n: int) -> MatGF:
        return cls._raw(ctx, [[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, ctx: GF, r: int, c: int) -> MatGF:
        return cls._raw(ctx, [[0] * c for _ in range(r)], c)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, MatGF) and self.ctx == other.ctx and self.shape == other.shape and self.rows == other.rows

    def __repr__(self) -> str:
        return f"MatGF({self.ctx!r}, {self.rows})"

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def copy(self) -> MatGF:
        return MatGF._raw(self.ctx, self.tolist(), self.ncols)

    @property
    def T(self) -> MatGF:
        r, c = self.shape
        return MatGF._raw(self.ctx, [[self.rows[i][j] for i in range(r)] for j in range(c)], r)

    def columns(self, idx: Sequence[int]) -> MatGF:
        return MatGF._raw(self.ctx, [[r[j] for j in idx] for r in self.rows], len(idx))

    def __matmul__(self, other: MatGF) -> MatGF:
        if other.ctx != self.ctx:
            raise FieldMismatchError("matrices over different fields")
        if self.ncols != len(other.rows):
            raise TgrsError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.T.rows
        dot = self.ctx.dot
        return MatGF._raw(self.ctx, [[dot(r, c) for c in cols] for r in self.rows], other.ncols)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    # elimination ------------------------------------------------------------

    def rref(self) -> tuple[MatGF, list[int]]:
        """Reduced row echelon form and the pivot columns (first-nonzero pivoting)."""
        f = self.ctx
        m = self.tolist()
        nrows = len(m)
        pivots: list[int] = []
        r = 0
        for c in range(self.ncols):
            if r >= nrows:
                break
            piv = next((i for i in range(r, nrows) if m[i][c]), None)
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            inv = f.inv(m[r][c])
            m[r] = [f.mul(inv, x) for x in m[r]]
            for i in range(nrows):
                if i != r and m[i][c]:
                    fac = m[i][c]
                    m[i] = [f.sub(x, f.mul(fac, y)) for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
        return MatGF._raw(f, m, self.ncols), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def det(self) -> int:
        n, c = self.shape
        if n != c:
            raise TgrsError(f"determinant of non-square {self.shape} matrix")
        return determinant_rows(self.ctx, self.rows)

    def nullspace(self) -> MatGF:
        """Basis of the right kernel, one vector per row."""
        f = self.ctx
        red, pivots = self.rref()
        free = [j for j in range(self.ncols) if j not in set(pivots)]
        basis = []
        for fj in free:
            v = [0] * self.ncols
            v[fj] = 1
            for i, pc in enumerate(pivots):
                v[pc] = f.neg(red.rows[i][fj])
            basis.append(v)
        return MatGF._raw(f, basis, self.ncols)

    def solve(self, rhs: Sequence[int | FieldElem]) -> Solution:
        if len(rhs) != len(self.rows):
            raise TgrsError(f"right-hand side has length {len(rhs)}, expected {len(self.rows)}")
        f = self.ctx
        b = [f.coerce(x) for x in rhs]
        aug = MatGF._raw(f, [r + [x] for r, x in zip(self.rows, b)], self.ncols + 1)
        red, pivots = aug.rref()
        if self.ncols in pivots:
            return Solution(False, None, self.nullspace())
        x = [0] * self.ncols
        for i, pc in enumerate(pivots):
            x[pc] = red.rows[i][self.ncols]
        return Solution(True, x, self.nullspace())

    def row_space_equals(self, other: MatGF) -> bool:
        if other.ctx != self.ctx or other.ncols != self.ncols:
            return False
        a, _ = self.rref()
        b, _ = other.rref()
        nz = lambda m: [r for r in m.rows if any(r)]
        return nz(a) == nz(b)


@dataclass
class Solution:
    consistent: bool
    particular: list[int] | None
    kernel: MatGF = field(repr=False)

    @property
    def unique(self) -> bool:
        return self.consistent and not self.kernel.rows


def determinant_rows(ctx: GF, rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square list-of-rows matrix by elimination."""
    n = len(rows)
    if n == 0:
        return 1
    f = ctx
    if n == 1:
        return rows[0][0]
    if n == 2:
        return f.sub(f.mul(rows[0][0], rows[1][1]), f.mul(rows[0][1], rows[1][0]))
    m = [list(r) for r in rows]
    det = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = f.neg(det)
        pv = m[c][c]
        det = f.mul(det, pv)
        inv = f.inv(pv)
        for i in range(c + 1, n):
            if m[i][c]:
                fac = f.mul(m[i][c], inv)
                m[i] = [0] * (c + 1) + [f.sub(x, f.mul(fac, y)) for x, y in zip(m[i][c + 1:], m[c][c + 1:])]
    return det


def determinant(m: MatGF) -> FieldElem:
    return m.ctx(m.det())


def rank(m: MatGF) -> int:
    return m.rank()


def solve(m: MatGF, rhs: Sequence[int | FieldElem]) -> Solution:
    return m.solve(rhs)


def nullspace(m: MatGF) -> MatGF:
    return m.nullspace()
