"""Dense matrices whose rows and columns are addressed by labels."""
from __future__ import annotations

from typing import Iterable, Sequence

from .index import Label, LabelLike, OrderedIndexSet, as_label, complement
from .ring import RingContext

LEIBNIZ_MAX_N = 9


class MatrixError(ValueError):
    pass


class OracleCapExceeded(MatrixError):
    pass


class LabeledMatrix:
    """Immutable matrix over ``ctx`` with label sets ``rows`` and ``cols``.

    ``entries[i][j]`` holds the entry at the ``i``-th row label and ``j``-th
    column label in order.  Operations return new matrices.
    """

    __slots__ = ("rows", "cols", "entries", "ctx")

    def __init__(self, rows, cols, entries: Sequence[Sequence], ctx: RingContext, *, check=True):
        self.rows = rows if isinstance(rows, OrderedIndexSet) else OrderedIndexSet(rows)
        self.cols = cols if isinstance(cols, OrderedIndexSet) else OrderedIndexSet(cols)
        self.entries = tuple(tuple(r) for r in entries)
        self.ctx = ctx
        if check:
            if len(self.entries) != len(self.rows):
                raise MatrixError(f"{len(self.entries)} entry rows for {len(self.rows)} row labels")
            for r in self.entries:
                if len(r) != len(self.cols):
                    raise MatrixError(f"row of length {len(r)} for {len(self.cols)} column labels")
                ctx.check(*r)

    @classmethod
    def from_rows(cls, data: Sequence[Sequence], ctx: RingContext | None = None,
                  rows=None, cols=None) -> "LabeledMatrix":
        """Build from nested lists; plain ints are mapped into ``ctx``."""
        ctx = ctx or RingContext.integers()
        data = [list(r) for r in data]
        m = len(data)
        n = len(data[0]) if data else 0
        rows = OrderedIndexSet.natural(m) if rows is None else rows
        cols = OrderedIndexSet.natural(n) if cols is None else cols
        conv = [[ctx.coerce(x) if isinstance(x, int) and not ctx.contains(x) else x for x in r]
                for r in data]
        return cls(rows, cols, conv, ctx)

    @classmethod
    def zeros(cls, rows, cols, ctx: RingContext) -> "LabeledMatrix":
        rows = rows if isinstance(rows, OrderedIndexSet) else OrderedIndexSet(rows)
        cols = cols if isinstance(cols, OrderedIndexSet) else OrderedIndexSet(cols)
        z = ctx.zero
        return cls(rows, cols, [[z] * len(cols) for _ in rows], ctx, check=False)

    @classmethod
    def identity(cls, n: int, ctx: RingContext | None = None) -> "LabeledMatrix":
        ctx = ctx or RingContext.integers()
        z, o = ctx.zero, ctx.one
        return cls(OrderedIndexSet.natural(n), OrderedIndexSet.natural(n),
                   [[o if i == j else z for j in range(n)] for i in range(n)], ctx, check=False)

    @classmethod
    def symbolic(cls, n: int, prefix: str = "a") -> "LabeledMatrix":
        """``n x n`` matrix of indeterminates ``a11, a12, ...`` over the integers."""
        def name(i, j):
            return f"{prefix}{i}{j}" if n < 10 else f"{prefix}{i}_{j}"
        names = [name(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
        ctx = RingContext.poly(names)
        return cls.from_rows([[ctx.var(name(i, j)) for j in range(1, n + 1)]
                              for i in range(1, n + 1)], ctx)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    @property
    def is_square(self) -> bool:
        return len(self.rows) == len(self.cols)

    def __getitem__(self, key):
        r, c = key
        return self.entries[self.rows.index(r)][self.cols.index(c)]

    def __eq__(self, other):
        return (isinstance(other, LabeledMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.ctx == other.ctx
                and self.entries == other.entries)

    def __repr__(self):
        return f"LabeledMatrix({len(self.rows)}x{len(self.cols)} over {self.ctx.spec})"

    def to_lists(self) -> list[list]:
        return [list(r) for r in self.entries]

    def transpose(self) -> "LabeledMatrix":
        return LabeledMatrix(self.cols, self.rows, list(zip(*self.entries)) if self.entries
                             else [[] for _ in self.cols], self.ctx, check=False)

    def relabel(self, rows, cols) -> "LabeledMatrix":
        """Same entries under new label sets of the same sizes."""
        return LabeledMatrix(rows, cols, self.entries, self.ctx)

    def submatrix(self, rows: Iterable[LabelLike] | None = None,
                  cols: Iterable[LabelLike] | None = None, *,
                  drop_rows: bool = False, drop_cols: bool = False) -> "LabeledMatrix":
        """Keep (or, with ``drop_*``, remove) the given labels; ``None`` means all rows/cols.

        ``A[X|Y]`` is ``submatrix(X, Y)``, ``A(X|Y)`` is
        ``submatrix(X, Y, drop_rows=True, drop_cols=True)``, and the mixed
        forms set one flag only.
        """
        r = _select(self.rows, rows, drop_rows)
        c = _select(self.cols, cols, drop_cols)
        ri = [self.rows.index(x) for x in r]
        ci = [self.cols.index(x) for x in c]
        return LabeledMatrix(OrderedIndexSet(r, restricted=True), OrderedIndexSet(c, restricted=True),
                             [[self.entries[i][j] for j in ci] for i in ri], self.ctx, check=False)

    def keep(self, rows, cols) -> "LabeledMatrix":
        return self.submatrix(rows, cols)

    def drop(self, rows, cols) -> "LabeledMatrix":
        return self.submatrix(rows, cols, drop_rows=True, drop_cols=True)

    def with_entry(self, r: LabelLike, c: LabelLike, value) -> "LabeledMatrix":
        self.ctx.check(value)
        i, j = self.rows.index(r), self.cols.index(c)
        new = [list(x) for x in self.entries]
        new[i][j] = value
        return LabeledMatrix(self.rows, self.cols, new, self.ctx, check=False)

    def is_zero(self) -> bool:
        return not any(x for r in self.entries for x in r)

    def to_text(self) -> str:
        """Bordered layout with column labels on top and row labels on the left."""
        cells = [[str(x) for x in r] for r in self.entries]
        head = [str(c) for c in self.cols]
        rlab = [str(r) for r in self.rows]
        w = max([len(s) for s in head] + [len(s) for r in cells for s in r] + [1])
        lw = max([len(s) for s in rlab] + [0])
        lines = [" " * lw + " | " + " ".join(s.rjust(w) for s in head)]
        lines.append("-" * len(lines[0]))
        for lab, r in zip(rlab, cells):
            lines.append(lab.rjust(lw) + " | " + " ".join(s.rjust(w) for s in r))
        return "\n".join(lines)


def _select(order: OrderedIndexSet, xs, drop: bool) -> tuple[Label, ...]:
    if xs is None:
        return () if drop else order.labels
    xs = order.subset(xs)
    return complement(order, xs) if drop else xs


def submatrix(A: LabeledMatrix, rows=None, cols=None, *, drop_rows=False, drop_cols=False) -> LabeledMatrix:
    return A.submatrix(rows, cols, drop_rows=drop_rows, drop_cols=drop_cols)


def row_op_sub(A: LabeledMatrix, i: LabelLike, j: LabelLike) -> LabeledMatrix:
    """Replace row ``i`` by row ``i`` minus row ``j``."""
    a, b = A.rows.index(i), A.rows.index(j)
    if a == b:
        raise MatrixError("row operation needs two distinct rows")
    new = list(A.entries)
    new[a] = tuple(x - y for x, y in zip(A.entries[a], A.entries[b]))
    return LabeledMatrix(A.rows, A.cols, new, A.ctx, check=False)


def col_op_add(A: LabeledMatrix, i: LabelLike, j: LabelLike) -> LabeledMatrix:
    """Replace column ``i`` by column ``i`` plus column ``j``."""
    a, b = A.cols.index(i), A.cols.index(j)
    if a == b:
        raise MatrixError("column operation needs two distinct columns")
    new = []
    for r in A.entries:
        r = list(r)
        r[a] = r[a] + r[b]
        new.append(r)
    return LabeledMatrix(A.rows, A.cols, new, A.ctx, check=False)


def det_leibniz(A: LabeledMatrix):
    """Sum over all permutations of signed products; 0x0 gives 1.

    Branches that hit a zero entry are skipped, which leaves the sum
    unchanged.  Refuses sizes above ``LEIBNIZ_MAX_N``.
    """
    if not A.is_square:
        raise MatrixError(f"determinant of non-square {A.shape[0]}x{A.shape[1]} matrix")
    n = len(A.rows)
    if n > LEIBNIZ_MAX_N:
        raise OracleCapExceeded(f"Leibniz oracle is capped at n <= {LEIBNIZ_MAX_N}, got {n}")
    ctx = A.ctx
    if n == 0:
        return ctx.one
    M = A.entries
    pos = ctx.zero
    neg = ctx.zero
    used = [False] * n

    # parity = number of inversions so far, mod 2
    def walk(i, prod, parity):
        nonlocal pos, neg
        if i == n:
            if parity:
                neg = neg + prod
            else:
                pos = pos + prod
            return
        row = M[i]
        above = 0  # used columns to the right of c
        for c in range(n - 1, -1, -1):
            if used[c]:
                above += 1
                continue
            x = row[c]
            if not x:
                continue
            used[c] = True
            walk(i + 1, prod * x, parity ^ (above & 1))
            used[c] = False

    walk(0, ctx.one, 0)
    return pos - neg
