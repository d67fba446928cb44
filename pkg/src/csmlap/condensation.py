"""Desnanot-Jacobi identity and Dodgson condensation."""
from __future__ import annotations

from dataclasses import dataclass, field

from .laplace import laplace_det
from .matrix import LabeledMatrix, MatrixError, det_leibniz
from .ring import DivisionError


def desnanot_jacobi(A: LabeledMatrix):
    """Return ``(lhs, rhs, equal)`` for the corner-minor identity.

    ``lhs = det(A(1,n|1,n)) * det(A)`` and
    ``rhs = det(A(1|1)) det(A(n|n)) - det(A(n|1)) det(A(1|n))`` where ``1`` and
    ``n`` are the first and last labels of each side.
    """
    if not A.is_square:
        raise MatrixError("Desnanot-Jacobi needs a square matrix")
    if len(A.rows) < 2:
        raise MatrixError("Desnanot-Jacobi needs n >= 2")
    r1, rn = A.rows.labels[0], A.rows.labels[-1]
    c1, cn = A.cols.labels[0], A.cols.labels[-1]
    lhs = det_leibniz(A.drop([r1, rn], [c1, cn])) * det_leibniz(A)
    rhs = (det_leibniz(A.drop([r1], [c1])) * det_leibniz(A.drop([rn], [cn]))
           - det_leibniz(A.drop([rn], [c1])) * det_leibniz(A.drop([r1], [cn])))
    return lhs, rhs, lhs == rhs


@dataclass
class CondensationTrace:
    """``layers[k]`` holds the ``k x k`` contiguous minors; ``layers[0]`` is all ones."""

    layers: list[list[list]]
    fallback_events: list[tuple[int, int, int]] = field(default_factory=list)  # (size, i, j)

    @property
    def det(self):
        return self.layers[-1][0][0]


def _contiguous_minor(A: LabeledMatrix, k: int, i: int, j: int):
    rows = A.rows.labels[i:i + k]
    cols = A.cols.labels[j:j + k]
    sub = A.keep(rows, cols)
    return laplace_det(sub, rows[:1])


def condense(A: LabeledMatrix) -> CondensationTrace:
    """Run Dodgson condensation, recording every layer.

    Each new minor is ``(NW*SE - NE*SW) / C`` with ``C`` the interior minor
    two layers back; division is exact.  When ``C`` is zero the minor is
    computed directly by Laplace expansion and the position is logged.
    """
    if not A.is_square:
        raise MatrixError("condensation needs a square matrix")
    ctx = A.ctx
    if not ctx.is_integral_domain:
        raise DivisionError(f"condensation needs an integral domain, {ctx.spec} is not one")
    n = len(A.rows)
    one = ctx.one
    layers = [[[one] * (n + 1) for _ in range(n + 1)]]
    if n == 0:
        return CondensationTrace([[[one]]])
    layers.append([list(r) for r in A.entries])
    trace = CondensationTrace(layers)
    for k in range(2, n + 1):
        prev, prev2 = layers[k - 1], layers[k - 2]
        m = n - k + 1
        cur = []
        for i in range(m):
            row = []
            for j in range(m):
                c = prev2[i + 1][j + 1]
                if not c:
                    trace.fallback_events.append((k, i, j))
                    row.append(_contiguous_minor(A, k, i, j))
                    continue
                num = prev[i][j] * prev[i + 1][j + 1] - prev[i][j + 1] * prev[i + 1][j]
                row.append(ctx.exact_div(num, c))
            cur.append(row)
        layers.append(cur)
    return trace


def det_condensation(A: LabeledMatrix):
    return condense(A).det
