"""Laplace expansion along a fixed set of rows, for arbitrary label orders."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .index import Label, OrderedIndexSet, complement, k_subsets, sign_from_rank_sum
from .matrix import LabeledMatrix, MatrixError, det_leibniz

VARIANTS = ("position", "rank")

# minors up to this size go to the Leibniz oracle, larger ones expand along a row
LEIBNIZ_MINOR_MAX = 4


@dataclass(frozen=True)
class ExpansionTerm:
    """One summand: ``product == sign * minor_first * minor_second``."""

    subset: tuple[Label, ...]
    sign: int
    minor_first: Any
    minor_second: Any
    product: Any


def det_minor(M: LabeledMatrix):
    """Determinant used for minors inside expansions.

    Kept separate from :func:`det_leibniz` above ``LEIBNIZ_MINOR_MAX`` so the
    expansion path can be checked against the oracle.
    """
    if not M.is_square:
        raise MatrixError("minor of a non-square block")
    n = len(M.rows)
    if n <= LEIBNIZ_MINOR_MAX:
        return det_leibniz(M)
    return _det_first_row(M.entries, M.ctx)


def _det_first_row(E, ctx):
    n = len(E)
    if n <= LEIBNIZ_MINOR_MAX:
        return det_leibniz(LabeledMatrix(OrderedIndexSet.natural(n), OrderedIndexSet.natural(n),
                                         E, ctx, check=False))
    total = ctx.zero
    top = E[0]
    for j in range(n):
        if not top[j]:
            continue
        sub = [r[:j] + r[j + 1:] for r in E[1:]]
        t = top[j] * _det_first_row(sub, ctx)
        total = total - t if j % 2 else total + t
    return total


def _check(A: LabeledMatrix, variant: str):
    if not A.is_square:
        raise MatrixError(f"Laplace expansion of non-square {A.shape[0]}x{A.shape[1]} matrix")
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, not {variant!r}")


def laplace_terms(A: LabeledMatrix, K, variant: str = "rank", *, complement_form: bool = False):
    """Terms of the expansion along rows ``K``, one per column subset ``L``.

    The outer sign from ``K`` is folded into each term's ``sign``.  With
    ``complement_form`` the second minor is taken as ``A(K|L)`` instead of
    ``A[K'|L']``.
    """
    _check(A, variant)
    K = A.rows.subset(K)
    Kp = complement(A.rows, K)
    outer = sign_from_rank_sum(A.rows, A.rows.labels, K, variant)
    terms = []
    for L in k_subsets(A.cols, len(K)):
        s = outer * sign_from_rank_sum(A.cols, A.cols.labels, L, variant)
        m1 = det_minor(A.keep(K, L))
        if complement_form:
            m2 = det_minor(A.drop(K, L))
        else:
            m2 = det_minor(A.keep(Kp, complement(A.cols, L)))
        p = m1 * m2
        terms.append(ExpansionTerm(tuple(L), s, m1, m2, p if s > 0 else -p))
    return terms


def laplace_det(A: LabeledMatrix, K, variant: str = "rank", *, complement_form: bool = False):
    """``det(A)`` via expansion along the row subset ``K``."""
    total = A.ctx.zero
    for t in laplace_terms(A, K, variant, complement_form=complement_form):
        total = total + t.product
    return total
