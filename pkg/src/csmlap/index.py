"""Finite linearly ordered label sets and the counting functions on them."""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Union


class IndexSetError(ValueError):
    """A label or subset does not belong to the index set it was used with."""


class Label(NamedTuple):
    """A row or column label; ``successor=True`` marks the label ``base+``."""

    base: Union[int, str]
    successor: bool = False

    def __str__(self):
        b = str(self.base) if isinstance(self.base, int) else f'"{self.base}"'
        return b + ("+" if self.successor else "")

    @property
    def plus(self) -> "Label":
        if self.successor:
            raise IndexSetError(f"{self} is already a successor label")
        return Label(self.base, True)

    @property
    def unplus(self) -> "Label":
        return Label(self.base, False)


LabelLike = Union[Label, int, str]

_LABEL_RE = re.compile(r'\s*(?:(-?\d+)|"([^"]*)")(\+?)\s*\Z')


def parse_label(text: str) -> Label:
    """Read ``3``, ``3+``, ``"r1"`` or ``"r1"+``."""
    m = _LABEL_RE.match(text)
    if not m:
        raise IndexSetError(f"bad label {text!r}")
    num, name, plus = m.groups()
    base = int(num) if num is not None else name
    return Label(base, plus == "+")


def split_labels(text: str) -> list[Label]:
    """Labels separated by commas and/or whitespace; quoted strings may not contain either."""
    toks = [t for t in re.split(r"[,\s]+", text.strip()) if t]
    return [parse_label(t) for t in toks]


def as_label(x: LabelLike) -> Label:
    if isinstance(x, Label):
        return x
    if isinstance(x, bool):
        raise IndexSetError(f"bad label {x!r}")
    if isinstance(x, (int, str)):
        return Label(x)
    raise IndexSetError(f"bad label {x!r}")


class OrderedIndexSet:
    """Labels in strictly increasing order.

    Subsets handed back by this module are tuples of :class:`Label` sorted by
    this order.
    """

    __slots__ = ("labels", "_pos")

    def __init__(self, labels: Iterable[LabelLike], *, restricted: bool = False):
        # restricted=True: a sub-order of a larger one, where f+ may appear without f
        self.labels = tuple(as_label(x) for x in labels)
        self._pos = {lab: i for i, lab in enumerate(self.labels)}
        if len(self._pos) != len(self.labels):
            raise IndexSetError("duplicate labels in ordered index set")
        if restricted:
            return
        for i, lab in enumerate(self.labels):
            if lab.successor and (i == 0 or self.labels[i - 1] != lab.unplus):
                raise IndexSetError(f"{lab} must directly follow {lab.unplus}")

    @classmethod
    def natural(cls, n: int) -> "OrderedIndexSet":
        """The order 1 < 2 < ... < n."""
        return cls(range(1, n + 1))

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __contains__(self, x):
        try:
            return as_label(x) in self._pos
        except IndexSetError:
            return False

    def __eq__(self, other):
        return isinstance(other, OrderedIndexSet) and self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        return "OrderedIndexSet(" + " ".join(map(str, self.labels)) + ")"

    def __str__(self):
        return "(" + ", ".join(map(str, self.labels)) + ")"

    def index(self, x: LabelLike) -> int:
        """0-based slot of ``x``."""
        lab = as_label(x)
        try:
            return self._pos[lab]
        except KeyError:
            raise IndexSetError(f"label {lab} not in {self}") from None

    def subset(self, xs: Iterable[LabelLike]) -> tuple[Label, ...]:
        """Validate ``xs`` and return it sorted in this order."""
        return tuple(self.labels[i] for i in self.positions(xs))

    def positions(self, xs: Iterable[LabelLike]) -> list[int]:
        pos = self._pos
        out = set()
        for x in xs:
            i = pos.get(x) if type(x) is Label else None
            out.add(self.index(x) if i is None else i)
        return sorted(out)


def position(order: OrderedIndexSet, S: Iterable[LabelLike], x: LabelLike) -> int:
    """Number of elements of ``S`` that are ``<= x``."""
    p = order.index(x)
    return sum(1 for q in order.positions(S) if q <= p)


def rank(order: OrderedIndexSet, S: Iterable[LabelLike], x: LabelLike) -> int:
    """Number of elements of ``S`` strictly below ``x``."""
    p = order.index(x)
    return sum(1 for q in order.positions(S) if q < p)


def sign_from_rank_sum(order: OrderedIndexSet, S, K, variant: str = "rank") -> int:
    """``(-1)`` to the sum over ``K`` of rank (or position) relative to ``S``."""
    if variant not in ("rank", "position"):
        raise ValueError(f"variant must be 'rank' or 'position', not {variant!r}")
    spos = order.positions(S)
    strict = variant == "rank"
    total = 0
    for p in order.positions(K):
        total += sum(1 for q in spos if q < p or (q == p and not strict))
    return -1 if total % 2 else 1


def complement(order: OrderedIndexSet, S: Iterable[LabelLike]) -> tuple[Label, ...]:
    drop = set(order.subset(S))
    return tuple(lab for lab in order.labels if lab not in drop)


def extend_order(order: OrderedIndexSet, F: Iterable[LabelLike]) -> OrderedIndexSet:
    """Insert ``f+`` right after every ``f`` in ``F``."""
    F = set(order.subset(F))
    if any(lab.successor for lab in order):
        raise IndexSetError("cannot extend an order that already has successor labels")
    out = []
    for lab in order:
        out.append(lab)
        if lab in F:
            out.append(lab.plus)
    return OrderedIndexSet(out)


def k_subsets(order: OrderedIndexSet, k: int) -> Iterator[tuple[Label, ...]]:
    """All ``k``-subsets, lexicographic in their sorted position vectors."""
    if not 0 <= k <= len(order):
        raise IndexSetError(f"k={k} out of range for a set of size {len(order)}")
    return combinations(order.labels, k)


@dataclass(frozen=True)
class CsmPartition:
    """Rows split as ``(F, I, I')``; ``G`` the fixed column block.

    ``J`` and ``J'`` vary per expansion term over splits of ``cols \\ G``.
    """

    F: tuple[Label, ...]
    I: tuple[Label, ...]
    Iprime: tuple[Label, ...]
    G: tuple[Label, ...]

    @classmethod
    def make(cls, rows: OrderedIndexSet, cols: OrderedIndexSet, F, G, I) -> "CsmPartition":
        """Build from ``F``, ``G``, ``I``; ``I'`` is whatever rows are left."""
        F = rows.subset(F)
        I = rows.subset(I)
        G = cols.subset(G)
        if set(F) & set(I):
            raise IndexSetError("F and I must be disjoint")
        if len(F) != len(G):
            raise IndexSetError(f"|F|={len(F)} but |G|={len(G)}")
        if len(rows) != len(cols):
            raise IndexSetError("row and column sets differ in size")
        Ip = complement(rows, F + I)
        return cls(F, I, Ip, G)

    def validate(self, rows: OrderedIndexSet, cols: OrderedIndexSet) -> None:
        again = CsmPartition.make(rows, cols, self.F, self.G, self.I)
        if set(again.Iprime) != set(self.Iprime):
            raise IndexSetError("F, I, I' do not partition the rows")

    def free_cols(self, cols: OrderedIndexSet) -> tuple[Label, ...]:
        """``J u J'``, the columns outside ``G``."""
        return complement(cols, self.G)

    def free_rows(self, rows: OrderedIndexSet) -> tuple[Label, ...]:
        """``I u I'``."""
        return complement(rows, self.F)

    def j_choices(self, cols: OrderedIndexSet) -> Iterator[tuple[tuple[Label, ...], tuple[Label, ...]]]:
        """Pairs ``(J, J')`` in enumeration order."""
        free = OrderedIndexSet(self.free_cols(cols), restricted=True)
        for J in k_subsets(free, len(self.I)):
            yield J, complement(free, J)

    def describe(self) -> str:
        def s(xs):
            return "{" + ",".join(map(str, xs)) + "}"
        return f"F={s(self.F)} G={s(self.G)} I={s(self.I)} I'={s(self.Iprime)}"
