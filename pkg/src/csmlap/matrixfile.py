"""Plain-text matrix files.

::

    ring poly:a,b,c,d
    rows 1 2
    cols 1 2
    a b
    c d

Blank lines and ``#`` comments are ignored.  Entry literals must not contain
whitespace.
"""
from __future__ import annotations

from pathlib import Path

from .index import OrderedIndexSet, split_labels
from .matrix import LabeledMatrix
from .ring import ParseError, RingContext


def parse_matrix(text: str, ring: RingContext | None = None) -> LabeledMatrix:
    """Read a matrix document; ``ring`` overrides the header's ring."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if len(lines) < 3:
        raise ParseError("matrix file needs ring, rows and cols lines")
    header = {}
    for line in lines[:3]:
        key, _, rest = line.partition(" ")
        if key not in ("ring", "rows", "cols") or key in header:
            raise ParseError(f"expected ring/rows/cols header, got {line!r}")
        header[key] = rest.strip()
    ctx = ring or RingContext.from_spec(header["ring"])
    try:
        rows = OrderedIndexSet(split_labels(header["rows"]))
        cols = OrderedIndexSet(split_labels(header["cols"]))
    except ValueError as e:
        raise ParseError(str(e)) from None
    body = lines[3:]
    if len(body) != len(rows):
        raise ParseError(f"{len(body)} entry lines for {len(rows)} rows")
    entries = []
    for k, line in enumerate(body):
        toks = line.split()
        if len(toks) != len(cols):
            raise ParseError(f"row {k + 1}: {len(toks)} entries for {len(cols)} columns")
        entries.append([ctx.parse(t) for t in toks])
    return LabeledMatrix(rows, cols, entries, ctx)


def read_matrix(path, ring: RingContext | None = None) -> LabeledMatrix:
    return parse_matrix(Path(path).read_text(), ring)


def format_matrix(A: LabeledMatrix) -> str:
    out = [f"ring {A.ctx.spec}",
           "rows " + " ".join(map(str, A.rows)),
           "cols " + " ".join(map(str, A.cols))]
    for r in A.entries:
        out.append(" ".join(str(x).replace(" ", "") for x in r))
    return "\n".join(out) + "\n"


def write_matrix(A: LabeledMatrix, path) -> None:
    Path(path).write_text(format_matrix(A))
