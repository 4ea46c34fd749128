"""Text and JSON serialization: matrix files, pretty printing, and the
stable-key JSON document for decompositions."""

import json

from .decomposition import CycleBlock, JordanDecomposition
from .errors import ParseError
from .fields import PrimeField, QQ
from .matrix import Matrix
from .poly import Poly


def parse_matrix(text, field):
    """Matrix text format: first line ``rows cols``, then one row per line,
    entries whitespace separated, rationals as ``a/b`` or integers."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty matrix file")
    header = lines[0].split()
    if len(header) != 2:
        raise ParseError("first line must be 'rows cols'")
    try:
        rows, cols = int(header[0]), int(header[1])
    except ValueError as exc:
        raise ParseError("first line must be 'rows cols'") from exc
    if rows < 1 or cols < 1:
        raise ParseError("matrix dimensions must be positive")
    if len(lines) - 1 != rows:
        raise ParseError(f"expected {rows} rows, got {len(lines) - 1}")
    data = []
    for ln in lines[1:]:
        tokens = ln.split()
        if len(tokens) != cols:
            raise ParseError(f"expected {cols} entries in row: {ln!r}")
        data.append([field.parse(t) for t in tokens])
    return Matrix(field, data)


def format_matrix(m):
    """Column-aligned text rendering (including the header line)."""
    f = m.field
    cells = [[f.fmt(x) for x in row] for row in m.data]
    widths = [max(len(cells[r][c]) for r in range(m.rows)) for c in range(m.cols)]
    lines = [f"{m.rows} {m.cols}"]
    for row in cells:
        lines.append(" ".join(s.rjust(w) for s, w in zip(row, widths)))
    return "\n".join(lines)


def field_tag(field):
    return "Q" if field.char == 0 else f"Fp:{field.char}"


def field_from_tag(tag):
    if tag == "Q":
        return QQ
    if tag.startswith("Fp:"):
        return PrimeField(int(tag[3:]))
    raise ParseError(f"unknown field tag {tag!r}")


def emit_json(dec):
    """Stable-key JSON document for a decomposition; deterministic bytes."""
    f = dec.field
    doc = {
        "form": dec.form,
        "field": field_tag(f),
        "n": dec.j.rows,
        "blocks": [
            {
                "factor": [f.fmt(c) for c in blk.factor.coeffs],
                "cycle_length": blk.cycle_length,
                "offset": blk.offset,
            }
            for blk in dec.blocks
        ],
        "P": [[f.fmt(x) for x in row] for row in dec.p.data],
        "J": [[f.fmt(x) for x in row] for row in dec.j.data],
    }
    return json.dumps(doc, sort_keys=True, indent=2)


def parse_json(text):
    """Inverse of emit_json; reproduces P and J entrywise."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc}") from exc
    try:
        field = field_from_tag(doc["field"])
        p = Matrix(field, [[field.parse(x) for x in row] for row in doc["P"]])
        j = Matrix(field, [[field.parse(x) for x in row] for row in doc["J"]])
        blocks = [
            CycleBlock(factor=Poly(field, [field.parse(c) for c in blk["factor"]]),
                       cycle_length=blk["cycle_length"], offset=blk["offset"])
            for blk in doc["blocks"]
        ]
        return JordanDecomposition(p=p, j=j, form=doc["form"],
                                   blocks=blocks, field=field)
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad decomposition document: {exc}") from exc
