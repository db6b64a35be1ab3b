"""Reading and writing matrix files.

A matrix file is a JSON object ``{"semiring": "FT"|"T"|"TBar", "rows": [...]}``
whose rows hold scalar strings such as ``"3"``, ``"-7/2"``, ``"-inf"`` or
``"+inf"``.  Plain JSON integers are accepted on input; floats are not.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from .core import Flavor, FlavorError, TropicalError, format_scalar, legal, parse_scalar
from .linalg import TropMatrix

_TOKEN = re.compile(r'"(?:[^"\\]|\\.)*"|-?\d[\w.+\-/]*|[\[\]{}:,]')


class MatrixFileError(TropicalError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None,
                 source: str | None = None):
        self.line, self.column, self.source = line, column, source
        where = ""
        if line is not None:
            where = f"line {line}, column {column}: "
        if source:
            where = f"{source}: {where}"
        super().__init__(where + message)


def _line_col(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def _entry_offsets(text: str) -> list[int]:
    """Offsets of the scalar tokens inside the ``rows`` array, in order."""
    tokens = list(_TOKEN.finditer(text))
    out = []
    for k, t in enumerate(tokens):
        if t.group() == '"rows"' and k + 1 < len(tokens) and tokens[k + 1].group() == ":":
            depth = 0
            for u in tokens[k + 2:]:
                g = u.group()
                if g == "[":
                    depth += 1
                elif g == "]":
                    depth -= 1
                    if depth == 0:
                        break
                elif g not in (",",):
                    out.append(u.start())
            break
    return out


def parse_matrix(text: str, source: str | None = None) -> TropMatrix:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise MatrixFileError(e.msg, e.lineno, e.colno, source) from None
    if not isinstance(doc, dict) or set(doc) != {"semiring", "rows"}:
        raise MatrixFileError('expected an object with exactly the keys "semiring" and "rows"',
                              source=source)
    try:
        flavor = Flavor.parse(str(doc["semiring"]))
    except ValueError as e:
        raise MatrixFileError(str(e), source=source) from None
    rows = doc["rows"]
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise MatrixFileError('"rows" must be a non-empty array of arrays', source=source)
    width = len(rows[0])
    offsets = _entry_offsets(text)
    parsed, k = [], 0
    for i, row in enumerate(rows):
        if len(row) != width:
            raise MatrixFileError(f"row {i} has {len(row)} entries, expected {width}",
                                  source=source)
        out = []
        for j, cell in enumerate(row):
            loc = _line_col(text, offsets[k]) if k < len(offsets) else (None, None)
            k += 1
            try:
                if isinstance(cell, bool) or not isinstance(cell, (str, int)):
                    raise ValueError(f"entry must be a scalar string, got {cell!r}")
                a = parse_scalar(cell)
                if not legal(a, flavor):
                    raise FlavorError(f"{cell} is not an element of {flavor.value}")
            except (ValueError, TypeError, FlavorError) as e:
                raise MatrixFileError(f"rows[{i}][{j}]: {e}", *loc, source) from None
            out.append(a)
        parsed.append(out)
    if width == 0:
        raise MatrixFileError("rows must not be empty", source=source)
    return TropMatrix.of(parsed, flavor)


def serialize_matrix(m: TropMatrix) -> str:
    rows = ",\n    ".join("[" + ", ".join(json.dumps(format_scalar(a)) for a in r) + "]"
                          for r in m.rows)
    return f'{{\n  "semiring": "{m.flavor.value}",\n  "rows": [\n    {rows}\n  ]\n}}\n'


def read_matrix(path) -> TropMatrix:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as e:
        raise MatrixFileError(f"cannot read file: {e.strerror}", source=str(p)) from None
    return parse_matrix(text, source=str(p))


def write_matrix(m: TropMatrix, path) -> None:
    Path(path).write_text(serialize_matrix(m))
