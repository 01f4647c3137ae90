"""Reading and writing Burmeister ``.cxt`` files.

Layout::

    B
    <blank>
    |G|
    |M|
    <blank>
    object names, one per line
    attribute names, one per line
    |G| rows of '.'/'X', each of length |M|

Writing always emits ``X``; reading also accepts lowercase ``x`` and CRLF.
"""

from __future__ import annotations

from pathlib import Path

from richfca.context import FormalContext
from richfca.errors import CxtParseError


def write_cxt(K: FormalContext) -> str:
    lines = ["B", "", str(K.n_objects), str(K.n_attributes), ""]
    lines += K.object_names
    lines += K.attribute_names
    lines += K.to_strings()
    return "\n".join(lines) + "\n"


def _count(line: str, lineno: int, what: str) -> int:
    text = line.strip()
    if not text.isdigit():
        raise CxtParseError(f"expected the number of {what}, got {line!r}", lineno)
    return int(text)


def read_cxt(text: str) -> FormalContext:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    lines = [ln[:-1] if ln.endswith("\r") else ln for ln in lines]

    def line(i: int) -> str:
        if i >= len(lines):
            raise CxtParseError("unexpected end of file", i + 1)
        return lines[i]

    if line(0).strip() != "B":
        raise CxtParseError(f"expected header 'B', got {line(0)!r}", 1)
    if line(1).strip():
        raise CxtParseError("expected a blank line after the header", 2)
    n_obj = _count(line(2), 3, "objects")
    n_attr = _count(line(3), 4, "attributes")
    if line(4).strip():
        raise CxtParseError("expected a blank line after the dimensions", 5)

    pos = 5
    objects = [line(pos + i) for i in range(n_obj)]
    pos += n_obj
    attributes = [line(pos + i) for i in range(n_attr)]
    pos += n_attr

    rows = []
    for i in range(n_obj):
        row = line(pos + i)
        if len(row.rstrip()) == n_attr:
            row = row.rstrip()
        if len(row) != n_attr:
            raise CxtParseError(
                f"row has {len(row)} entries, expected {n_attr}", pos + i + 1)
        mask = 0
        for j, c in enumerate(row):
            if c in "Xx":
                mask |= 1 << j
            elif c != ".":
                raise CxtParseError(f"illegal character {c!r} in row", pos + i + 1)
        rows.append(mask)
    pos += n_obj
    for i in range(pos, len(lines)):
        if lines[i].strip():
            raise CxtParseError("trailing content after the incidence rows", i + 1)

    try:
        return FormalContext.from_masks(objects, attributes, rows)
    except ValueError as exc:
        raise CxtParseError(str(exc), 6) from None


def load(path: str | Path) -> FormalContext:
    return read_cxt(Path(path).read_text(encoding="utf-8"))


def save(K: FormalContext, path: str | Path) -> None:
    Path(path).write_text(write_cxt(K), encoding="utf-8")
