"""Reading and writing polytope files.

Three formats are supported:

* ``plain``: one polytope per line, vertices as ``(x1,y1,...);(x2,y2,...)``;
  an optional ``id:`` prefix names the polytope. Blank lines and ``#``
  comments are skipped.
* ``json``: an array of ``{"id": ..., "vertices": [[...], ...]}`` objects.
* ``grdb-matrix``: blocks of a header line ``d n`` followed by ``d`` rows of
  ``n`` integers (columns are vertices). ``transpose=True`` reads ``n`` rows
  of ``d`` integers instead.
"""

import hashlib
import json
import logging
import re
from typing import Iterable, Optional

from pydantic import TypeAdapter, ValidationError

from config import InputFormat
from errors import ParseError
from data.records import PolytopeRecord

logger = logging.getLogger(__name__)

_VERTEX = re.compile(r"\(\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\)")
_RECORDS = TypeAdapter(list[PolytopeRecord])


def content_id(vertices: Iterable[Iterable[int]]) -> str:
    """Short content hash used when the input carries no identifier."""
    text = ";".join(",".join(str(x) for x in v) for v in vertices)
    return hashlib.sha256(text.encode("ascii")).hexdigest()[:12]


def _make_record(
    vertices: list[tuple[int, ...]],
    record_id: Optional[str],
    line: Optional[int],
    tags: Optional[dict[str, str]] = None,
) -> PolytopeRecord:
    try:
        return PolytopeRecord(
            id=record_id or content_id(vertices), vertices=vertices, tags=tags or {}
        )
    except ValidationError as e:
        raise ParseError(e.errors()[0]["msg"], line) from e


def _parse_plain(text: str) -> list[PolytopeRecord]:
    records = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        record_id = None
        if ":" in line:
            record_id, line = (part.strip() for part in line.split(":", 1))
        parts = [p.strip() for p in line.split(";") if p.strip()]
        vertices = []
        for part in parts:
            match = _VERTEX.fullmatch(part)
            if not match:
                raise ParseError(f"malformed vertex {part!r}", number)
            vertices.append(tuple(int(x) for x in match.group(1).split(",")))
        if not vertices:
            raise ParseError("no vertices", number)
        records.append(_make_record(vertices, record_id, number))
    return records


def _parse_json(text: str) -> list[PolytopeRecord]:
    if not text.strip():
        return []
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno) from e
    if not isinstance(payload, list):
        raise ParseError("expected a JSON array of polytopes", 1)
    for item in payload:
        if isinstance(item, dict) and "id" not in item and "vertices" in item:
            item["id"] = content_id(item["vertices"])
    try:
        return _RECORDS.validate_python(payload)
    except ValidationError as e:
        raise ParseError(str(e.errors()[0]["msg"])) from e


def _parse_grdb(text: str, transpose: bool) -> list[PolytopeRecord]:
    lines = [
        (number, raw.split("#", 1)[0].split())
        for number, raw in enumerate(text.splitlines(), start=1)
    ]
    lines = [(number, tokens) for number, tokens in lines if tokens]
    records = []
    position = 0
    while position < len(lines):
        number, header = lines[position]
        try:
            d, n = (int(x) for x in header)
        except ValueError as e:
            raise ParseError(f"expected header 'dimension count', got {' '.join(header)!r}", number) from e
        rows, width = (n, d) if transpose else (d, n)
        body = lines[position + 1 : position + 1 + rows]
        if len(body) < rows:
            raise ParseError(f"expected {rows} rows after header", number)
        matrix = []
        for row_number, tokens in body:
            if len(tokens) != width:
                raise ParseError(f"expected {width} integers, got {len(tokens)}", row_number)
            try:
                matrix.append([int(x) for x in tokens])
            except ValueError as e:
                raise ParseError(f"non-integer entry in {' '.join(tokens)!r}", row_number) from e
        vertices = [tuple(r) for r in matrix] if transpose else [tuple(c) for c in zip(*matrix)]
        records.append(_make_record(vertices, None, number, {"source": "grdb"}))
        position += 1 + rows
    return records


def parse(text: str, fmt: InputFormat = InputFormat.PLAIN, transpose: bool = False) -> list[PolytopeRecord]:
    """Parse polytope records.

    Args:
        text: File contents.
        fmt: Input format.
        transpose: For ``grdb-matrix``, read vertices as rows.

    Returns:
        The records in file order; an empty input gives an empty list.

    Raises:
        ParseError: On malformed input, with the offending line number.

    Example:
        >>> parse("(2,-1);(0,1);(-1,0)")[0].vertices
        [(2, -1), (0, 1), (-1, 0)]
    """
    fmt = InputFormat(fmt)
    if fmt == InputFormat.PLAIN:
        records = _parse_plain(text)
    elif fmt == InputFormat.JSON:
        records = _parse_json(text)
    else:
        records = _parse_grdb(text, transpose)
    logger.debug(f"Parsed {len(records)} records as {fmt.value}")
    return records


def serialize(records: Iterable[PolytopeRecord], fmt: InputFormat = InputFormat.PLAIN, transpose: bool = False) -> str:
    """Write records so that :func:`parse` reads them back unchanged."""
    fmt = InputFormat(fmt)
    records = list(records)
    if fmt == InputFormat.PLAIN:
        return "".join(
            f"{r.id}: " + ";".join("(" + ",".join(str(x) for x in v) + ")" for v in r.vertices) + "\n"
            for r in records
        )
    if fmt == InputFormat.JSON:
        return _RECORDS.dump_json(records, indent=2).decode("utf-8") + "\n"
    blocks = []
    for r in records:
        lines = [f"{r.dimension} {len(r.vertices)}"]
        rows = r.vertices if transpose else list(zip(*r.vertices))
        lines += [" ".join(str(x) for x in row) for row in rows]
        blocks.append("\n".join(lines) + "\n")
    return "".join(blocks)
