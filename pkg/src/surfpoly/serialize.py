"""JSON file formats: premap-v1, rotation-v1 (maps) and group-v1 (groups)."""

from __future__ import annotations

import json

from .builders import HalfEdge, RotationSystem, from_rotation_system
from .errors import MalformedRotation, ParseError, ValidationError
from .premap import Premap, tau_cycles, validate_premap

__all__ = ["parse_map", "serialize_map", "parse_group_json", "serialize_group_json"]


def _load_object(text: str, expected_formats: tuple[str, ...]) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be a JSON object")
    fmt = doc.get("format")
    if fmt not in expected_formats:
        raise ParseError(f"unsupported format {fmt!r}, expected one of {expected_formats}")
    return doc


def _check_fields(doc: dict, allowed: set[str]) -> None:
    unknown = set(doc) - allowed
    if unknown:
        raise ParseError(f"unknown field(s): {', '.join(sorted(unknown))}")


def _get_count(doc: dict, key: str) -> int:
    value = doc.get(key)
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise ParseError(f"{key!r} must be a nonnegative integer")
    return value


def _parse_premap_v1(doc: dict) -> Premap:
    _check_fields(doc, {"format", "edges", "isolated_vertices", "tau"})
    m = _get_count(doc, "edges")
    isolated = _get_count(doc, "isolated_vertices")
    cycles = doc.get("tau")
    if not isinstance(cycles, list) or not all(
        isinstance(c, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in c)
        for c in cycles
    ):
        raise ParseError("'tau' must be a list of lists of cross ids")
    for c in cycles:
        if not c:
            raise ParseError("'tau' cycles must be nonempty")
        for x in c:
            if not 0 <= x < 4 * m:
                raise ParseError(f"cross id {x} out of range for {m} edge(s)")
    flat = [x for c in cycles for x in c]
    if len(flat) != len(set(flat)):
        raise ParseError("'tau' cycles are not disjoint")
    return Premap.from_cycles(m, cycles, isolated)


def _parse_half_edge(ref: object, m: int) -> HalfEdge:
    if not isinstance(ref, str) or ref.count(".") != 1:
        raise ParseError(f"half-edge reference {ref!r} is not of the form 'edge.end'")
    left, right = ref.split(".")
    try:
        edge, end = int(left), int(right)
    except ValueError:
        raise ParseError(f"half-edge reference {ref!r} is not numeric") from None
    if not (0 <= edge < m and end in (0, 1)):
        raise ParseError(f"half-edge reference {ref!r} out of range")
    return HalfEdge(edge, end)


def _parse_rotation_v1(doc: dict) -> Premap:
    _check_fields(doc, {"format", "edges", "isolated_vertices", "signs", "vertices"})
    m = _get_count(doc, "edges")
    isolated = _get_count(doc, "isolated_vertices")
    signs_raw = doc.get("signs")
    if not isinstance(signs_raw, list) or len(signs_raw) != m:
        raise ParseError("'signs' must list one sign per edge")
    signs = []
    for s in signs_raw:
        # U+2212 minus accepted alongside ASCII.
        if s == "+":
            signs.append(1)
        elif s in ("-", "−"):
            signs.append(-1)
        else:
            raise ParseError(f"sign {s!r} must be '+' or '-'")
    vertices_raw = doc.get("vertices")
    if not isinstance(vertices_raw, list) or not all(
        isinstance(v, list) for v in vertices_raw
    ):
        raise ParseError("'vertices' must be a list of rotation lists")
    vertices = tuple(
        tuple(_parse_half_edge(ref, m) for ref in rotation) for rotation in vertices_raw
    )
    system = RotationSystem(m, vertices, tuple(signs), isolated)
    try:
        return from_rotation_system(system)
    except MalformedRotation as exc:
        raise ParseError(str(exc)) from None


def parse_map(text: str) -> Premap:
    """Parse premap-v1 or rotation-v1 text; the result is validated."""
    doc = _load_object(text, ("premap-v1", "rotation-v1"))
    if doc["format"] == "premap-v1":
        p = _parse_premap_v1(doc)
    else:
        p = _parse_rotation_v1(doc)
    report = validate_premap(p)
    if not report.ok:
        raise ValidationError(f"invalid premap: {report.summary()}", report)
    return p


def serialize_map(p: Premap) -> str:
    """Canonical premap-v1 text: cycles rotated to and ordered by minimal cross."""
    cycles = []
    for cyc in tau_cycles(p.tau):
        i = cyc.index(min(cyc))
        cycles.append(cyc[i:] + cyc[:i])
    cycles.sort(key=lambda c: c[0])
    doc = {
        "format": "premap-v1",
        "edges": p.m,
        "isolated_vertices": p.isolated_vertices,
        "tau": cycles,
    }
    return json.dumps(doc, separators=(", ", ": ")) + "\n"


def parse_group_json(text: str) -> list[list[int]]:
    """Parse group-v1 text into a Cayley table (validation lives elsewhere)."""
    doc = _load_object(text, ("group-v1",))
    _check_fields(doc, {"format", "order", "table"})
    n = _get_count(doc, "order")
    table = doc.get("table")
    if (
        not isinstance(table, list)
        or len(table) != n
        or not all(
            isinstance(row, list)
            and len(row) == n
            and all(isinstance(x, int) and not isinstance(x, bool) and 0 <= x < n for x in row)
            for row in table
        )
    ):
        raise ParseError(f"'table' must be a {n}x{n} array of element indices")
    return [list(row) for row in table]


def serialize_group_json(table: list[list[int]]) -> str:
    doc = {"format": "group-v1", "order": len(table), "table": [list(r) for r in table]}
    return json.dumps(doc, separators=(", ", ": ")) + "\n"
