"""Text formats: point sets, witness families, geometric graphs, certificates.

Point-set files are UTF-8 text. Lines starting with '#' are comments, the
first non-comment line is the point count n, and each of the next n lines
holds two whitespace-separated coordinates, either signed integers or
reduced rationals written ``p/q``.
"""

from __future__ import annotations

import csv
import io
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .errors import ParseError
from .geometry import Coord, PointSet, Segment


def parse_coord(token: str) -> Coord:
    if "/" in token:
        num, _, den = token.partition("/")
        return Fraction(int(num), int(den))
    return int(token)


def format_coord(value: Coord) -> str:
    return str(value)


def _content_lines(text: str) -> list[tuple[int, str]]:
    """(line number, stripped text) for every non-blank, non-comment line."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((lineno, line))
    return out


def _parse_point_block(lines: list[tuple[int, str]], start: int) -> tuple[PointSet, int]:
    """Parse n + n coordinate lines beginning at ``lines[start]``."""
    if start >= len(lines):
        raise ParseError("missing point count")
    lineno, head = lines[start]
    if len(head.split()) != 1:
        raise ParseError("expected a single point count", lineno)
    try:
        n = int(head)
    except ValueError:
        raise ParseError(f"invalid point count {head!r}", lineno) from None
    if n < 0:
        raise ParseError("point count must be non-negative", lineno)
    coords = []
    for i in range(n):
        pos = start + 1 + i
        if pos >= len(lines):
            raise ParseError(f"expected {n} points, found {i}")
        lineno, line = lines[pos]
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"expected 2 coordinates, got {len(fields)}", lineno)
        try:
            coords.append((parse_coord(fields[0]), parse_coord(fields[1])))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad coordinate: {exc}", lineno) from None
    return PointSet.from_coords(coords), start + 1 + n


def parse_pointset(text: str) -> PointSet:
    lines = _content_lines(text)
    S, consumed = _parse_point_block(lines, 0)
    if consumed < len(lines):
        lineno, line = lines[consumed]
        raise ParseError(f"unexpected content after point list: {line!r}", lineno)
    return S


def format_pointset(S: PointSet, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(str(len(S)))
    for p in S:
        out.append(f"{format_coord(p.x)} {format_coord(p.y)}")
    return "\n".join(out) + "\n"


def load_pointset(path) -> PointSet:
    return parse_pointset(Path(path).read_text(encoding="utf-8"))


def save_pointset(S: PointSet, path, comment: str | None = None) -> None:
    Path(path).write_text(format_pointset(S, comment), encoding="utf-8")


def _parse_segment_line(lineno: int, line: str) -> Segment:
    fields = line.split()
    if len(fields) != 2:
        raise ParseError(f"expected 2 point indices, got {len(fields)}", lineno)
    try:
        a, b = int(fields[0]), int(fields[1])
    except ValueError:
        raise ParseError(f"bad point index in {line!r}", lineno) from None
    if a == b:
        raise ParseError(f"degenerate segment {a} {b}", lineno)
    return Segment(a, b)


def parse_witness(text: str) -> tuple[int, tuple[Segment, ...]]:
    """Witness files: a 'k = <value>' line, then one 'a b' segment per line."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty witness file")
    lineno, head = lines[0]
    fields = head.split()
    if len(fields) != 3 or fields[0] != "k" or fields[1] != "=":
        raise ParseError(f"expected 'k = <value>', got {head!r}", lineno)
    try:
        k = int(fields[2])
    except ValueError:
        raise ParseError(f"bad family size {fields[2]!r}", lineno) from None
    segments = tuple(_parse_segment_line(ln, line) for ln, line in lines[1:])
    return k, segments


def format_witness(k: int, family: Sequence[Segment]) -> str:
    out = [f"k = {k}"]
    out.extend(f"{s.a} {s.b}" for s in family)
    return "\n".join(out) + "\n"


def parse_graph(text: str) -> tuple[PointSet, tuple[Segment, ...]]:
    """Graph files: a point-set block, a line 'edges', then 'a b' lines."""
    lines = _content_lines(text)
    S, pos = _parse_point_block(lines, 0)
    if pos >= len(lines) or lines[pos][1] != "edges":
        where = lines[pos][0] if pos < len(lines) else None
        raise ParseError("expected an 'edges' line after the point block", where)
    edges = []
    for lineno, line in lines[pos + 1:]:
        seg = _parse_segment_line(lineno, line)
        if not (0 <= seg.a < len(S) and 0 <= seg.b < len(S)):
            raise ParseError(f"edge {seg.a} {seg.b} out of range", lineno)
        edges.append(seg)
    return S, tuple(edges)


def format_graph(S: PointSet, edges: Sequence[Segment], comment: str | None = None) -> str:
    out = format_pointset(S, comment)
    lines = ["edges"]
    lines.extend(f"{s.a} {s.b}" for s in sorted(edges))
    return out + "\n".join(lines) + "\n"


def format_certificate(cert) -> str:
    """Replication certificates as 'key: value' lines."""
    lines = [
        f"epsilon: {format_coord(cert.epsilon)}",
        f"m: {cert.m}",
        f"source_n: {cert.source_n}",
        f"cluster_isolation: {'true' if cert.cluster_isolation_ok else 'false'}",
        f"copy_order: {'true' if cert.copy_order_ok else 'false'}",
    ]
    return "\n".join(lines) + "\n"


def parse_certificate(text: str):
    from .replication import ReplicationCertificate

    values: dict[str, str] = {}
    for lineno, line in _content_lines(text):
        key, sep, value = line.partition(":")
        if not sep:
            raise ParseError(f"expected 'key: value', got {line!r}", lineno)
        values[key.strip()] = value.strip()
    try:
        return ReplicationCertificate(
            epsilon=parse_coord(values["epsilon"]),
            m=int(values["m"]),
            source_n=int(values["source_n"]),
            cluster_isolation_ok=values["cluster_isolation"] == "true",
            copy_order_ok=values["copy_order"] == "true",
        )
    except KeyError as exc:
        raise ParseError(f"missing certificate field {exc.args[0]!r}") from None


_SEARCH_KEYS = {
    "n": int,
    "k": int,
    "seed": int,
    "iterations": int,
    "initial_temperature": float,
    "cooling_rate": float,
    "step_sigma": float,
    "grid_bound": int,
}


def parse_search_config(text: str):
    """Search configs are 'key = value' lines; optional key 'initial' names a point-set file.

    Returns (SearchConfig, initial path or None).
    """
    from .search import SearchConfig

    raw: dict[str, str] = {}
    for lineno, line in _content_lines(text):
        key, sep, value = line.partition("=")
        if not sep:
            raise ParseError(f"expected 'key = value', got {line!r}", lineno)
        key = key.strip()
        if key != "initial" and key not in _SEARCH_KEYS:
            raise ParseError(f"unknown config key {key!r}", lineno)
        if key in raw:
            raise ParseError(f"duplicate config key {key!r}", lineno)
        raw[key] = value.strip()
    initial = raw.pop("initial", None)
    kwargs = {}
    for key, value in raw.items():
        try:
            kwargs[key] = _SEARCH_KEYS[key](value)
        except ValueError:
            raise ParseError(f"bad value for {key!r}: {value!r}") from None
    try:
        cfg = SearchConfig(**kwargs)
    except TypeError as exc:
        raise ParseError(f"incomplete search config: {exc}") from None
    return cfg, initial


def format_search_config(cfg, initial: str | None = None) -> str:
    lines = [f"{key} = {getattr(cfg, key)}" for key in _SEARCH_KEYS]
    if initial:
        lines.append(f"initial = {initial}")
    return "\n".join(lines) + "\n"


def format_trace_csv(trace: Iterable[tuple[int, float, int, int]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["iteration", "temperature", "current_objective", "best_objective"])
    for row in trace:
        writer.writerow(row)
    return buf.getvalue()
