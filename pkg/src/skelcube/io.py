"""Line-oriented file formats for complexes and graphs.

Complex files start with "ambient <n>" followed by one face word per
line.  Parsing closes the face set downward; serialization writes only
the maximal faces in canonical order, so parse and serialize are
mutually inverse exactly on canonical files.  Graph files start with
"vertices <n>" followed by "u v" edge lines.  Full-line comments start
with '#'; blank lines are ignored.
"""

from __future__ import annotations

from .complex import CubicalComplex, closure
from .embedding import SimpleGraph, _normalize_edge
from .errors import StructuralError

__all__ = ["parse_complex", "serialize_complex", "parse_graph", "serialize_graph"]


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_complex(text: str) -> tuple[CubicalComplex, int]:
    """Parse a complex file; returns (complex, number of faces added by closure)."""
    lines = list(_content_lines(text))
    if not lines:
        raise StructuralError("empty complex file, expected an 'ambient <n>' header")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "ambient":
        raise StructuralError(f"line {lineno}: expected 'ambient <n>', got {header!r}")
    try:
        n = int(parts[1])
    except ValueError:
        raise StructuralError(f"line {lineno}: ambient dimension {parts[1]!r} is not an integer") from None
    if n < 0:
        raise StructuralError(f"line {lineno}: ambient dimension must be nonnegative")
    generators = []
    for lineno, line in lines[1:]:
        if len(line.split()) != 1:
            raise StructuralError(f"line {lineno}: expected a single face word, got {line!r}")
        generators.append(line)
    try:
        c = closure(n, generators)
    except StructuralError as exc:
        raise StructuralError(f"bad face word: {exc}") from None
    return c, len(c.faces) - len(set(generators))


def serialize_complex(c: CubicalComplex) -> str:
    lines = [f"ambient {c.ambient_dim}"]
    lines.extend(c.maximal_faces())
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> SimpleGraph:
    lines = list(_content_lines(text))
    if not lines:
        raise StructuralError("empty graph file, expected a 'vertices <n>' header")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "vertices":
        raise StructuralError(f"line {lineno}: expected 'vertices <n>', got {header!r}")
    try:
        n = int(parts[1])
    except ValueError:
        raise StructuralError(f"line {lineno}: vertex count {parts[1]!r} is not an integer") from None
    edges = set()
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise StructuralError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise StructuralError(f"line {lineno}: endpoints must be integers") from None
        if u == v:
            raise StructuralError(f"line {lineno}: loop at vertex {u}")
        e = _normalize_edge(u, v)
        if e in edges:
            raise StructuralError(f"line {lineno}: duplicate edge {u} {v}")
        edges.add(e)
    try:
        return SimpleGraph(n, frozenset(edges))
    except StructuralError as exc:
        raise StructuralError(f"bad graph: {exc}") from None


def serialize_graph(g: SimpleGraph) -> str:
    lines = [f"vertices {g.num_vertices}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"
