"""Plain-text file formats for digraphs and partitions, plus DOT export.

Digraph file: '#' starts a comment line, the first payload line is
``n <vertex_count>``, and every following payload line is an arc
``u v`` with zero-based endpoints.  The canonical form (what the writer
emits) has no comments, arcs sorted lexicographically, and a newline after
every line, so write(parse(text)) is byte-identical on canonical input.

Partition file: one block per payload line, members as space-separated
vertex ids.  Canonical form sorts members within a line and blocks by
minimum member.
"""
from __future__ import annotations

from typing import List, Optional, Tuple

from .core import Digraph, make_digraph
from .domination import ArcPartition, VertexPartition
from .transforms import TaggedVertex


class ParseError(ValueError):
    """Malformed input file; carries the offending 1-based line number."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")


def _payload_lines(text: str) -> List[Tuple[int, str]]:
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        out.append((number, stripped))
    return out


def parse_digraph(text: str) -> Digraph:
    lines = _payload_lines(text)
    if not lines:
        raise ParseError("missing header line 'n <vertex_count>'")
    number, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "n":
        raise ParseError(f"expected 'n <vertex_count>', got {header!r}", number)
    try:
        vertex_count = int(parts[1])
    except ValueError:
        raise ParseError(f"vertex count {parts[1]!r} is not an integer", number)
    arcs = []
    for number, line in lines[1:]:
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", number)
        try:
            arc = (int(fields[0]), int(fields[1]))
        except ValueError:
            raise ParseError(f"non-integer endpoint in {line!r}", number)
        arcs.append((number, arc))
    try:
        return make_digraph(vertex_count, [a for _, a in arcs])
    except ValueError as exc:
        # Attribute the failure to the first arc line that triggers it.
        seen = set()
        for number, (u, v) in arcs:
            if (
                u == v
                or not (0 <= u < vertex_count and 0 <= v < vertex_count)
                or (u, v) in seen
            ):
                raise ParseError(str(exc), number) from exc
            seen.add((u, v))
        raise ParseError(str(exc)) from exc


def write_digraph(D: Digraph) -> str:
    lines = [f"n {D.vertex_count}"]
    lines.extend(f"{u} {v}" for u, v in D.sorted_arcs())
    return "\n".join(lines) + "\n"


def parse_partition(text: str, D: Digraph) -> VertexPartition:
    lines = _payload_lines(text)
    if not lines:
        raise ParseError("partition file has no blocks")
    blocks = []
    seen = {}
    for number, line in lines:
        members = []
        for field in line.split():
            try:
                v = int(field)
            except ValueError:
                raise ParseError(f"non-integer vertex id {field!r}", number)
            if not (0 <= v < D.vertex_count):
                raise ParseError(
                    f"vertex {v} outside [0,{D.vertex_count})", number
                )
            if v in seen:
                raise ParseError(
                    f"vertex {v} already in the block on line {seen[v]}", number
                )
            seen[v] = number
            members.append(v)
        blocks.append(members)
    missing = [v for v in range(D.vertex_count) if v not in seen]
    if missing:
        raise ParseError(f"vertices {missing} are in no block")
    return VertexPartition.from_blocks(blocks)


def write_partition(P: VertexPartition) -> str:
    canonical = P.canonical()
    lines = [" ".join(str(v) for v in sorted(b)) for b in canonical.blocks()]
    return "\n".join(lines) + "\n"


def write_arc_partition(Q: ArcPartition) -> str:
    """One block per line; each arc rendered as ``u,v``."""
    canonical = Q.canonical()
    lines = [
        " ".join(f"{u},{v}" for u, v in sorted(b)) for b in canonical.blocks()
    ]
    return "\n".join(lines) + "\n"


def write_dot(D: Digraph, tags: Optional[tuple] = None) -> str:
    """DOT export; with tags, vertices carry their origin as the label."""
    lines = ["digraph G {"]
    for v in range(D.vertex_count):
        label = None
        if tags is not None:
            tag = tags[v]
            if isinstance(tag, TaggedVertex):
                label = (
                    f"v{tag.payload}"
                    if tag.kind == "vertex"
                    else f"a({tag.payload[0]},{tag.payload[1]})"
                )
        elif D.labels is not None:
            label = D.labels[v]
        if label is not None:
            lines.append(f'  {v} [label="{label}"];')
        else:
            lines.append(f"  {v};")
    for u, v in D.sorted_arcs():
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
