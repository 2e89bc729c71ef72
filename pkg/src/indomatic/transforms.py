"""Derived digraphs (Cartesian product, composition, line, subdivision,
root, middle, total, converse) and the constructive partition lifts that
carry strong in-domatic partitions onto them.

Every construction returns the derived digraph together with a map from
its dense vertex ids back to their origin, so partitions can be pushed
forward and pulled back without parsing anything.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple, Union

from .core import (
    Digraph,
    NotStrongError,
    is_strong,
    make_digraph,
)
from .domination import VertexPartition, is_strong_in_domatic_partition


@dataclass(frozen=True)
class TaggedVertex:
    """Identity of a vertex of a mixed derived digraph: either an original
    vertex (payload: its id) or an arc-vertex (payload: the arc pair)."""

    kind: str  # "vertex" or "arc"
    payload: Union[int, Tuple[int, int]]

    def __post_init__(self):
        if self.kind not in ("vertex", "arc"):
            raise ValueError(f"unknown vertex kind {self.kind!r}")


@dataclass(frozen=True)
class CompositionSpec:
    """Host digraph plus one part digraph per host vertex.  Output ids are
    assigned part by part in host-vertex order, so parts are disjoint by
    construction."""

    host: Digraph
    parts: tuple  # parts[v] is the digraph substituted for host vertex v

    @classmethod
    def of(cls, host: Digraph, parts) -> "CompositionSpec":
        parts = tuple(parts)
        if len(parts) != host.vertex_count:
            raise ValueError("need exactly one part per host vertex")
        if any(p.vertex_count == 0 for p in parts):
            raise ValueError("every part needs at least one vertex")
        return cls(host, parts)


def cartesian_product(D: Digraph, H: Digraph):
    """Cartesian product: (x,z) -> (u,v) is an arc iff the pair moves along
    exactly one coordinate by an arc of that factor.

    Returns ``(P, pair_to_id)``; the id of (x, z) is ``x * |V(H)| + z``.
    """
    if D.vertex_count == 0 or H.vertex_count == 0:
        raise ValueError("both factors must be nonempty")
    nh = H.vertex_count
    pair_to_id: Dict[Tuple[int, int], int] = {}
    for x in range(D.vertex_count):
        for z in range(nh):
            pair_to_id[(x, z)] = x * nh + z
    arcs = []
    for x in range(D.vertex_count):
        for (z, v) in H.arcs:
            arcs.append((x * nh + z, x * nh + v))
    for (x, u) in D.arcs:
        for z in range(nh):
            arcs.append((x * nh + z, u * nh + z))
    return make_digraph(D.vertex_count * nh, arcs), pair_to_id


def composition(spec: CompositionSpec):
    """Blow every host vertex up into its part and join all of part(v) to
    all of part(u) for each host arc (v, u).

    Returns ``(C, origin_to_id)`` with origin keys ``(host_vertex,
    part_vertex)``.
    """
    offsets = []
    total = 0
    for part in spec.parts:
        offsets.append(total)
        total += part.vertex_count
    origin_to_id: Dict[Tuple[int, int], int] = {}
    for hv, part in enumerate(spec.parts):
        for pv in range(part.vertex_count):
            origin_to_id[(hv, pv)] = offsets[hv] + pv
    arcs = []
    for hv, part in enumerate(spec.parts):
        for (u, v) in part.arcs:
            arcs.append((offsets[hv] + u, offsets[hv] + v))
    for (v, u) in spec.host.arcs:
        for pv in range(spec.parts[v].vertex_count):
            for pu in range(spec.parts[u].vertex_count):
                arcs.append((offsets[v] + pv, offsets[u] + pu))
    return make_digraph(total, arcs), origin_to_id


def line_digraph(D: Digraph):
    """Vertices are the arcs of D; (u,v) -> (w,z) is an arc iff v = w.

    Returns ``(L, arc_to_id)`` with arcs numbered in lexicographic order.
    """
    arcs = D.sorted_arcs()
    if not arcs:
        raise ValueError("line digraph needs at least one arc")
    arc_to_id = {a: i for i, a in enumerate(arcs)}
    new_arcs = []
    by_tail: Dict[int, list] = {}
    for a in arcs:
        by_tail.setdefault(a[0], []).append(a)
    for a in arcs:
        for b in by_tail.get(a[1], ()):
            new_arcs.append((arc_to_id[a], arc_to_id[b]))
    return make_digraph(len(arcs), new_arcs), arc_to_id


def _mixed_vertex_base(D: Digraph):
    """Shared vertex layout for the subdivision/root/middle/total
    digraphs: originals keep their ids, arc-vertices follow in
    lexicographic arc order."""
    if not D.arcs:
        raise ValueError("construction needs at least one arc")
    n = D.vertex_count
    arcs = D.sorted_arcs()
    arc_id = {a: n + i for i, a in enumerate(arcs)}
    tags = tuple(
        [TaggedVertex("vertex", v) for v in range(n)]
        + [TaggedVertex("arc", a) for a in arcs]
    )
    return n, arcs, arc_id, tags


def subdivision(D: Digraph):
    """Each original vertex points to its outgoing arc-vertices; each
    arc-vertex points to its head."""
    n, arcs, arc_id, tags = _mixed_vertex_base(D)
    new_arcs = []
    for a in arcs:
        new_arcs.append((a[0], arc_id[a]))
        new_arcs.append((arc_id[a], a[1]))
    return make_digraph(n + len(arcs), new_arcs), tags


def root(D: Digraph):
    """Subdivision plus the original arcs between original vertices."""
    n, arcs, arc_id, tags = _mixed_vertex_base(D)
    new_arcs = []
    for a in arcs:
        new_arcs.append((a[0], arc_id[a]))
        new_arcs.append((arc_id[a], a[1]))
        new_arcs.append(a)
    return make_digraph(n + len(arcs), new_arcs), tags


def middle(D: Digraph):
    """Subdivision plus arcs from each arc-vertex to the arc-vertices that
    continue it (those whose tail is its head)."""
    n, arcs, arc_id, tags = _mixed_vertex_base(D)
    new_arcs = []
    for a in arcs:
        new_arcs.append((a[0], arc_id[a]))
        new_arcs.append((arc_id[a], a[1]))
    for a in arcs:
        for b in arcs:
            if a[1] == b[0]:
                new_arcs.append((arc_id[a], arc_id[b]))
    return make_digraph(n + len(arcs), new_arcs), tags


def total(D: Digraph):
    """Middle plus the original arcs: the union of every adjacency the
    other three constructions provide.  Restricted to the arc-vertices it
    is exactly the line digraph."""
    n, arcs, arc_id, tags = _mixed_vertex_base(D)
    new_arcs = []
    for a in arcs:
        new_arcs.append((a[0], arc_id[a]))
        new_arcs.append((arc_id[a], a[1]))
        new_arcs.append(a)
    for a in arcs:
        for b in arcs:
            if a[1] == b[0]:
                new_arcs.append((arc_id[a], arc_id[b]))
    return make_digraph(n + len(arcs), new_arcs), tags


# ---------------------------------------------------------------------------
# Constructive partition lifts


def lift_product_partition(P: VertexPartition, D: Digraph, H: Digraph) -> VertexPartition:
    """Lift a strong in-domatic partition of D to one of the Cartesian
    product: the block of (x, y) is the block of x.

    Both factors must be strong; the output is itself a strong in-domatic
    partition of ``cartesian_product(D, H)``.
    """
    if not (is_strong(D) and is_strong(H)):
        raise NotStrongError("both factors must be strong to lift a partition")
    if not is_strong_in_domatic_partition(D, P):
        raise ValueError("input partition is not strong in-domatic on the first factor")
    nh = H.vertex_count
    block_of = [0] * (D.vertex_count * nh)
    for x in range(D.vertex_count):
        for z in range(nh):
            block_of[x * nh + z] = P.block_of[x]
    return VertexPartition(tuple(block_of), P.block_count)


def composition_partition(spec: CompositionSpec) -> VertexPartition:
    """The layered partition of a composition over a strong host: with
    n = the smallest part order, block k < n-1 takes the k-th vertex of
    every part and the last block takes everything left over."""
    if spec.host.vertex_count < 2:
        raise ValueError("host must be nontrivial")
    if not is_strong(spec.host):
        raise NotStrongError("host must be strong")
    _, origin_to_id = composition(spec)
    n = min(part.vertex_count for part in spec.parts)
    total_vertices = sum(part.vertex_count for part in spec.parts)
    block_of = [n - 1] * total_vertices
    for hv, part in enumerate(spec.parts):
        for pv in range(part.vertex_count):
            if pv < n - 1:
                block_of[origin_to_id[(hv, pv)]] = pv
    return VertexPartition(tuple(block_of), n)


def _check_line_partition(P: VertexPartition, D: Digraph) -> Digraph:
    L, _ = line_digraph(D)
    if not is_strong_in_domatic_partition(L, P):
        raise ValueError("input partition is not strong in-domatic on the line digraph")
    return L


def lift_middle_partition(P: VertexPartition, D: Digraph) -> VertexPartition:
    """Carry a strong in-domatic partition of the line digraph onto the
    middle digraph: the first block absorbs every original vertex.

    Requires order at least three; at order two the line digraph can have
    a block that is not a strong cover, and the lift breaks down.
    """
    if D.vertex_count < 3:
        raise ValueError("middle-digraph lift needs order at least three")
    if not is_strong(D):
        raise NotStrongError("base digraph must be strong")
    _check_line_partition(P, D)
    n = D.vertex_count
    block_of = [0] * n + [P.block_of[i] for i in range(len(P.block_of))]
    return VertexPartition(tuple(block_of), P.block_count)


def lift_total_partition(P: VertexPartition, D: Digraph) -> VertexPartition:
    """Carry a strong in-domatic partition of the line digraph onto the
    total digraph: the original vertices become one extra block."""
    if D.vertex_count < 3:
        raise ValueError("total-digraph lift needs order at least three")
    if not is_strong(D):
        raise NotStrongError("base digraph must be strong")
    _check_line_partition(P, D)
    n = D.vertex_count
    block_of = [0] * n + [P.block_of[i] + 1 for i in range(len(P.block_of))]
    return VertexPartition(tuple(block_of), P.block_count + 1)
