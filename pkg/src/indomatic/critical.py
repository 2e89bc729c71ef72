"""Criticality of the strong in-domatic number under single-arc deletion.

A strong digraph is critical when every arc deletion keeps it strong and
drops the strong in-domatic number by exactly one.  The characterization
route checks instead that every maximum partition is rigid: blocks lose
strongness under any internal deletion, and every outside vertex has
exactly one out-neighbor per block.  Both routes are implemented and their
equivalence is itself part of the test suite.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .core import (
    Digraph,
    NotStrongError,
    delete_arc,
    induced_subdigraph,
    is_strong,
    out_adjacency,
)
from .domination import VertexPartition
from .solver import enumerate_max_partitions, strong_in_domatic_number

HOLDS = "holds"
FAILS = "fails"
NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class ArcDeletionRecord:
    arc: Tuple[int, int]
    still_strong: bool
    value_after: Optional[int]


@dataclass(frozen=True)
class DeletionProfile:
    """Per-arc effect of deletion, arcs in lexicographic order."""

    value: int
    records: tuple


@dataclass(frozen=True)
class CharacterizationResult:
    """Verdict of the rigidity characterization, with the hypotheses
    treated as a gate: outside them the status is not-applicable rather
    than a truth value."""

    status: str
    reason: Optional[str] = None
    failing_partition: Optional[VertexPartition] = None

    def __bool__(self) -> bool:
        if self.status == NOT_APPLICABLE:
            raise ValueError("characterization not applicable; no truth value")
        return self.status == HOLDS


def deletion_profile(D: Digraph) -> DeletionProfile:
    if not is_strong(D):
        raise NotStrongError("deletion profiles are defined for strong digraphs")
    value = strong_in_domatic_number(D).value
    records = []
    for arc in D.sorted_arcs():
        reduced = delete_arc(D, arc)
        if is_strong(reduced):
            after = strong_in_domatic_number(reduced).value
            records.append(ArcDeletionRecord(arc, True, after))
        else:
            records.append(ArcDeletionRecord(arc, False, None))
    return DeletionProfile(value, tuple(records))


def is_strong_in_domatic_critical(D: Digraph) -> bool:
    """Definitional check: every deletion stays strong and loses exactly
    one from the strong in-domatic number."""
    profile = deletion_profile(D)
    return all(
        r.still_strong and r.value_after == profile.value - 1 for r in profile.records
    )


def partition_is_rigid(D: Digraph, P: VertexPartition):
    """Single-partition variant of the characterization: condition one,
    every block's induced subdigraph loses strongness under any internal
    arc deletion (vacuous for arcless blocks); condition two, every vertex
    outside a block has exactly one out-neighbor in it.

    Returns (ok, reason) for diagnostics.
    """
    adj = out_adjacency(D)
    for i, block in enumerate(P.blocks()):
        sub, mapping = induced_subdigraph(D, block)
        for arc in sub.sorted_arcs():
            if is_strong(delete_arc(sub, arc)):
                orig = (mapping[arc[0]], mapping[arc[1]])
                return False, (
                    f"block {i} stays strong after deleting internal arc {orig}"
                )
        for x in range(D.vertex_count):
            if x in block:
                continue
            hits = sum(1 for z in adj[x] if z in block)
            if hits != 1:
                return False, (
                    f"vertex {x} has {hits} out-neighbors in block {i}, expected 1"
                )
    return True, None


def characterization_holds(D: Digraph) -> CharacterizationResult:
    """Rigidity of EVERY maximum partition, under the hypotheses: the
    digraph is strong with value at least two and every single-arc
    deletion preserves strongness."""
    if not is_strong(D):
        raise NotStrongError("characterization applies to strong digraphs")
    value = strong_in_domatic_number(D).value
    if value < 2:
        return CharacterizationResult(
            NOT_APPLICABLE, "strong in-domatic number below two"
        )
    for arc in D.sorted_arcs():
        if not is_strong(delete_arc(D, arc)):
            return CharacterizationResult(
                NOT_APPLICABLE, f"deleting arc {arc} destroys strongness"
            )
    for P in enumerate_max_partitions(D):
        ok, reason = partition_is_rigid(D, P)
        if not ok:
            return CharacterizationResult(FAILS, reason, P)
    return CharacterizationResult(HOLDS)
