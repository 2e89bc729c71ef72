"""Backtracking search for partitions into covering blocks.

One engine serves both the directed solver (blocks must be in-dominating:
every vertex outside a block has an out-neighbor inside it) and the
undirected connected-domatic computation (every vertex outside a block has
a neighbor inside it).  Both are instances of the same constraint: for
every item x and every block j other than x's own, some member of
``cover[x]`` must land in block j.

Vertices are assigned in increasing id order and block j may be opened
only once blocks 0..j-1 are open, so every set partition is visited
exactly once, with blocks already ordered by minimum member.  That makes
the first witness canonical and enumeration duplicate-free.
"""
from __future__ import annotations

from typing import Callable, Iterator, Optional, Sequence


class SearchCounter:
    """Mutable node counter threaded through a search."""

    __slots__ = ("nodes",)

    def __init__(self) -> None:
        self.nodes = 0


def partition_search(
    n: int,
    cover: Sequence[Sequence[int]],
    k: int,
    block_ok: Optional[Callable[[frozenset], bool]],
    counter: Optional[SearchCounter] = None,
) -> Iterator[tuple]:
    """Yield every partition of ``range(n)`` into exactly ``k`` blocks such
    that each item outside a block has a ``cover`` member inside it and
    every block passes ``block_ok``.

    Partitions are yielded as tuples of frozensets ordered by minimum
    member.  ``cover[x]`` lists the items whose presence in a block
    satisfies x's requirement toward that block.
    """
    if not (1 <= k <= n):
        return
    if counter is None:
        counter = SearchCounter()

    # covered_by[x] = items y such that x appears in cover[y]; assigning x
    # to a block satisfies those items's requirement toward that block.
    covered_by = [[] for _ in range(n)]
    for x in range(n):
        for y in cover[x]:
            covered_by[y].append(x)

    block_of = [-1] * n
    # hits[x][j]: number of assigned members of cover[x] sitting in block j.
    hits = [[0] * k for _ in range(n)]
    # zero_blocks[x]: number of blocks j < k with hits[x][j] == 0.
    zero_blocks = [k] * n
    # pending[x]: members of cover[x] not yet assigned.
    pending = [len(cover[x]) for x in range(n)]

    def violated(x: int) -> bool:
        # x must eventually see a cover member in every block except its
        # own; unopened blocks count as unseen, which is exactly right
        # because all k blocks end up nonempty.
        own_is_zero = block_of[x] == -1 or hits[x][block_of[x]] == 0
        required = zero_blocks[x] - (1 if own_is_zero else 0)
        return required > pending[x]

    def assign(i: int, opened: int) -> Iterator[tuple]:
        counter.nodes += 1
        if i == n:
            if opened == k:
                blocks = [[] for _ in range(k)]
                for x in range(n):
                    blocks[block_of[x]].append(x)
                parts = tuple(frozenset(b) for b in blocks)
                if block_ok is None or all(block_ok(b) for b in parts):
                    yield parts
            return
        # Not enough unassigned items left to open the remaining blocks.
        if k - opened > n - i:
            return
        top = min(opened + 1, k)
        for b in range(top):
            block_of[i] = b
            touched = []
            ok = True
            for y in covered_by[i]:
                pending[y] -= 1
                hits[y][b] += 1
                if hits[y][b] == 1:
                    zero_blocks[y] -= 1
                touched.append(y)
            for y in touched:
                if violated(y):
                    ok = False
                    break
            if ok and violated(i):
                ok = False
            if ok:
                yield from assign(i + 1, max(opened, b + 1))
            for y in touched:
                hits[y][b] -= 1
                if hits[y][b] == 0:
                    zero_blocks[y] += 1
                pending[y] += 1
            block_of[i] = -1

    yield from assign(0, 0)


def first_partition(
    n: int,
    cover: Sequence[Sequence[int]],
    k: int,
    block_ok: Optional[Callable[[frozenset], bool]],
    counter: Optional[SearchCounter] = None,
):
    """First (canonical) admissible partition, or None."""
    for parts in partition_search(n, cover, k, block_ok, counter):
        return parts
    return None
