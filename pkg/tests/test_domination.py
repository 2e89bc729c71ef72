from itertools import combinations

import pytest
from hypothesis import given, settings

from indomatic import (
    ArcPartition,
    VertexPartition,
    check_strong_in_domatic_partition,
    converse,
    in_dominating_vertices,
    is_in_dominating,
    is_strong_cover,
    is_strong_cover_partition,
    is_strong_in_dominating,
    is_strong_in_domatic_partition,
    is_strong_out_domatic_partition,
    line_digraph,
    make_digraph,
    strong_in_domatic_number,
)

from .conftest import strong_digraphs


def singletons(n):
    return VertexPartition.from_blocks([[v] for v in range(n)])


def whole(n):
    return VertexPartition.from_blocks([range(n)])


class TestDirectionRegression:
    """The single most error-prone definitional choice: a vertex outside S
    must have an OUT-neighbor inside S."""

    def test_three_cycle(self, c3):
        # Vertex 1's only out-neighbor is 2, so {0} does not in-dominate.
        assert not is_in_dominating(c3, {0})
        # But 1's out-neighbor 2 makes {2} fail too, except for vertex 0.
        assert not is_in_dominating(c3, {1})
        # Two vertices always in-dominate the remaining one in a 3-cycle.
        assert is_in_dominating(c3, {0, 1})

    def test_in_star(self):
        # All arcs point into the center: the center in-dominates.
        star = make_digraph(4, [(1, 0), (2, 0), (3, 0)])
        assert is_in_dominating(star, {0})
        assert in_dominating_vertices(star) == {0}


class TestInDominating:
    def test_complete_singleton(self, k3):
        assert is_in_dominating(k3, {0})

    def test_whole_set_vacuous(self, c4):
        assert is_in_dominating(c4, set(range(4)))

    def test_empty_rejected(self, k3):
        with pytest.raises(ValueError):
            is_in_dominating(k3, set())


class TestStrongInDominating:
    def test_complete_singleton(self, k3):
        assert is_strong_in_dominating(k3, {0})

    def test_cycle_pair_not_strong(self, c4):
        assert not is_strong_in_dominating(c4, {0, 1})

    def test_cycle_whole(self, c4):
        assert is_strong_in_dominating(c4, set(range(4)))


class TestStrongInDomaticPartition:
    def test_complete_singletons(self, k4):
        assert is_strong_in_domatic_partition(k4, singletons(4))

    def test_cycle_alternating_fails_on_strongness(self, c4):
        P = VertexPartition.from_blocks([[0, 2], [1, 3]])
        diagnosis = check_strong_in_domatic_partition(c4, P)
        assert not diagnosis.ok
        assert diagnosis.failing_block == 0
        assert "not strong" in diagnosis.reason

    @settings(max_examples=30, deadline=None)
    @given(strong_digraphs(max_n=5))
    def test_whole_partition_of_strong(self, D):
        assert is_strong_in_domatic_partition(D, whole(D.vertex_count))

    def test_wrong_size_rejected(self, c4):
        with pytest.raises(ValueError):
            is_strong_in_domatic_partition(c4, singletons(3))


class TestInDominatingVertices:
    def test_complete(self, k3):
        assert in_dominating_vertices(k3) == {0, 1, 2}

    def test_cycle(self, c4):
        assert in_dominating_vertices(c4) == frozenset()


class TestStrongCover:
    def test_identity(self, c3):
        assert is_strong_cover(c3, c3.arcs)

    def test_sub_cycle_of_complete(self, k3):
        assert is_strong_cover(k3, {(0, 1), (1, 2), (2, 0)})

    def test_not_spanning(self, k3):
        assert not is_strong_cover(k3, {(0, 1), (1, 0)})

    def test_non_strong_rejected(self):
        D = make_digraph(2, [(0, 1)])
        with pytest.raises(ValueError):
            is_strong_cover(D, {(0, 1)})


class TestStrongCoverPartition:
    def test_complete_two_cycles(self, k3):
        # Each directed 3-cycle spans the vertices and is strong.
        Q = ArcPartition.from_blocks(
            [[(0, 1), (1, 2), (2, 0)], [(0, 2), (2, 1), (1, 0)]]
        )
        assert is_strong_cover_partition(k3, Q)

    def test_cycle_whole(self, c4):
        assert is_strong_cover_partition(c4, ArcPartition.from_blocks([c4.sorted_arcs()]))

    def test_cycle_split_fails(self, c4):
        Q = ArcPartition.from_blocks([[(0, 1), (1, 2)], [(2, 3), (3, 0)]])
        assert not is_strong_cover_partition(c4, Q)


class TestOutDomaticDuality:
    def test_complete_singletons(self, k4):
        assert is_strong_out_domatic_partition(k4, singletons(4))

    def test_cycle_whole(self, c3):
        assert is_strong_out_domatic_partition(c3, whole(3))

    @settings(max_examples=30, deadline=None)
    @given(strong_digraphs(max_n=5))
    def test_definitional_identity(self, D):
        P = whole(D.vertex_count)
        assert is_strong_in_domatic_partition(D, P) == is_strong_out_domatic_partition(
            converse(D), P
        )


class TestClosureProperties:
    @settings(max_examples=25, deadline=None)
    @given(strong_digraphs(min_n=2, max_n=5))
    def test_union_and_merge_closure(self, D):
        P = strong_in_domatic_number(D).witness
        blocks = P.blocks()
        k = len(blocks)
        for size in range(1, k + 1):
            for chosen in combinations(range(k), size):
                union = frozenset().union(*(blocks[i] for i in chosen))
                assert is_strong_in_dominating(D, union)
                if 1 < size < k:
                    merged = [b for i, b in enumerate(blocks) if i not in chosen]
                    merged.append(union)
                    assert is_strong_in_domatic_partition(
                        D, VertexPartition.from_blocks(merged)
                    )


class TestCoverLineCorrespondence:
    @settings(max_examples=40, deadline=None)
    @given(strong_digraphs(min_n=3, max_n=5))
    def test_cover_iff_strong_in_dominating_in_line(self, D):
        # The equivalence needs order at least three: for the complete
        # digraph of order two a lone arc is strong in-dominating in the
        # line digraph yet not a cover.
        L, arc_to_id = line_digraph(D)
        arcs = D.sorted_arcs()
        for size in range(1, min(3, len(arcs)) + 1):
            for E in combinations(arcs, size):
                lhs = is_strong_cover(D, E)
                rhs = is_strong_in_dominating(L, {arc_to_id[a] for a in E})
                assert lhs == rhs

    def test_k2_counterexample(self, k2):
        L, arc_to_id = line_digraph(k2)
        single = {arc_to_id[(1, 0)]}
        assert is_strong_in_dominating(L, single)
        assert not is_strong_cover(k2, {(1, 0)})
