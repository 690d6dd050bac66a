import numpy as np
import pytest

from sqdist.errors import DisconnectedGraph, InvalidShape
from sqdist.graph import (
    Shape,
    bfs_distance_matrix,
    build_adjacency,
    delta22,
    parse_shape,
    squared_distance_matrix,
)
from sqdist.spectral import enumerate_shapes


def all_shapes(max_n):
    return [s for n in range(2, max_n + 1) for b in range(1, n) for s in enumerate_shapes(n, b)]


def edges(adj):
    return {(i, j) for i, j in zip(*np.nonzero(np.triu(adj)))}


class TestShape:
    def test_derived_sizes(self):
        s = Shape([2, 1, 1])
        assert (s.b, s.n) == (3, 5)

    @pytest.mark.parametrize("bad", [[], [0], [2, -1], [1.5]])
    def test_rejects_invalid_parts(self, bad):
        with pytest.raises(InvalidShape):
            Shape(bad)

    def test_canonical_and_isomorphism(self):
        assert Shape([1, 1, 2]).canonical() == Shape([2, 1, 1])
        assert Shape([1, 1, 2]).is_isomorphic(Shape([1, 2, 1]))
        assert not Shape([3, 1]).is_isomorphic(Shape([2, 2]))

    def test_partition_covers_vertices(self):
        part = Shape([3, 1, 2]).partition()
        assert part.center == 0
        assert [list(r) for r in part.ranges] == [[1, 2, 3], [4], [5, 6]]
        assert part.block_of(0) is None and part.block_of(5) == 2


class TestParse:
    def test_whitespace_ignored(self):
        assert parse_shape(" 2, 1 ,1 ") == Shape([2, 1, 1])

    @pytest.mark.parametrize("text", ["", "0,2", "2,,1", "2,-1", "a", ","])
    def test_rejects(self, text):
        with pytest.raises(InvalidShape):
            parse_shape(text)


def test_adjacency_path():
    adj = build_adjacency(Shape([1, 1]))
    assert edges(adj) == {(0, 1), (0, 2)}


def test_adjacency_single_block_is_complete():
    assert (build_adjacency(Shape([2])) == 1 - np.eye(3, dtype=int)).all()


def test_adjacency_s21_degrees():
    adj = build_adjacency(Shape([2, 1]))
    assert edges(adj) == {(0, 1), (0, 2), (1, 2), (0, 3)}
    assert tuple(adj.sum(axis=1)) == (3, 2, 2, 1)


def test_bfs_path_and_clique():
    assert bfs_distance_matrix(build_adjacency(Shape([1, 1]))).tolist() == [[0, 1, 1], [1, 0, 2], [1, 2, 0]]
    assert (bfs_distance_matrix(build_adjacency(Shape([2]))) == 1 - np.eye(3, dtype=int)).all()


def test_bfs_s21_via_center():
    d = bfs_distance_matrix(build_adjacency(Shape([2, 1])))
    assert d[1, 3] == d[2, 3] == 2
    off = [d[i, j] for i in range(4) for j in range(4) if i != j and {i, j} not in ({1, 3}, {2, 3})]
    assert set(off) == {1}


def test_bfs_disconnected():
    adj = np.zeros((3, 3), dtype=int)
    adj[0, 1] = adj[1, 0] = 1
    with pytest.raises(DisconnectedGraph):
        bfs_distance_matrix(adj)


@pytest.mark.parametrize(
    "parts, expected",
    [
        ([1, 1], [[0, 1, 1], [1, 0, 4], [1, 4, 0]]),
        ([1, 1, 1], [[0, 1, 1, 1], [1, 0, 4, 4], [1, 4, 0, 4], [1, 4, 4, 0]]),
        ([2, 1], [[0, 1, 1, 1], [1, 0, 1, 4], [1, 1, 0, 4], [1, 4, 4, 0]]),
    ],
)
def test_squared_distance_examples(parts, expected):
    assert squared_distance_matrix(Shape(parts)).tolist() == expected


@pytest.mark.parametrize(
    "parts, expected",
    [
        ([1, 1], [[0, 4], [4, 0]]),
        ([1, 1, 1], (4 * (np.ones((3, 3), dtype=int) - np.eye(3, dtype=int))).tolist()),
        ([2, 1], [[0, 1, 4], [1, 0, 4], [4, 4, 0]]),
    ],
)
def test_delta22_examples(parts, expected):
    assert delta22(Shape(parts)).tolist() == expected


@pytest.mark.parametrize("shape", all_shapes(12), ids=str)
def test_block_form_matches_bfs(shape):
    delta = squared_distance_matrix(shape)
    dist = bfs_distance_matrix(build_adjacency(shape))
    assert (delta == dist * dist).all()
    assert (delta == delta.T).all() and (np.diag(delta) == 0).all()
    part = shape.partition()
    for u in range(shape.n):
        for v in range(shape.n):
            if u != v:
                same = part.block_of(u) is None or part.block_of(v) is None or part.block_of(u) == part.block_of(v)
                assert delta[u, v] == (1 if same else 4)
    assert (delta22(shape) == delta[1:, 1:]).all()
    assert dist.max() == (1 if shape.b == 1 else 2)
