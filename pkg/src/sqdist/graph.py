"""Starlike block graph shapes and their squared distance matrices.

A shape ``(n_1, ..., n_b)`` denotes the graph whose blocks are the cliques
``K_{n_i + 1}``, all glued at one central vertex.  Vertex 0 is the center and
the non-central vertices of block ``i`` occupy a contiguous index range, in
part order.

Matrices are returned as ``numpy`` integer arrays.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import DisconnectedGraph, InvalidShape

__all__ = [
    "Shape",
    "VertexPartition",
    "parse_shape",
    "build_adjacency",
    "bfs_distance_matrix",
    "squared_distance_matrix",
    "delta22",
]


@dataclass(frozen=True)
class VertexPartition:
    center: int
    ranges: tuple[range, ...]

    def block_of(self, v: int) -> int | None:
        """Block index (0-based) containing ``v``; ``None`` for the center."""
        for i, r in enumerate(self.ranges):
            if v in r:
                return i
        return None


@dataclass(frozen=True)
class Shape:
    """Block sizes of a starlike block graph, in the given order."""

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        parts = tuple(parts)
        if not parts:
            raise InvalidShape("a shape needs at least one block")
        for p in parts:
            if isinstance(p, bool) or not isinstance(p, (int, np.integer)):
                raise InvalidShape(f"block sizes must be integers, got {p!r}")
            if p < 1:
                raise InvalidShape(f"block sizes must be positive, got {p}")
        object.__setattr__(self, "parts", tuple(int(p) for p in parts))

    @property
    def b(self) -> int:
        return len(self.parts)

    @property
    def n(self) -> int:
        return 1 + sum(self.parts)

    def canonical(self) -> Shape:
        return Shape(sorted(self.parts, reverse=True))

    def is_isomorphic(self, other: Shape) -> bool:
        return self.canonical().parts == other.canonical().parts

    def partition(self) -> VertexPartition:
        ranges = []
        start = 1
        for p in self.parts:
            ranges.append(range(start, start + p))
            start += p
        return VertexPartition(0, tuple(ranges))

    def text(self) -> str:
        return ",".join(map(str, self.parts))

    def __str__(self) -> str:
        return f"S({self.text()})"

    def __repr__(self) -> str:
        return f"Shape({self.parts!r})"

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]


def parse_shape(text: str) -> Shape:
    """Parse ``"2,1,1"`` into ``Shape((2, 1, 1))``.  Whitespace is ignored."""
    cleaned = "".join(text.split())
    if not cleaned:
        raise InvalidShape("empty shape")
    parts = []
    for token in cleaned.split(","):
        if not token:
            raise InvalidShape(f"empty part in {text!r}")
        try:
            value = int(token)
        except ValueError:
            raise InvalidShape(f"not an integer: {token!r}") from None
        if value < 1:
            raise InvalidShape(f"block sizes must be positive, got {value}")
        parts.append(value)
    return Shape(parts)


def build_adjacency(shape: Shape) -> np.ndarray:
    n = shape.n
    adj = np.zeros((n, n), dtype=np.int64)
    adj[0, 1:] = adj[1:, 0] = 1
    for r in shape.partition().ranges:
        adj[r.start:r.stop, r.start:r.stop] = 1
    np.fill_diagonal(adj, 0)
    return adj


def bfs_distance_matrix(adjacency) -> np.ndarray:
    """All-pairs shortest path lengths by breadth-first search from every vertex."""
    adj = np.asarray(adjacency)
    n = adj.shape[0]
    neighbours = [np.flatnonzero(adj[u]).tolist() for u in range(n)]
    dist = np.full((n, n), -1, dtype=np.int64)
    for s in range(n):
        dist[s, s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in neighbours[u]:
                if dist[s, w] < 0:
                    dist[s, w] = dist[s, u] + 1
                    queue.append(w)
        if (dist[s] < 0).any():
            raise DisconnectedGraph(f"vertex {s} cannot reach every other vertex")
    return dist


def squared_distance_matrix(shape: Shape) -> np.ndarray:
    """Assemble Delta directly from its block layout.

    Center row/column is 1 against everything, each block contributes
    ``J - I`` on the diagonal and every cross-block entry is 4.
    """
    n = shape.n
    delta = np.full((n, n), 4, dtype=np.int64)
    delta[0, :] = delta[:, 0] = 1
    for r in shape.partition().ranges:
        delta[r.start:r.stop, r.start:r.stop] = 1
    np.fill_diagonal(delta, 0)
    return delta


def delta22(shape: Shape) -> np.ndarray:
    return squared_distance_matrix(shape)[1:, 1:].copy()
