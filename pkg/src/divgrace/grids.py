"""Cylinder-grid graphs C_{4k} x P_m and small simple graphs.

Grid vertices carry coordinates (i, j): layer i in [1, m], ring position
j in [1, 4k].  The canonical index of (i, j) is (i - 1) * 4k + (j - 1).
Canonical edge order is all ring edges layer by layer, then all rung
edges, each block in increasing j.  Both orders are fixed so that
serialized artifacts are byte-reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence, Union

import numpy as np

Coord = tuple[int, int]


@dataclass(frozen=True)
class GridGraph:
    """The cylinder grid C_{4k} x P_m: m rings of length 4k joined by rungs."""

    k: int
    m: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.m < 2:
            raise ValueError(f"m must be >= 2, got {self.m}")

    @property
    def ring_len(self) -> int:
        return 4 * self.k

    @property
    def num_vertices(self) -> int:
        return 4 * self.k * self.m

    @property
    def num_edges(self) -> int:
        return 4 * self.k * (2 * self.m - 1)

    def vertex_index(self, coord: Coord) -> int:
        i, j = coord
        if not (1 <= i <= self.m and 1 <= j <= self.ring_len):
            raise ValueError(f"coordinate {coord} outside layer [1,{self.m}] x ring [1,{self.ring_len}]")
        return (i - 1) * self.ring_len + (j - 1)

    def vertex_at(self, index: int) -> Coord:
        if not (0 <= index < self.num_vertices):
            raise ValueError(f"vertex index {index} out of range")
        return index // self.ring_len + 1, index % self.ring_len + 1

    def vertices(self) -> Iterator[Coord]:
        for i in range(1, self.m + 1):
            for j in range(1, self.ring_len + 1):
                yield (i, j)

    def edges(self) -> Iterator[tuple[Coord, Coord]]:
        """Canonical edge order: ring edges per layer, then rungs, increasing j."""
        w = self.ring_len
        for i in range(1, self.m + 1):
            for j in range(1, w + 1):
                yield (i, j), (i, j % w + 1)
        for i in range(1, self.m):
            for j in range(1, w + 1):
                yield (i, j), (i + 1, j)

    def edge_indices(self) -> np.ndarray:
        return _grid_edge_array(self.k, self.m)


@lru_cache(maxsize=None)
def _grid_edge_array(k: int, m: int) -> np.ndarray:
    g = GridGraph(k, m)
    arr = np.array(
        [[g.vertex_index(u), g.vertex_index(w)] for u, w in g.edges()],
        dtype=np.int64,
    )
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class SimpleGraph:
    """A loop-free simple graph on vertices 0..n-1 with a fixed edge order."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        norm = []
        seen = set()
        for u, w in self.edges:
            if not (0 <= u < self.n and 0 <= w < self.n):
                raise ValueError(f"edge ({u},{w}) out of range")
            if u == w:
                raise ValueError(f"loop at vertex {u}")
            pair = (u, w) if u < w else (w, u)
            if pair in seen:
                raise ValueError(f"duplicate edge {pair}")
            seen.add(pair)
            norm.append(pair)
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def num_vertices(self) -> int:
        return self.n

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def edge_indices(self) -> np.ndarray:
        return np.array(self.edges, dtype=np.int64).reshape(-1, 2)


Graph = Union[GridGraph, SimpleGraph]


def build_grid(k: int, m: int) -> GridGraph:
    """Build C_{4k} x P_m, rejecting k < 1 and m < 2."""
    return GridGraph(k, m)


def as_simple(g: GridGraph) -> SimpleGraph:
    """Flatten a grid to canonical indices, preserving the canonical edge order."""
    idx = g.edge_indices()
    return SimpleGraph(g.num_vertices, tuple((int(u), int(w)) for u, w in idx))


def bipartition(g: GridGraph) -> tuple[frozenset[Coord], frozenset[Coord]]:
    """The two color classes of the grid: (i + j) even versus odd."""
    a = frozenset(c for c in g.vertices() if (c[0] + c[1]) % 2 == 0)
    b = frozenset(c for c in g.vertices() if (c[0] + c[1]) % 2 == 1)
    return a, b


@dataclass(frozen=True)
class PrismView:
    """Prism (m = 2) coordinates: ring 1 and ring 2 joined position by position."""

    grid: GridGraph

    def __post_init__(self) -> None:
        if self.grid.m != 2:
            raise ValueError("prism view requires m = 2")

    @property
    def size(self) -> int:
        return self.grid.num_edges

    def vertex(self, layer: int, pos: int) -> Coord:
        if layer not in (1, 2):
            raise ValueError("layer must be 1 or 2")
        return (layer, pos)

    def ring(self, layer: int) -> tuple[Coord, ...]:
        return tuple((layer, j) for j in range(1, self.grid.ring_len + 1))

    def _half(self, layer: int, parity: int) -> frozenset[Coord]:
        return frozenset((layer, j) for j in range(1, self.grid.ring_len + 1) if j % 2 == parity)

    @property
    def odd_ring1(self) -> frozenset[Coord]:
        return self._half(1, 1)

    @property
    def even_ring1(self) -> frozenset[Coord]:
        return self._half(1, 0)

    @property
    def odd_ring2(self) -> frozenset[Coord]:
        return self._half(2, 1)

    @property
    def even_ring2(self) -> frozenset[Coord]:
        return self._half(2, 0)


def adjacency_lists(g: Graph) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(g.num_vertices)]
    for u, w in g.edge_indices():
        adj[int(u)].append(int(w))
        adj[int(w)].append(int(u))
    return [sorted(nb) for nb in adj]


def two_coloring(g: Graph) -> np.ndarray | None:
    """BFS 2-coloring with lowest-index roots in class 0; None if not bipartite."""
    n = g.num_vertices
    color = np.full(n, -1, dtype=np.int64)
    adj = adjacency_lists(g)
    for root in range(n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in adj[v]:
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    return color


def vertex_name(g: Graph, index: int) -> str:
    """Stable human-readable vertex name used in reports and DOT output."""
    if isinstance(g, GridGraph):
        i, j = g.vertex_at(index)
        return f"({i},{j})"
    return str(index)
