"""Divisible graceful labelings and the alpha boundary condition.

A labeling of a graph with e = d * q edges is d-divisible graceful when it
is injective into [0, d*(q+1) - 1] and the absolute edge differences use
every value of [1, d*(q+1)] except the multiples of q + 1, each exactly
once.  The allowed values split into d blocks of q consecutive integers.
With d = 1 this is the classical graceful condition; with d = e the
differences are exactly the odd numbers below 2e.

The alpha condition asks, for a bipartite graph, that every label on one
color class stays strictly below every label on the other class.  The
largest label on the low class is the boundary of the labeling.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .grids import Graph, GridGraph, SimpleGraph, two_coloring


class InvalidParametersError(ValueError):
    """Raised when e, d do not describe a valid divisibility split (d must divide e)."""


class NotBipartiteError(ValueError):
    """Raised when an alpha question is asked of a non-bipartite graph."""


@dataclass(frozen=True)
class DParams:
    """Derived constants for a d-divisible labeling problem on e = d * q edges."""

    e: int
    d: int
    q: int

    @property
    def max_label(self) -> int:
        return self.d * (self.q + 1) - 1

    @property
    def forbidden(self) -> frozenset[int]:
        return frozenset((self.q + 1) * t for t in range(1, self.d + 1))

    @property
    def blocks(self) -> tuple[range, ...]:
        w = self.q + 1
        return tuple(range(w * t + 1, w * t + self.q + 1) for t in range(self.d))

    @property
    def allowed(self) -> frozenset[int]:
        return frozenset(range(1, self.d * (self.q + 1) + 1)) - self.forbidden


def d_params(e: int, d: int) -> DParams:
    if e < 0 or d < 1:
        raise InvalidParametersError(f"need e >= 0 and d >= 1, got e={e}, d={d}")
    if e % d != 0:
        raise InvalidParametersError(f"d={d} does not divide e={e}")
    return DParams(e=e, d=d, q=e // d)


@dataclass(frozen=True)
class Labeling:
    """A total vertex labeling, stored in canonical vertex order."""

    graph: Graph
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.graph.num_vertices
        if len(self.values) != n:
            raise ValueError(f"expected {n} labels, got {len(self.values)}")
        vals = tuple(int(v) for v in self.values)
        if any(v < 0 for v in vals):
            raise ValueError("labels must be nonnegative")
        object.__setattr__(self, "values", vals)

    def as_array(self) -> np.ndarray:
        return np.array(self.values, dtype=np.int64)

    def value_at(self, vertex) -> int:
        if isinstance(self.graph, GridGraph) and isinstance(vertex, tuple):
            return self.values[self.graph.vertex_index(vertex)]
        return self.values[int(vertex)]

    def layer(self, i: int) -> tuple[int, ...]:
        if not isinstance(self.graph, GridGraph):
            raise TypeError("layers are only defined for grid graphs")
        g = self.graph
        base = g.vertex_index((i, 1))
        return self.values[base : base + g.ring_len]

    @classmethod
    def from_rows(cls, grid: GridGraph, rows: Sequence[Sequence[int]]) -> "Labeling":
        if len(rows) != grid.m or any(len(r) != grid.ring_len for r in rows):
            raise ValueError("rows must be m sequences of length 4k")
        flat: list[int] = []
        for r in rows:
            flat.extend(int(v) for v in r)
        return cls(grid, tuple(flat))


@dataclass(frozen=True)
class CheckReport:
    """Outcome of a verification pass: the first violated clause, if any."""

    ok: bool
    reason: str | None = None
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "pass"
        if self.witness is None:
            return self.reason or "fail"
        return f"{self.reason}: {self.witness}"


@dataclass(frozen=True)
class AlphaCert:
    """Witness of the alpha condition: the class split and its boundary."""

    low: frozenset[int]
    high: frozenset[int]
    boundary: int


def edge_differences(g: Graph, f: Labeling) -> tuple[int, ...]:
    """Absolute label differences over the canonical edge order."""
    vals = f.values
    return tuple(abs(vals[int(u)] - vals[int(w)]) for u, w in g.edge_indices())


def check_d_graceful(g: Graph, f: Labeling, d: int) -> CheckReport:
    """Check the d-divisible graceful condition, reporting the first violation.

    Clause order: injectivity, label range, then the difference multiset.
    Witnesses carry canonical vertex indices and the offending values.
    """
    params = d_params(g.num_edges, d)
    if len(f.values) != g.num_vertices:
        return CheckReport(False, "wrong-vertex-count", (len(f.values), g.num_vertices))
    seen: dict[int, int] = {}
    for idx, lab in enumerate(f.values):
        if lab > params.max_label:
            return CheckReport(False, "label-out-of-range", (idx, lab, params.max_label))
        if lab in seen:
            return CheckReport(False, "duplicate-label", (seen[lab], idx, lab))
        seen[lab] = idx
    allowed = params.allowed
    used: set[int] = set()
    vals = f.values
    for u, w in g.edge_indices():
        u = int(u)
        w = int(w)
        delta = abs(vals[u] - vals[w])
        if delta not in allowed:
            return CheckReport(False, "forbidden-difference", ((u, w), delta))
        if delta in used:
            return CheckReport(False, "duplicate-difference", ((u, w), delta))
        used.add(delta)
    if used != allowed:
        missing = min(allowed - used)
        return CheckReport(False, "missing-difference", (missing,))
    return CheckReport(True)


def check_alpha(g: Graph, f: Labeling) -> AlphaCert | None:
    """Try both orientations of the canonical 2-coloring; None if neither works.

    Raises NotBipartiteError for non-bipartite input, which is a different
    failure than a boundary violation.
    """
    color = two_coloring(g)
    if color is None:
        raise NotBipartiteError("graph is not bipartite")
    class0 = frozenset(int(i) for i in np.flatnonzero(color == 0))
    class1 = frozenset(int(i) for i in np.flatnonzero(color == 1))
    vals = f.values
    for low, high in ((class0, class1), (class1, class0)):
        max_low = max((vals[v] for v in low), default=-1)
        min_high = min((vals[v] for v in high), default=max_low + 1)
        if max_low < min_high:
            return AlphaCert(low=low, high=high, boundary=max_low)
    return None


@dataclass(frozen=True)
class DifferenceProfile:
    """Edge differences of a prism labeling, split by edge role.

    layer1 and layer2 hold the ring differences |f(i, j+1) - f(i, j)| for
    the two rings, spokes the rung differences |f(1, j) - f(2, j)|, each
    indexed cyclically by j.  full is the whole multiset in canonical
    edge order.
    """

    layer1: tuple[int, ...]
    layer2: tuple[int, ...]
    spokes: tuple[int, ...]
    full: tuple[int, ...]


def difference_profile(g: GridGraph, f: Labeling) -> DifferenceProfile:
    """Split a prism labeling's differences by edge role; rejects m != 2."""
    if not isinstance(g, GridGraph) or g.m != 2:
        raise ValueError("difference profiles are defined for prisms (m = 2)")
    w = g.ring_len
    r1 = f.layer(1)
    r2 = f.layer(2)
    layer1 = tuple(abs(r1[j % w] - r1[j - 1]) for j in range(1, w + 1))
    layer2 = tuple(abs(r2[j % w] - r2[j - 1]) for j in range(1, w + 1))
    spokes = tuple(abs(r1[j] - r2[j]) for j in range(w))
    return DifferenceProfile(layer1=layer1, layer2=layer2, spokes=spokes,
                             full=edge_differences(g, f))
