"""Cyclic decompositions of complete multipartite graphs from labelings.

A d-divisible graceful labeling of a graph with e = d * q edges yields a
cyclic decomposition of the complete multipartite graph with q + 1 parts
of size 2dn, modeled on Z_v with v = 2dn(q+1) and parts the residue
classes mod q + 1.  Base block j keeps the labels of the low class and
shifts the high class up by j * d * (q+1); the n base blocks together
meet every difference class in [1, dn(q+1)] that is not a multiple of
q + 1 exactly once, so their v translates partition the edge set.  One
block (n = 1) needs no class split, so a plain labeling suffices there;
for n > 1 the shift argument leans on the alpha boundary.

verify_decomposition ignores all of that and simply counts every edge of
every translated block into a bitmap, which is the point: the claim is
checked against an independent exhaustive accounting, feasible at small
scale.  check_difference_classes is the O(n*e) shortcut certificate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from . import _kernels
from .checking import (AlphaCert, CheckReport, InvalidParametersError, Labeling,
                       check_d_graceful, d_params)
from .constructions import F1, F2, F4, Family
from .grids import Graph


@dataclass(frozen=True)
class MultipartiteSpec:
    """Complete multipartite host graph on Z_v: parts are residues mod parts."""

    parts: int
    part_size: int

    @property
    def v(self) -> int:
        return self.parts * self.part_size

    def part_of(self, x: int) -> int:
        return x % self.parts

    @property
    def edge_count(self) -> int:
        return math.comb(self.v, 2) - self.parts * math.comb(self.part_size, 2)

    def describe(self) -> str:
        return f"K_{{{self.parts}x{self.part_size}}}"


@dataclass(frozen=True)
class BaseBlock:
    """One base block: vertex labels in canonical order plus its edge list."""

    vertex_labels: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Decomposition:
    spec: MultipartiteSpec
    graph: Graph
    d: int
    n: int
    q: int
    blocks: tuple[BaseBlock, ...]
    development: np.ndarray | None = None


def base_blocks(g: Graph, f: Labeling, cert: AlphaCert | None, d: int, n: int) -> Decomposition:
    """The n base blocks induced by a verified labeling.

    The labeling is re-checked here; n > 1 additionally requires an alpha
    certificate because the higher blocks shift one whole class.
    """
    if n < 1:
        raise InvalidParametersError(f"n must be >= 1, got {n}")
    report = check_d_graceful(g, f, d)
    if not report:
        raise ValueError(f"labeling rejected: {report.describe()}")
    params = d_params(g.num_edges, d)
    if n > 1:
        if cert is None:
            raise ValueError("an alpha certificate is required for n > 1")
        max_low = max(f.values[x] for x in cert.low)
        min_high = min(f.values[x] for x in cert.high)
        if max_low >= min_high or max_low != cert.boundary:
            raise ValueError("alpha certificate does not match the labeling")
    span = d * (params.q + 1)
    v = 2 * n * span
    low = cert.low if cert is not None else frozenset()
    edge_idx = g.edge_indices()
    blocks = []
    for j in range(n):
        labels = tuple(
            f.values[x] if j == 0 or x in low else f.values[x] + j * span
            for x in range(g.num_vertices)
        )
        edges = tuple((labels[int(u)], labels[int(w)]) for u, w in edge_idx)
        blocks.append(BaseBlock(vertex_labels=labels, edges=edges))
    spec = MultipartiteSpec(parts=params.q + 1, part_size=2 * d * n)
    assert spec.v == v
    return Decomposition(spec=spec, graph=g, d=d, n=n, q=params.q, blocks=tuple(blocks))


def develop(dec: Decomposition) -> Decomposition:
    """All v translates of every base block, as an (n*v, |V|) label array."""
    v = dec.spec.v
    base = np.array([b.vertex_labels for b in dec.blocks], dtype=np.int64)
    shifts = np.arange(v, dtype=np.int64)
    dev = (base[:, None, :] + shifts[None, :, None]) % v
    dev = np.ascontiguousarray(dev.reshape(-1, base.shape[1]))
    dev.setflags(write=False)
    return replace(dec, development=dev)


def verify_decomposition(dec: Decomposition) -> CheckReport:
    """Exhaustively verify a developed decomposition.

    Checks every translated block for an injective vertex map and legal
    edges, then counts all block edges into a v x v bitmap and compares
    it against the multipartite edge set.  Exact, no tolerances.
    """
    if dec.development is None:
        raise ValueError("decomposition not developed; call develop() first")
    dev = dec.development
    v = dec.spec.v
    parts = dec.spec.parts
    srt = np.sort(dev, axis=1)
    dup_rows = np.flatnonzero(np.any(srt[:, 1:] == srt[:, :-1], axis=1))
    if dup_rows.size:
        row = int(dup_rows[0])
        dup_at = int(np.flatnonzero(srt[row, 1:] == srt[row, :-1])[0])
        return CheckReport(False, "block-not-injective", (row, int(srt[row, dup_at])))
    edge_idx = dec.graph.edge_indices()
    ends_a = dev[:, edge_idx[:, 0]]
    ends_b = dev[:, edge_idx[:, 1]]
    illegal = np.argwhere(ends_a % parts == ends_b % parts)
    if illegal.size:
        row, col = (int(x) for x in illegal[0])
        return CheckReport(False, "illegal-edge",
                           (row, (int(ends_a[row, col]), int(ends_b[row, col]))))
    counts = np.zeros((v, v), dtype=np.int64)
    _kernels.count_pairs(np.ascontiguousarray(ends_a.ravel()),
                         np.ascontiguousarray(ends_b.ravel()), counts)
    residues = np.arange(v, dtype=np.int64) % parts
    expected = np.triu((residues[:, None] != residues[None, :]).astype(np.int64), 1)
    over = np.argwhere(counts > expected)
    if over.size:
        x, y = (int(t) for t in over[0])
        return CheckReport(False, "duplicate-edge", ((x, y), int(counts[x, y])))
    under = np.argwhere(counts < expected)
    if under.size:
        x, y = (int(t) for t in under[0])
        return CheckReport(False, "uncovered-edge", ((x, y),))
    return CheckReport(True)


def check_difference_classes(dec: Decomposition) -> CheckReport:
    """O(n*e) certificate: base-block difference classes hit the target set.

    The target is every class in [1, v/2] with representative not
    divisible by the part count, each exactly once across all blocks.
    """
    v = dec.spec.v
    parts = dec.spec.parts
    seen: set[int] = set()
    for b_idx, block in enumerate(dec.blocks):
        for a, b in block.edges:
            cls = min((a - b) % v, (b - a) % v)
            if cls == 0:
                return CheckReport(False, "zero-difference", (b_idx, a))
            if cls % parts == 0:
                return CheckReport(False, "forbidden-difference-class", (b_idx, cls))
            if cls in seen:
                return CheckReport(False, "duplicate-difference-class", (b_idx, cls))
            seen.add(cls)
    expected = {c for c in range(1, v // 2 + 1) if c % parts != 0}
    if seen != expected:
        return CheckReport(False, "missing-difference-class", (min(expected - seen),))
    return CheckReport(True)


@dataclass(frozen=True)
class DecompositionTarget:
    """One row of the closing proposition: a host graph one family reaches."""

    family: Family
    d: int
    q: int
    parts: int
    part_size: int
    v: int

    def describe(self) -> str:
        return f"K_{{{self.parts}x{self.part_size}}}"


def proposition_table(k: int, m: int, n: int) -> list[DecompositionTarget]:
    """The three decomposition targets reachable at (k, m, n), one per family.

    Valid for every m >= 2; the m = 2 rows are the prism case.
    """
    if k < 1 or n < 1:
        raise InvalidParametersError(f"need k >= 1 and n >= 1, got k={k}, n={n}")
    if m < 2:
        raise InvalidParametersError(f"m must be >= 2, got {m}")
    rows = []
    for family in (F1, F2, F4):
        d = family.divisor(m)
        q = 4 * k // family.multiplier
        spec = MultipartiteSpec(parts=q + 1, part_size=2 * d * n)
        rows.append(DecompositionTarget(family=family, d=d, q=q, parts=spec.parts,
                                        part_size=spec.part_size, v=spec.v))
    return rows
