"""Exhaustive search oracle for divisible graceful labelings.

The oracle enumerates labelings of an arbitrary small graph by
depth-first assignment along a breadth-first vertex order, pruning on
repeated labels, repeated or forbidden differences and, optionally, on
both orientations of the alpha boundary.  It is deliberately a second,
independent route to the same answers as the closed-form constructions:
cross_validate insists the incremental constraint engine and the offline
checker agree labeling by labeling.

Results are deterministic for a given configuration.  With several
workers the top-level label choices fan out to a thread pool and the
per-branch results are merged back in branch order, so the output is
identical to a serial run; the compiled search kernel releases the GIL,
which is what makes the threads worthwhile.
"""

from __future__ import annotations

from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .checking import (CheckReport, Labeling, NotBipartiteError, check_alpha,
                       check_d_graceful, d_params)
from .grids import Graph, GridGraph, adjacency_lists, two_coloring


@dataclass(frozen=True)
class SearchConfig:
    """Search parameters.

    max_results 0 exhausts the space; the count is then exact and the
    returned labelings are capped at store_limit (store_limit 0 counts
    without keeping any).  order is "bfs" or "bfs-reversed".  With
    symmetry_break the first vertex in search order only takes labels
    from the lower half of the range, which collapses each labeling with
    its complement and therefore changes raw counts.
    """

    d: int
    alpha_only: bool = False
    max_results: int = 0
    order: str = "bfs"
    symmetry_break: bool = False
    store_limit: int = 10000
    workers: int = 1


@dataclass(frozen=True)
class SearchResult:
    labelings: tuple[Labeling, ...]
    count: int
    exhaustive: bool


def _bfs_order(adj: list[list[int]]) -> list[int]:
    n = len(adj)
    seen = [False] * n
    order: list[int] = []
    for root in range(n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            order.append(v)
            for u in adj[v]:
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)
    return order


@dataclass(frozen=True)
class _Arrays:
    nbr_flat: np.ndarray
    nbr_off: np.ndarray
    order: np.ndarray
    n_labels: int
    allowed: np.ndarray
    side: np.ndarray


def _prepare(g: Graph, cfg: SearchConfig) -> _Arrays:
    params = d_params(g.num_edges, cfg.d)
    n_labels = params.d * (params.q + 1)
    adj = adjacency_lists(g)
    order = _bfs_order(adj)
    if cfg.order == "bfs-reversed":
        order = order[::-1]
    elif cfg.order != "bfs":
        raise ValueError(f"unknown order strategy {cfg.order!r}")
    pos_of = {v: p for p, v in enumerate(order)}
    flat: list[int] = []
    off = [0]
    for p, v in enumerate(order):
        earlier = sorted(pos_of[u] for u in adj[v] if pos_of[u] < p)
        flat.extend(earlier)
        off.append(len(flat))
    allowed = np.zeros(n_labels + 1, dtype=np.bool_)
    for delta in params.allowed:
        allowed[delta] = True
    if cfg.alpha_only:
        color = two_coloring(g)
        if color is None:
            raise NotBipartiteError("alpha search requires a bipartite graph")
        side = np.array([color[v] for v in order], dtype=np.int64)
    else:
        side = np.zeros(len(order), dtype=np.int64)
    return _Arrays(
        nbr_flat=np.array(flat, dtype=np.int64),
        nbr_off=np.array(off, dtype=np.int64),
        order=np.array(order, dtype=np.int64),
        n_labels=n_labels,
        allowed=allowed,
        side=side,
    )


def _run_kernel(arrays: _Arrays, cfg: SearchConfig, prefix: np.ndarray,
                store_cap: int, first_limit: int) -> tuple[int, np.ndarray]:
    n = arrays.order.shape[0]
    out = np.zeros((store_cap, n), dtype=np.int64)
    total, stored = _kernels.dfs_search(
        arrays.nbr_flat, arrays.nbr_off, arrays.order, arrays.n_labels,
        arrays.allowed, cfg.alpha_only, arrays.side, first_limit, prefix,
        cfg.max_results, out)
    return int(total), out[: int(stored)]


def search(g: Graph, cfg: SearchConfig) -> SearchResult:
    """Enumerate d-divisible graceful labelings of g under cfg.

    Identical configurations produce identical results, including order.
    """
    arrays = _prepare(g, cfg)
    n_labels = arrays.n_labels
    first_limit = n_labels
    if cfg.symmetry_break:
        first_limit = (n_labels - 1) // 2 + 1
    store_cap = cfg.max_results if cfg.max_results > 0 else cfg.store_limit
    if cfg.workers <= 1:
        total, rows = _run_kernel(
            arrays, cfg, np.empty(0, dtype=np.int64), store_cap, first_limit)
        parts = [(total, rows)]
    else:
        branches = [np.array([b], dtype=np.int64) for b in range(first_limit)]
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            futures = [
                pool.submit(_run_kernel, arrays, cfg, br, store_cap, first_limit)
                for br in branches
            ]
            parts = [fut.result() for fut in futures]
    total = 0
    rows: list[np.ndarray] = []
    kept = 0
    for branch_total, branch_rows in parts:
        total += branch_total
        for row in branch_rows:
            if kept < store_cap and (cfg.max_results == 0 or kept < cfg.max_results):
                rows.append(row)
                kept += 1
    if cfg.max_results > 0:
        total = min(total, cfg.max_results)
    exhaustive = cfg.max_results == 0 or total < cfg.max_results
    labelings = tuple(Labeling(g, tuple(int(x) for x in row)) for row in rows)
    return SearchResult(labelings=labelings, count=total, exhaustive=exhaustive)


def engine_accepts(g: Graph, f: Labeling, cfg: SearchConfig) -> bool:
    """Replay a complete labeling through the search's constraint engine."""
    arrays = _prepare(g, cfg)
    prefix = np.array([f.values[v] for v in arrays.order], dtype=np.int64)
    total, _ = _run_kernel(arrays, cfg, prefix, 0, arrays.n_labels)
    return total == 1


def cross_validate(g: Graph, f: Labeling, d: int,
                   cfg: SearchConfig | None = None) -> CheckReport:
    """Require the checker and the constraint engine to agree on f.

    Agreement is a pass (reason "agree-accept" or "agree-reject"); any
    disagreement is an internal consistency failure.
    """
    cfg = cfg or SearchConfig(d=d)
    if cfg.d != d:
        raise ValueError("cfg.d must match d")
    checker_ok = bool(check_d_graceful(g, f, d))
    if checker_ok and cfg.alpha_only:
        checker_ok = check_alpha(g, f) is not None
    engine_ok = engine_accepts(g, f, cfg)
    if checker_ok == engine_ok:
        return CheckReport(True, "agree-accept" if checker_ok else "agree-reject")
    return CheckReport(False, "engine-checker-disagreement",
                       (("checker", checker_ok), ("engine", engine_ok)))
