"""JSON certificates and DOT export.

Certificates are plain JSON with a fixed key order so that write/read
round-trips are byte-identical.  A labeling certificate names its graph,
the divisor d and the labels in canonical vertex order, plus an optional
alpha block.  A decomposition certificate records q, d, n, v and the
base blocks as label arrays.  DOT output has one node statement per
vertex (labeled with the f-value) and one edge statement per edge, both
in canonical order.
"""

from __future__ import annotations

import json
from pathlib import Path

from .checking import AlphaCert, Labeling
from .decomp import Decomposition
from .grids import Graph, GridGraph, SimpleGraph, build_grid


class CertificateError(ValueError):
    """Raised for structurally malformed certificate data."""


def graph_to_obj(g: Graph) -> dict:
    if isinstance(g, GridGraph):
        return {"kind": "grid", "k": g.k, "m": g.m}
    return {"kind": "simple", "n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_obj(obj) -> Graph:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise CertificateError("graph descriptor must be an object with a kind")
    kind = obj["kind"]
    try:
        if kind == "grid":
            return build_grid(int(obj["k"]), int(obj["m"]))
        if kind == "simple":
            edges = tuple((int(u), int(w)) for u, w in obj["edges"])
            return SimpleGraph(int(obj["n"]), edges)
    except CertificateError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise CertificateError(f"bad graph descriptor: {exc}") from exc
    raise CertificateError(f"unknown graph kind {kind!r}")


def labeling_to_obj(f: Labeling, d: int, alpha: AlphaCert | None = None) -> dict:
    obj = {
        "graph": graph_to_obj(f.graph),
        "d": int(d),
        "labels": list(f.values),
    }
    if alpha is not None:
        obj["alpha"] = {
            "low_class": sorted(int(x) for x in alpha.low),
            "lambda": int(alpha.boundary),
        }
    return obj


def labeling_from_obj(obj) -> tuple[Labeling, int, AlphaCert | None]:
    if not isinstance(obj, dict):
        raise CertificateError("certificate must be a JSON object")
    for key in ("graph", "d", "labels"):
        if key not in obj:
            raise CertificateError(f"certificate missing {key!r}")
    graph = graph_from_obj(obj["graph"])
    try:
        d = int(obj["d"])
        labeling = Labeling(graph, tuple(int(x) for x in obj["labels"]))
    except (TypeError, ValueError) as exc:
        raise CertificateError(f"bad labeling payload: {exc}") from exc
    alpha = None
    if "alpha" in obj:
        block = obj["alpha"]
        try:
            low = frozenset(int(x) for x in block["low_class"])
            boundary = int(block["lambda"])
        except (KeyError, TypeError, ValueError) as exc:
            raise CertificateError(f"bad alpha block: {exc}") from exc
        high = frozenset(range(graph.num_vertices)) - low
        alpha = AlphaCert(low=low, high=high, boundary=boundary)
    return labeling, d, alpha


def decomposition_to_obj(dec: Decomposition) -> dict:
    return {
        "q": dec.q,
        "d": dec.d,
        "n": dec.n,
        "v": dec.spec.v,
        "base_blocks": [list(b.vertex_labels) for b in dec.blocks],
    }


def decomposition_from_obj(obj) -> dict:
    if not isinstance(obj, dict):
        raise CertificateError("certificate must be a JSON object")
    for key in ("q", "d", "n", "v", "base_blocks"):
        if key not in obj:
            raise CertificateError(f"certificate missing {key!r}")
    try:
        record = {
            "q": int(obj["q"]),
            "d": int(obj["d"]),
            "n": int(obj["n"]),
            "v": int(obj["v"]),
            "base_blocks": [[int(x) for x in block] for block in obj["base_blocks"]],
        }
    except (TypeError, ValueError) as exc:
        raise CertificateError(f"bad decomposition payload: {exc}") from exc
    return record


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2) + "\n"


def write_json(path: str | Path, obj: dict) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8")


def read_json(path: str | Path):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise CertificateError(f"not valid JSON: {exc}") from exc


def read_labeling(path: str | Path) -> tuple[Labeling, int, AlphaCert | None]:
    return labeling_from_obj(read_json(path))


def write_labeling(path: str | Path, f: Labeling, d: int,
                   alpha: AlphaCert | None = None) -> None:
    write_json(path, labeling_to_obj(f, d, alpha))


def dot_export(f: Labeling) -> str:
    g = f.graph
    lines = ["graph labeling {"]
    for idx in range(g.num_vertices):
        lines.append(f'  v{idx} [label="{f.values[idx]}"];')
    for u, w in g.edge_indices():
        lines.append(f"  v{int(u)} -- v{int(w)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
