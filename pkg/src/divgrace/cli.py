"""Command line interface.

Subcommands: construct, verify, decompose, search, table.  Exit codes:
0 success, 1 verification failure, 2 usage or format error.  Every
command re-verifies whatever it is about to write.
"""

from __future__ import annotations

import argparse
import json
import sys

from .certificates import (CertificateError, decomposition_to_obj, dot_export,
                           graph_from_obj, labeling_to_obj, read_json,
                           read_labeling, write_json, write_labeling)
from .checking import (InvalidParametersError, NotBipartiteError, check_alpha,
                       check_d_graceful)
from .constructions import FAMILIES, ConstructionError, construct
from .decomp import (base_blocks, check_difference_classes, develop,
                     proposition_table, verify_decomposition)
from .grids import GridGraph, build_grid
from .oracle import SearchConfig, search

FULL_CHECK_MAX_V = 600


def _fail(code: int, message: str) -> int:
    print(message, file=sys.stderr)
    return code


def _parse_grid_arg(text: str) -> GridGraph:
    try:
        k_str, m_str = text.split(",")
        return build_grid(int(k_str), int(m_str))
    except ValueError as exc:
        raise InvalidParametersError(f"bad --grid value {text!r}: {exc}") from exc


def cmd_construct(args) -> int:
    try:
        labeling = construct(args.k, args.m, FAMILIES[args.family])
    except ValueError as exc:
        return _fail(2, f"invalid parameters: {exc}")
    except ConstructionError as exc:
        return _fail(1, f"construction failed verification: {exc}")
    d = FAMILIES[args.family].divisor(args.m)
    report = check_d_graceful(labeling.graph, labeling, d)
    alpha = check_alpha(labeling.graph, labeling)
    if not report or alpha is None:
        return _fail(1, f"refusing to write unverified labeling: {report.describe()}")
    write_labeling(args.out, labeling, d, alpha)
    print(f"wrote {args.out}: C_{{{4 * args.k}}}xP_{args.m}, d={d}, "
          f"labels in [0,{d * (labeling.graph.num_edges // d + 1) - 1}]")
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(dot_export(labeling))
        print(f"wrote {args.dot}")
    return 0


def cmd_verify(args) -> int:
    try:
        labeling, d, alpha = read_labeling(args.certificate)
    except (OSError, CertificateError) as exc:
        return _fail(2, f"cannot read certificate: {exc}")
    g = labeling.graph
    try:
        report = check_d_graceful(g, labeling, d)
    except InvalidParametersError as exc:
        return _fail(2, f"invalid parameters: {exc}")
    e = g.num_edges
    print(f"graph: {g.num_vertices} vertices, {e} edges; d={d}, q={e // d}")
    if not report:
        print(f"INVALID ({report.describe()})")
        return 1
    print("labeling: valid")
    need_alpha = args.alpha or alpha is not None
    if need_alpha:
        try:
            fresh = check_alpha(g, labeling)
        except NotBipartiteError as exc:
            print(f"INVALID (not-bipartite: {exc})")
            return 1
        if fresh is None:
            print("INVALID (alpha-boundary-violation)")
            return 1
        if alpha is not None and (alpha.boundary != fresh.boundary
                                  or alpha.low not in (fresh.low, fresh.high)):
            print(f"INVALID (alpha-block-mismatch: stated boundary {alpha.boundary})")
            return 1
        print(f"alpha: valid, boundary {fresh.boundary}")
    return 0


def cmd_decompose(args) -> int:
    if args.n < 1:
        return _fail(2, f"--n must be >= 1, got {args.n}")
    try:
        labeling, d, _ = read_labeling(args.infile)
    except (OSError, CertificateError) as exc:
        return _fail(2, f"cannot read certificate: {exc}")
    g = labeling.graph
    try:
        report = check_d_graceful(g, labeling, d)
    except InvalidParametersError as exc:
        return _fail(2, f"invalid parameters: {exc}")
    if not report:
        return _fail(1, f"labeling does not verify: {report.describe()}")
    try:
        cert = check_alpha(g, labeling)
    except NotBipartiteError:
        cert = None
    if args.n > 1 and cert is None:
        return _fail(1, "alpha condition fails, cannot decompose with n > 1")
    dec = base_blocks(g, labeling, cert, d, args.n)
    if args.full_check:
        dec = develop(dec)
        result = verify_decomposition(dec)
    else:
        result = check_difference_classes(dec)
    if not result:
        return _fail(1, f"decomposition does not verify: {result.describe()}")
    if args.full_check:
        edges = dec.spec.edge_count
        print(f"{dec.spec.describe()}: {edges}/{edges} edges covered exactly once")
    else:
        print(f"{dec.spec.describe()}: {dec.n * g.num_edges} difference classes verified")
    write_json(args.out, decomposition_to_obj(dec))
    print(f"wrote {args.out}")
    return 0


def cmd_search(args) -> int:
    if args.grid is not None:
        try:
            g = _parse_grid_arg(args.grid)
        except InvalidParametersError as exc:
            return _fail(2, str(exc))
    else:
        try:
            g = graph_from_obj(read_json(args.graph))
        except (OSError, CertificateError) as exc:
            return _fail(2, f"cannot read graph: {exc}")
    cfg = SearchConfig(
        d=args.d,
        alpha_only=args.alpha,
        max_results=args.limit,
        store_limit=0 if args.count else 10000,
    )
    try:
        result = search(g, cfg)
    except (InvalidParametersError, NotBipartiteError) as exc:
        return _fail(2, str(exc))
    if args.count:
        print(result.count)
        return 0
    for labeling in result.labelings:
        alpha = check_alpha(g, labeling) if args.alpha else None
        print(json.dumps(labeling_to_obj(labeling, args.d, alpha),
                         separators=(",", ":")))
    return 0


def cmd_table(args) -> int:
    if args.kmax < 1 or args.mmax < 2 or args.n < 1:
        return _fail(2, "need --kmax >= 1, --mmax >= 2, --n >= 1")
    any_failed = False
    for k in range(1, args.kmax + 1):
        for m in range(2, args.mmax + 1):
            cells = []
            for target in proposition_table(k, m, args.n):
                try:
                    labeling = construct(k, m, target.family)
                    cert = check_alpha(labeling.graph, labeling)
                    dec = base_blocks(labeling.graph, labeling, cert, target.d, args.n)
                    if dec.spec.v <= FULL_CHECK_MAX_V:
                        status = "verified" if verify_decomposition(develop(dec)) \
                            else "FAILED"
                    else:
                        status = "verified (classes)" if check_difference_classes(dec) \
                            else "FAILED"
                except (ValueError, ConstructionError) as exc:
                    status = f"FAILED ({exc})"
                if status.startswith("FAILED"):
                    any_failed = True
                cells.append(f"{target.describe()}: {status}")
            print(f"k={k} m={m}  " + "  ".join(cells))
    return 1 if any_failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="divgrace",
        description="Divisible graceful labelings of cylinder grids and the "
                    "cyclic multipartite decompositions they generate.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build and write a verified labeling")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--family", choices=sorted(FAMILIES), required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--dot", help="also write a DOT rendering here")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="verify a labeling certificate")
    p.add_argument("certificate")
    p.add_argument("--alpha", action="store_true",
                   help="also require the alpha boundary condition")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decompose", help="derive base blocks from a labeling")
    p.add_argument("--in", required=True, dest="infile", metavar="CERT")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--full-check", action="store_true",
                   help="verify by full development instead of difference classes")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("search", help="exhaustive labeling search")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", help="path to a JSON graph descriptor")
    src.add_argument("--grid", help="k,m for a cylinder grid")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--alpha", action="store_true")
    p.add_argument("--limit", type=int, default=0)
    p.add_argument("--count", action="store_true",
                   help="print only the number of labelings")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("table", help="verify decomposition targets over a range")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--mmax", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
