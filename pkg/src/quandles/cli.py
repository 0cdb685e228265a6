"""Command-line front end.

Exit codes: 0 success (or every requested property true), 1 a requested
property or reconstruction precondition is false, 2 malformed input,
bad usage, or an exceeded search limit.  Output for fixed inputs is
byte-stable: collections are sorted and nothing is timestamped.

QUANDLES_NODE_BUDGET overrides the backtracking-node budget used by the
isomorphism searches; it is the only environment knob.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import analysis, constructions, core, graphs
from .errors import (
    BadComponentSizeError,
    InputError,
    NotCrossedError,
    ResourceLimitError,
)

PROPERTY_NAMES = (
    "connected",
    "homogeneous",
    "flat",
    "medial",
    "crossed",
    "involutive",
    "abelian_inn",
)


def _node_budget() -> int:
    raw = os.environ.get("QUANDLES_NODE_BUDGET")
    if raw is None:
        return core.DEFAULT_NODE_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"QUANDLES_NODE_BUDGET must be an integer, got {raw!r}") from None
    if value < 1:
        raise InputError("QUANDLES_NODE_BUDGET must be positive")
    return value


def _read_json(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from None


def _dump(data) -> str:
    return json.dumps(data, sort_keys=True)


def _write_json(data, out: str | None, summary: str) -> None:
    text = _dump(data)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        print(f"{summary} -> {out}")
    else:
        print(text)


def _load_quandle(path: str, unchecked: bool = False) -> core.FiniteQuandle:
    return core.quandle_from_dict(_read_json(path), unchecked=unchecked)


def _load_graph(path: str) -> graphs.SimpleGraph:
    return graphs.graph_from_dict(_read_json(path))


def _int_args(values, what):
    out = []
    for v in values:
        try:
            out.append(int(v))
        except ValueError:
            raise InputError(f"{what} must be integers, got {v!r}") from None
    return out


def cmd_construct(args) -> int:
    kind = args.kind
    params = args.params
    if kind == "trivial":
        (n,) = _int_args(_expect(params, 1, "trivial N"), "size")
        q = constructions.trivial(n)
        name = f"trivial({n})"
    elif kind == "dihedral":
        (r,) = _int_args(_expect(params, 1, "dihedral R"), "order")
        q = constructions.dihedral(r)
        name = f"dihedral({r})"
    elif kind == "axis":
        (n,) = _int_args(_expect(params, 1, "axis N"), "dimension")
        q = constructions.axis_quandle(n)
        name = f"axis({n})"
    elif kind == "aknn":
        k, n = _int_args(_expect(params, 2, "aknn K N"), "parameters")
        q = constructions.aknn(k, n)
        name = f"aknn({k},{n})"
    elif kind == "graph":
        (path,) = _expect(params, 1, "graph FILE")
        q = constructions.from_graph(_load_graph(path))
        name = f"graph({path})"
    elif kind == "torus":
        if not params:
            raise InputError("torus needs at least one dihedral order")
        orders = _int_args(params, "orders")
        q = constructions.discrete_torus(orders)
        name = "torus(" + ",".join(map(str, orders)) + ")"
    elif kind == "extension":
        qpath, cpath = _expect(params, 2, "extension QUANDLE COCYCLE")
        base = _load_quandle(qpath)
        phi = constructions.cocycle_from_dict(_read_json(cpath))
        q = constructions.cocycle_extension(base, phi)
        name = f"extension({qpath},{cpath})"
    else:  # pragma: no cover - argparse restricts choices
        raise InputError(f"unknown constructor {kind!r}")
    _write_json(core.quandle_to_dict(q), args.out, f"{name}: {q.size} points")
    return 0


def _expect(params, count, usage):
    if len(params) != count:
        raise InputError(f"expected `{usage}`, got {len(params)} parameter(s)")
    return params


def cmd_check(args) -> int:
    q = _load_quandle(args.file)
    report = analysis.property_report(q, node_budget=_node_budget())
    requested = []
    if args.props:
        for name in args.props.split(","):
            name = name.strip()
            if name not in PROPERTY_NAMES:
                raise InputError(
                    f"unknown property {name!r}; choose from {', '.join(PROPERTY_NAMES)}"
                )
            requested.append(name)
    if args.json:
        print(_dump({"size": q.size, **report.to_dict()}))
    else:
        print(f"size: {q.size}")
        for name in PROPERTY_NAMES:
            value = getattr(report, name)
            shown = "unknown" if value is None else ("yes" if value else "no")
            line = f"{name}: {shown}"
            if name in report.witnesses:
                line += f"  (witness: {report.witnesses[name]})"
            print(line)
        print("components: " + " ".join("{" + ",".join(map(str, c)) + "}" for c in report.components))
    for name in requested:
        value = getattr(report, name)
        if value is None:
            print(f"error: {name} could not be decided within the caps", file=sys.stderr)
            return 2
        if not value:
            return 1
    return 0


def cmd_to_graph(args) -> int:
    q = _load_quandle(args.file)
    graph, relabeling = analysis.to_graph(q)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(graphs.to_dot(graph))
        print(f"dot -> {args.dot}")
    if args.map:
        with open(args.map, "w", encoding="utf-8") as fh:
            fh.write(_dump({
                "domain_size": relabeling.domain_size,
                "codomain_size": relabeling.codomain_size,
                "images": list(relabeling.images),
            }) + "\n")
        print(f"relabeling -> {args.map}")
    summary = f"graph: {graph.vertex_count} vertices, {len(graph.edges)} edges"
    _write_json(graphs.graph_to_dict(graph), args.out, summary)
    return 0


def cmd_from_graph(args) -> int:
    g = _load_graph(args.file)
    q = constructions.from_graph(g)
    _write_json(core.quandle_to_dict(q), args.out, f"quandle: {q.size} points")
    return 0


def cmd_census(args) -> int:
    rows = analysis.flat_connected_census(args.max_order, node_budget=_node_budget())
    if args.json:
        print(_dump([
            {
                "order": row.order,
                "classes": row.class_count,
                "flat_connected": [
                    {"torus": list(s.torus_orders)} for s in row.survivors
                ],
            }
            for row in rows
        ]))
        return 0
    for row in rows:
        line = f"order {row.order}: {row.class_count} classes, {len(row.survivors)} flat+connected"
        tori = [
            "x".join(f"dihedral({r})" for r in s.torus_orders) for s in row.survivors
        ]
        if tori:
            line += " (" + ", ".join(tori) + ")"
        print(line)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quandles",
        description="Construct, inspect and convert finite quandles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a quandle and emit its JSON")
    p.add_argument(
        "kind",
        choices=["trivial", "dihedral", "axis", "aknn", "graph", "torus", "extension"],
    )
    p.add_argument("params", nargs="*")
    p.add_argument("--out", help="write the quandle JSON here instead of stdout")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="report the properties of a quandle file")
    p.add_argument("file", help="quandle JSON path, or - for stdin")
    p.add_argument("--props", help="comma-separated properties that must hold")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("to-graph", help="rebuild the graph behind a quandle")
    p.add_argument("file", help="quandle JSON path, or - for stdin")
    p.add_argument("--out", help="write the graph JSON here instead of stdout")
    p.add_argument("--dot", help="also write DOT text here")
    p.add_argument("--map", help="also write the point relabeling here")
    p.set_defaults(func=cmd_to_graph)

    p = sub.add_parser("from-graph", help="build the quandle of a graph file")
    p.add_argument("file", help="graph JSON path, or - for stdin")
    p.add_argument("--out", help="write the quandle JSON here instead of stdout")
    p.set_defaults(func=cmd_from_graph)

    p = sub.add_parser("census", help="enumerate small quandles and the flat connected ones")
    p.add_argument("--max-order", type=int, default=6)
    p.add_argument("--json", action="store_true", help="machine-readable table")
    p.set_defaults(func=cmd_census)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (NotCrossedError, BadComponentSizeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (InputError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
