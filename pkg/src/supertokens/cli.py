"""Command-line front end: ``supertokens {gen,dist,dim,verify,export} ...``.

A graph is named by a family and its parameters::

    kn N | cn N | pn N | gdc D C | gdc+ D C | supertoken BASE --k K | token BASE --k K

where BASE is one of the plain families, or by a path to a graph file.
Exit status: 0 success, 1 usage or parse error, 2 size cap exceeded,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from math import comb
from typing import Sequence

from . import alphabet as ab
from .graphs import (
    DEFAULT_MAX_VERTICES,
    Graph,
    GraphError,
    SizeCapError,
    bfs_distances,
    bfs_parents,
    builtin,
    distance_matrix,
    format_graph,
    read_graph,
)
from .resolving import DEFAULT_SEARCH_VERTICES, SearchExhausted, metric_dimension
from .supertoken import (
    apply_moves,
    build_supertoken,
    build_token_graph,
    config_count,
    format_config,
    parse_config,
    supertoken_distance,
)

EXIT_OK, EXIT_USAGE, EXIT_CAP, EXIT_VERIFY = 0, 1, 2, 3

PLAIN = {"kn": ("complete", 1), "cn": ("cycle", 1), "pn": ("path", 1), "gdc": (None, 2), "gdc+": (None, 2)}
LIFTED = ("supertoken", "token")


class UsageError(Exception):
    pass


@dataclass
class GraphSpec:
    family: str
    params: tuple[int, ...] = ()
    base: "GraphSpec | None" = None
    k: int | None = None
    path: str | None = None

    def describe(self) -> str:
        if self.path:
            return self.path
        if self.base is not None:
            return f"{self.family} {self.base.describe()} --k {self.k}"
        return " ".join([self.family, *map(str, self.params)])

    def order(self) -> int:
        """Vertex count, computed without building the graph."""
        if self.family == "supertoken":
            return config_count(self.base.order(), self.k)
        if self.family == "token":
            return comb(self.base.order(), self.k)
        if self.family in ("gdc", "gdc+"):
            d, c = self.params
            return d**c + (c if self.family == "gdc+" else 0)
        if self.family == "file":
            return self.build()[0].n
        return self.params[0]

    def build(self, max_vertices: int = DEFAULT_MAX_VERTICES) -> tuple[Graph, list[str]]:
        if self.family == "file":
            g = read_graph(self.path)
            return g, [str(v) for v in range(1, g.n + 1)]
        if self.family in ("kn", "cn", "pn"):
            if self.params[0] > max_vertices:
                raise SizeCapError(f"{self.params[0]} vertices exceeds the cap {max_vertices}")
            g = builtin(PLAIN[self.family][0], self.params[0])
            return g, [str(v) for v in range(1, g.n + 1)]
        if self.family == "gdc":
            d, c = self.params
            return ab.build_gdc(d, c, max_vertices), ab.gdc_labels(d, c)
        if self.family == "gdc+":
            d, c = self.params
            return ab.build_gdc_plus(d, c, max_vertices), ab.gdc_plus_labels(d, c)
        base, _ = self.base.build(max_vertices)
        if self.family == "supertoken":
            st = build_supertoken(base, self.k, max_vertices)
            return st.graph, st.labels()
        tg = build_token_graph(base, self.k, max_vertices)
        return tg.graph, tg.labels()


def parse_spec(tokens: Sequence[str], k: int | None, lifted_ok: bool = True) -> tuple[GraphSpec, list[str]]:
    """Consume a graph spec from the front of ``tokens``; return it and the rest."""
    if not tokens:
        raise UsageError("missing graph spec")
    head, rest = tokens[0], list(tokens[1:])
    if head in LIFTED:
        if not lifted_ok:
            raise UsageError(f"{head} cannot be nested")
        if k is None:
            raise UsageError(f"{head} needs --k")
        base, rest = parse_spec(rest, None, lifted_ok=False)
        return GraphSpec(head, base=base, k=k), rest
    if head in PLAIN:
        count = PLAIN[head][1]
        if len(rest) < count:
            raise UsageError(f"{head} needs {count} integer parameter(s)")
        try:
            params = tuple(int(t) for t in rest[:count])
        except ValueError:
            raise UsageError(f"{head} parameters must be integers: {rest[:count]}") from None
        _check_params(head, params)
        return GraphSpec(head, params), rest[count:]
    if head == "file":
        if not rest:
            raise UsageError("file needs a path")
        return GraphSpec("file", path=rest[0]), rest[1:]
    if os.path.exists(head):
        return GraphSpec("file", path=head), rest
    raise UsageError(f"unknown graph family or missing file {head!r}")


def _check_params(family: str, params: tuple[int, ...]) -> None:
    if family == "cn" and params[0] < 3:
        raise UsageError("cn needs N >= 3")
    if family in ("kn", "pn") and params[0] < 1:
        raise UsageError(f"{family} needs N >= 1")
    if family in ("gdc", "gdc+") and (params[0] < 2 or params[1] < 1):
        raise UsageError(f"{family} needs D >= 2 and C >= 1")


def _resolve_vertex(token: str, labels: list[str]) -> int:
    if token in labels:
        return labels.index(token) + 1
    try:
        v = int(token)
    except ValueError:
        raise UsageError(f"unknown vertex {token!r}") from None
    if not 1 <= v <= len(labels):
        raise UsageError(f"vertex {v} outside 1..{len(labels)}")
    return v


def _labels_text(labels: list[str]) -> str:
    return "".join(f"{i} {lab}\n" for i, lab in enumerate(labels, start=1))


# -- commands -----------------------------------------------------------------


def cmd_gen(args) -> int:
    spec, extra = parse_spec(args.spec, args.k)
    if extra:
        raise UsageError(f"unexpected arguments: {' '.join(extra)}")
    g, labels = spec.build(args.max_vertices)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(format_graph(g))
        with open(args.out + ".labels", "w") as fh:
            fh.write(_labels_text(labels))
    dmat = distance_matrix(g)
    eccs = [max(row) for row in dmat]
    print(f"graph {spec.describe()}")
    print(f"order {g.n}")
    print(f"size {g.m}")
    print(f"diameter {max(eccs)}")
    print(f"radius {min(eccs)}")
    return EXIT_OK


def cmd_dist(args) -> int:
    spec, extra = parse_spec(args.spec, args.k)
    if len(extra) != 2:
        raise UsageError("dist needs exactly two vertices or configurations after the graph spec")
    if spec.family == "supertoken":
        base, _ = spec.base.build(args.max_vertices)
        try:
            x = parse_config(extra[0], base.n, spec.k)
            y = parse_config(extra[1], base.n, spec.k)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        dist, moves = supertoken_distance(base, x, y)
        print(dist)
        if args.witness:
            cur = x
            for a, b in moves:
                cur = apply_moves(base, cur, [(a, b)])
                print(f"{a}->{b} {format_config(cur)}")
        return EXIT_OK
    g, labels = spec.build(args.max_vertices)
    u, v = (_resolve_vertex(t, labels) for t in extra)
    print(bfs_distances(g, u)[v - 1])
    if args.witness:
        parent = bfs_parents(g, v)
        while u != v:
            print(f"{labels[u - 1]}->{labels[parent[u - 1] - 1]}")
            u = parent[u - 1]
    return EXIT_OK


def cmd_dim(args) -> int:
    spec, extra = parse_spec(args.spec, args.k)
    if extra:
        raise UsageError(f"unexpected arguments: {' '.join(extra)}")
    order = spec.order()
    if order > args.max_vertices:
        print(f"order {order} exceeds the search cap {args.max_vertices}")
        _print_bounds(spec, order)
        return EXIT_CAP
    g, labels = spec.build()
    try:
        dim, witness = metric_dimension(g, args.max_size, max_vertices=args.max_vertices)
    except SearchExhausted as exc:
        print(f"dimension >= {exc.lower_bound} (no resolving set of size <= {exc.max_size})")
        return EXIT_CAP
    print(f"dimension {dim}")
    print("witness " + " ".join(labels[v - 1] for v in witness))
    return EXIT_OK


def _print_bounds(spec: GraphSpec, order: int) -> None:
    upper = order - 1
    if spec.family == "supertoken" and spec.base.family == "kn":
        upper = min(upper, spec.base.params[0] - 1)
    print(f"upper bound {upper}")
    if spec.family == "supertoken" and spec.base.family in ("kn", "cn", "pn"):
        base, _ = spec.base.build()
        diam = spec.k * max(max(r) for r in distance_matrix(base))
        print(f"lower bound {ab.lower_bound_dim(order, diam)}")


def cmd_export(args) -> int:
    spec, extra = parse_spec(args.spec, args.k)
    if extra:
        raise UsageError(f"unexpected arguments: {' '.join(extra)}")
    g, labels = spec.build(args.max_vertices)
    if args.format == "edges":
        text = format_graph(g)
    elif args.format == "dot":
        lines = ["graph G {"]
        lines.extend(f'  {v} [label="{lab}"];' for v, lab in enumerate(labels, start=1))
        lines.extend(f"  {i} -- {j};" for i, j in g.sorted_edges())
        lines.append("}")
        text = "\n".join(lines) + "\n"
    else:
        payload = {"n": g.n, "edges": [list(e) for e in g.sorted_edges()], "labels": labels}
        if args.with_dmat:
            payload["distance_matrix"] = distance_matrix(g)
        text = json.dumps(payload) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        if args.format == "edges":
            with open(args.out + ".labels", "w") as fh:
                fh.write(_labels_text(labels))
        print(f"wrote {args.out} ({g.n} vertices, {g.m} edges)")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import FAIL, run_suite

    try:
        records = run_suite(args.suite)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for r in records:
        print(r.to_json() if args.json else r.line())
    failed = sum(r.verdict == FAIL for r in records)
    if not args.json:
        counts = {v: sum(r.verdict == v for r in records) for v in ("PASS", "WARN", "FAIL")}
        print(" ".join(f"{v.lower()} {n}" for v, n in counts.items()))
    return EXIT_VERIFY if failed else EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


COMMANDS = ("gen", "dist", "dim", "export", "verify")


def build_parsers() -> tuple[argparse.ArgumentParser, dict[str, argparse.ArgumentParser]]:
    """Top-level parser plus one parser per command.

    Commands are parsed separately with ``parse_intermixed_args`` so that
    positionals may follow options, as in ``dist supertoken cn 6 --k 9 x y``.
    """
    top = _Parser(prog="supertokens", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    top.add_argument("command", choices=COMMANDS)
    top.add_argument("args", nargs=argparse.REMAINDER)
    subs = {}

    def graph_cmd(name, help_text, func, cap_default=DEFAULT_MAX_VERTICES):
        p = _Parser(prog=f"supertokens {name}", description=help_text)
        p.add_argument("spec", nargs="+", help="graph spec, then command arguments")
        p.add_argument("--k", type=int, help="token count for supertoken/token graphs")
        p.add_argument("--max-vertices", type=int, default=cap_default)
        p.set_defaults(func=func)
        subs[name] = p
        return p

    p = graph_cmd("gen", "build a graph and print order, size, diameter, radius", cmd_gen)
    p.add_argument("--out", help="write the graph file here, and labels to OUT.labels")

    p = graph_cmd("dist", "distance between two vertices or configurations", cmd_dist)
    p.add_argument("--witness", action="store_true", help="print a shortest path as moves")

    p = graph_cmd("dim", "exhaustive metric dimension", cmd_dim, cap_default=DEFAULT_SEARCH_VERTICES)
    p.add_argument("--max-size", type=int, help="largest resolving-set size to try")

    p = graph_cmd("export", "write a graph as edges, dot or json", cmd_export)
    p.add_argument("--format", choices=("edges", "dot", "json"), default="edges")
    p.add_argument("--with-dmat", action="store_true", help="embed the distance matrix (json)")
    p.add_argument("--out")

    p = _Parser(prog="supertokens verify", description="run a verification suite")
    p.add_argument("suite", choices=("theorem1", "gdc", "complete", "general", "dimbounds", "feasibility", "all"))
    p.add_argument("--json", action="store_true", help="one JSON record per check")
    p.set_defaults(func=cmd_verify)
    subs["verify"] = p
    return top, subs


def main(argv: Sequence[str] | None = None) -> int:
    top, subs = build_parsers()
    head = top.parse_args(argv)
    args = subs[head.command].parse_intermixed_args(head.args)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SizeCapError as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
