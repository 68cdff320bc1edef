"""Command-line front end.

JSON (or .dg/.ug text for the generators) goes to stdout; human-readable
summaries go to stderr.  Exit codes: 0 success or pass, 1 fail, missing
witness, or counterexample, 2 usage or parse error, 3 resource guard.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .coloring import (
    chromatic_number,
    coloring_from_line_coloring,
    dichromatic_number,
    extract_graph_coloring,
    layered_dicoloring,
    LayeredInstance,
    qt_color,
)
from .constructions import (
    build_triple_digraph,
    c3,
    compose_arrow,
    delta,
    disjoint_union,
    grid_digraph,
    line_graph,
    separated_grid_digraph,
    substitute,
    tt,
)
from .core import Dicoloring, Digraph, GuardExceeded, OrderedGraph
from .detection import (
    fas_disjoint_paths,
    find_induced,
    flat_check,
    is_complete_multipartite,
    is_quasi_transitive,
    non_interlaced_check,
)
from .hero import derivation_sexpr, hero_in_multipartite, hero_in_tournaments
from .io import ParseError, parse_digraph, parse_undirected, serialize_digraph
from .verify import CHECKS, run_check

_FAMILY_RE = re.compile(r"^tt(\d+)$")


def _emit(payload) -> None:
    print(json.dumps(payload))


def _note(message: str) -> None:
    print(message, file=sys.stderr)


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_digraph(path: str) -> Digraph:
    G, _ = parse_digraph(_read(path))
    return G


def _load_digraph_with_parts(path: str):
    G, structure = parse_digraph(_read(path))
    if structure is None:
        raise ValueError(f"{path} has no parts block")
    return G, structure


def _operand(token: str) -> Digraph:
    """A generator operand: 'k1', 'c3', 'tt<k>', or a .dg file path."""
    if token == "k1":
        return Digraph(1)
    if token == "c3":
        return c3()
    m = _FAMILY_RE.match(token)
    if m:
        return tt(int(m.group(1)))
    return _load_digraph(token)


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _cmd_gen(args) -> int:
    family = args.family
    params = args.params
    structure = None
    if family == "tt":
        G = tt(int(params[0]))
    elif family == "c3":
        G = c3()
    elif family in ("delta", "arrow", "union"):
        a, b = _operand(params[0]), _operand(params[1])
        G = {"delta": delta, "arrow": compose_arrow, "union": disjoint_union}[family](a, b)
    elif family == "triples":
        G, _, structure = build_triple_digraph(int(params[0]))
    elif family == "grid":
        ordered = OrderedGraph(parse_undirected(_read(params[0])))
        G, layout = grid_digraph(ordered)
        structure = layout.structure
    elif family == "gridsep":
        ordered = OrderedGraph(parse_undirected(_read(params[0])))
        R, R_structure = _load_digraph_with_parts(params[1])
        G, layout = separated_grid_digraph(ordered, R, R_structure)
        structure = layout.structure
    elif family == "substitute":
        outer = _operand(params[0])
        inner = _operand(params[2])
        G = substitute(outer, int(params[1]), inner)
    else:
        raise ValueError(f"unknown family {family!r}")
    _write_output(serialize_digraph(G, structure), args.output)
    _note(f"generated {family}: {G.n} vertices, {len(G.arcs)} arcs")
    return 0


def _coloring_payload(col) -> dict:
    return {"k": col.k, "colors": list(col.colors)}


def _cmd_chi(args) -> int:
    G = _load_digraph(args.file)
    k, col = dichromatic_number(G)
    _emit(_coloring_payload(col))
    _note(f"dichromatic number {k}")
    return 0


def _cmd_chrom(args) -> int:
    H = parse_undirected(_read(args.file))
    k, col = chromatic_number(H)
    _emit(_coloring_payload(col))
    _note(f"chromatic number {k}")
    return 0


def _cmd_find(args) -> int:
    pattern = _load_digraph(args.pattern)
    host = _load_digraph(args.host)
    witness = find_induced(pattern, host)
    _emit({"witness": list(witness) if witness is not None else None})
    if witness is None:
        _note("no induced copy")
        return 1
    _note(f"induced copy at {list(witness)}")
    return 0


def _cmd_check(args) -> int:
    kind = args.kind
    if kind == "multipartite":
        G = _load_digraph(args.file)
        structure = is_complete_multipartite(G)
        parts = [sorted(p) for p in structure.parts] if structure else None
        _emit({"multipartite": structure is not None, "parts": parts})
        return 0 if structure is not None else 1
    if kind == "qt":
        G = _load_digraph(args.file)
        ok = is_quasi_transitive(G)
        _emit({"quasi_transitive": ok})
        return 0 if ok else 1
    if kind == "flat":
        G, structure = _load_digraph_with_parts(args.file)
        ok = flat_check(G, structure)
        _emit({"flat": ok})
        return 0 if ok else 1
    if kind == "non-interlaced":
        H = OrderedGraph(parse_undirected(_read(args.file)))
        violation = non_interlaced_check(H)
        _emit({
            "non_interlaced": violation is None,
            "violation": list(violation) if violation else None,
        })
        return 0 if violation is None else 1
    if kind == "fas-paths":
        G = _load_digraph(args.file)
        fas = fas_disjoint_paths(G)
        _emit({"feedback_arc_set": sorted(map(list, fas)) if fas is not None else None})
        return 0 if fas is not None else 1
    raise ValueError(f"unknown check kind {kind!r}")


def _cmd_hero(args) -> int:
    G = _load_digraph(args.file)
    if args.kind == "tournament":
        derivation = hero_in_tournaments(G)
        _emit({
            "hero": derivation is not None,
            "derivation": derivation_sexpr(derivation) if derivation else None,
        })
        return 0 if derivation is not None else 1
    verdict = hero_in_multipartite(G, assume_delta22_not_hero=args.assume_delta122_not_hero)
    _emit({
        "status": verdict.status,
        "derivation": derivation_sexpr(verdict.derivation) if verdict.derivation else None,
    })
    return 0 if verdict.status != "no" else 1


def _cmd_color(args) -> int:
    mode = args.mode
    if mode == "exact":
        return _cmd_chi(argparse.Namespace(file=args.params[0]))
    if mode == "line":
        G = _load_digraph(args.params[0])
        _, line_col = chromatic_number(line_graph(G))
        coloring, sets = coloring_from_line_coloring(G, line_col)
        _emit({
            "k": coloring.k,
            "colors": list(coloring.colors),
            "sets": [sorted(s) for s in sets],
        })
        return 0
    if mode == "layered":
        G, structure = _load_digraph_with_parts(args.params[0])
        inst = LayeredInstance(G, structure.parts, args.d)
        col = layered_dicoloring(inst)
        _emit(_coloring_payload(col))
        return 0
    if mode == "qt":
        G = _load_digraph(args.params[0])
        hero = _operand(args.hero) if args.hero else None
        col = qt_color(G, hero=hero)
        _emit(_coloring_payload(col))
        return 0
    if mode == "extract":
        ordered = OrderedGraph(parse_undirected(_read(args.params[0])))
        R, R_structure = _load_digraph_with_parts(args.params[1])
        r, _ = dichromatic_number(R)
        dg, layout = separated_grid_digraph(ordered, R, R_structure)
        k, dc = dichromatic_number(dg)
        if k > r:
            raise ValueError(
                f"separated grid needs {k} colors but the separator bound is {r}"
            )
        if dc.k < r:
            dc = Dicoloring(dc.colors, r)
        coloring, values = extract_graph_coloring(ordered, dg, dc, layout)
        _emit({
            "k": coloring.k,
            "colors": list(coloring.colors),
            "values": [sorted(sorted(row) for row in v) for v in values],
        })
        return 0
    raise ValueError(f"unknown color mode {mode!r}")


def _cmd_verify(args) -> int:
    names = sorted(CHECKS) if args.check == "all" else [args.check]
    overrides = {}
    for item in args.set or []:
        if "=" not in item:
            raise ValueError(f"--set expects key=value, got {item!r}")
        key, _, value = item.partition("=")
        overrides[key.replace("-", "_")] = int(value)
    if args.seed is not None:
        overrides["seed"] = args.seed
    failed = False
    for name in names:
        fn_overrides = overrides
        if args.check == "all":
            defaults = CHECKS[name][1]
            fn_overrides = {k: v for k, v in overrides.items() if k in defaults}
        report = run_check(name, fn_overrides)
        print(report.to_json(include_timing=args.timing))
        status = "PASS" if report.passed else "FAIL"
        _note(f"[{status}] {name} ({report.seconds:.2f}s)")
        failed = failed or not report.passed
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="herograph",
        description="digraph constructions, exact dicoloring, and hero recognition",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a digraph family")
    p.add_argument("family", choices=[
        "tt", "c3", "delta", "arrow", "union", "triples", "grid", "gridsep", "substitute",
    ])
    p.add_argument("params", nargs="*")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("chi", help="exact dichromatic number")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_chi)

    p = sub.add_parser("chrom", help="exact chromatic number of a .ug file")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_chrom)

    p = sub.add_parser("find", help="induced-subgraph search")
    p.add_argument("pattern")
    p.add_argument("host")
    p.set_defaults(fn=_cmd_find)

    p = sub.add_parser("check", help="class membership and structure checks")
    p.add_argument("kind", choices=["multipartite", "qt", "flat", "non-interlaced", "fas-paths"])
    p.add_argument("file")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("hero", help="hero grammar recognizers")
    p.add_argument("kind", choices=["tournament", "multipartite"])
    p.add_argument("file")
    p.add_argument("--assume-delta122-not-hero", action="store_true")
    p.set_defaults(fn=_cmd_hero)

    p = sub.add_parser("color", help="constructive coloring procedures")
    p.add_argument("mode", choices=["exact", "line", "layered", "qt", "extract"])
    p.add_argument("params", nargs="*")
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--hero")
    p.set_defaults(fn=_cmd_color)

    p = sub.add_parser("verify", help="run a verification check")
    p.add_argument("check", help="check name or 'all'")
    p.add_argument("--seed", type=int)
    p.add_argument("--set", action="append", metavar="KEY=VALUE")
    p.add_argument("--timing", action="store_true")
    p.set_defaults(fn=_cmd_verify)

    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.fn(args)
    except GuardExceeded as exc:
        _note(f"resource guard: {exc}")
        return 3
    except ParseError as exc:
        _note(f"parse error: {exc}")
        return 2
    except (ValueError, KeyError, IndexError, FileNotFoundError) as exc:
        _note(f"error: {exc}")
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
