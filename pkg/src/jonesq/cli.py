"""Command-line front end.

Diagrams are given as a path to a DSL file or as ``builtin:NAME``.  Exit
status is 0 on success, 1 when a check fails and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .catalog import builtin, builtin_names
from .checks import run_all
from .functor import EvalConfig, eval_directed, eval_undirected
from .report import build_report, orientation_label
from .skein import jones, kauffman_bracket
from .tangle import (
    DiagramError,
    Orientation,
    SlicedDiagram,
    components,
    parse_diagram,
    writhe,
)

__all__ = ["main", "build_parser", "load_diagram", "parse_orientation", "CliError"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_ORIENT_RE = re.compile(r"^c?(\d+)=([+-])$")


class CliError(Exception):
    """Bad input; reported on stderr with exit status 2."""


def load_diagram(source: str) -> SlicedDiagram:
    if source.startswith("builtin:"):
        try:
            return builtin(source[len("builtin:"):])
        except KeyError as exc:
            raise CliError(exc.args[0]) from None
    path = Path(source)
    if not path.is_file():
        raise CliError(f"{source}: no such file (use builtin:NAME for {', '.join(builtin_names())})")
    try:
        return parse_diagram(path.read_text())
    except DiagramError as exc:
        raise CliError(f"{source}: {exc}") from None


def parse_orientation(flags: Sequence[str] | None, n_components: int, required: bool) -> Orientation:
    """Turn ``cK=+|-`` flags (1-based, repeatable or comma-separated) into an Orientation."""
    items = [item for flag in flags or () for item in flag.split(",") if item]
    if not items:
        if required and n_components > 1:
            raise CliError(f"orientation required: give --orient cK=+|- for each of the {n_components} components")
        return Orientation.positive(n_components)
    signs: dict[int, int] = {}
    for item in items:
        m = _ORIENT_RE.match(item.strip())
        if not m:
            raise CliError(f"bad orientation flag {item!r}; expected cK=+ or cK=-")
        k = int(m.group(1))
        if not 1 <= k <= n_components:
            raise CliError(f"orientation names component c{k}, but the diagram has {n_components}")
        signs[k] = 1 if m.group(2) == "+" else -1
    missing = [f"c{k}" for k in range(1, n_components + 1) if k not in signs]
    if missing:
        raise CliError(f"orientation missing for {', '.join(missing)}")
    return Orientation(tuple(signs[k] for k in range(1, n_components + 1)))


def _emit(args, payload: dict, text: str) -> None:
    print(json.dumps(payload, indent=2) if args.json else text)


def _closed(args) -> tuple[SlicedDiagram, int]:
    d = load_diagram(args.diagram)
    if not d.is_closed:
        raise CliError(f"{args.diagram}: diagram is not closed (boundary widths {d.bottom_width} and {d.top_width})")
    return d, components(d).count


def cmd_bracket(args) -> int:
    d, _ = _closed(args)
    k = kauffman_bracket(d)
    _emit(args, {"diagram": args.diagram, "bracket": str(k)}, str(k))
    return EXIT_OK


def cmd_jones(args) -> int:
    d, n = _closed(args)
    o = parse_orientation(args.orient, n, required=True)
    j = jones(d, o)
    _emit(args, {"diagram": args.diagram, "orientation": orientation_label(o), "jones": str(j)}, str(j))
    return EXIT_OK


def cmd_qeval(args) -> int:
    d, n = _closed(args)
    flavor = "standard" if args.ribbon == "s" else "half_twist"
    payload = {"diagram": args.diagram, "mode": "directed" if args.directed else "undirected", "ribbon": flavor}
    if args.directed:
        o = parse_orientation(args.orient, n, required=flavor == "standard")
        value = eval_directed(d, o, EvalConfig("directed", flavor))
        payload["orientation"] = orientation_label(o)
    else:
        if flavor == "standard":
            raise CliError("undirected evaluation uses the half-twist ribbon only; pass --ribbon t or --directed")
        value = eval_undirected(d)
    payload["value"] = str(value)
    _emit(args, payload, str(value))
    return EXIT_OK


def cmd_writhe(args) -> int:
    d, n = _closed(args)
    o = parse_orientation(args.orient, n, required=True)
    w = writhe(d, o)
    _emit(args, {"diagram": args.diagram, "orientation": orientation_label(o), "writhe": w}, str(w))
    return EXIT_OK


def cmd_components(args) -> int:
    d, n = _closed(args)
    _emit(args, {"diagram": args.diagram, "components": n}, str(n))
    return EXIT_OK


def cmd_report(args) -> int:
    d, n = _closed(args)
    o = parse_orientation(args.orient, n, required=False) if args.orient else None
    rep = build_report(d, args.diagram, o)
    print(rep.to_json() if args.json else rep.to_text())
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_check(args) -> int:
    results = run_all(seed=args.seed, cases=args.cases)
    failed = [r for r in results if not r.passed]
    if args.json:
        print(json.dumps({
            "seed": args.seed,
            "cases": args.cases,
            "passed": not failed,
            "results": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
        }, indent=2))
    else:
        for r in results:
            tail = f"  ({r.detail})" if r.detail else ""
            print(f"[{'PASS' if r.passed else 'FAIL'}] {r.name}{tail}")
        print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    for r in failed:
        print(f"failed: {r.name}", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_builtins(args) -> int:
    names = builtin_names()
    _emit(args, {"builtins": names}, "\n".join(names))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jonesq", description="Exact Kauffman bracket, Jones polynomial and quantum-group link invariants.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, diagram=True, orient=False):
        p = sub.add_parser(name, help=help_text)
        if diagram:
            p.add_argument("diagram", help="DSL file path or builtin:NAME")
        if orient:
            p.add_argument("--orient", action="append", metavar="cK=+|-", help="direction of component K (1-based); repeatable")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=fn)
        return p

    add("bracket", cmd_bracket, "Kauffman bracket by state sum")
    add("jones", cmd_jones, "writhe-normalised Jones polynomial", orient=True)
    q = add("qeval", cmd_qeval, "evaluate the quantum-group functor", orient=True)
    q.add_argument("--ribbon", choices=("s", "t"), default="t", help="standard (s) or half-twist (t) ribbon element")
    mode = q.add_mutually_exclusive_group()
    mode.add_argument("--directed", dest="directed", action="store_true", help="directed functor (V and V*)")
    mode.add_argument("--undirected", dest="directed", action="store_false", help="undirected functor via f (default)")
    add("writhe", cmd_writhe, "writhe of a directed diagram", orient=True)
    add("components", cmd_components, "number of link components")
    add("report", cmd_report, "all invariants with cross-checks", orient=True)
    c = add("check", cmd_check, "run the verification suites", diagram=False)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--cases", type=int, default=50, help="random diagrams in the property suite")
    add("builtins", cmd_builtins, "list builtin diagram names", diagram=False)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DiagramError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
