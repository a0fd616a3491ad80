"""Command-line front end.

    labeled-pants verify <name>... [--json PATH] [--max-depth K]
    labeled-pants replay <model> <state> <script> [--json PATH]
    labeled-pants census graphs <g> <n> [--unmarked] [--bound K] [--json PATH] [--dot PATH]
    labeled-pants census labeled-orbits <g> <n> [--bound K] [--json PATH] [--dot PATH]
    labeled-pants census hexagon <strict|labeled> [--json PATH]

State and script arguments are file paths, or names of files shipped in
``labeled_pants.scripts`` (``fig7`` ... ``fig12``, ``hexagon.state`` ...).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import hexagon_orbits as hx
from . import pants_graph as pg
from . import scripts
from .dsl import IllegalMove, ScriptError, parse_script
from .replay import MODELS, dump_state, load_state, replay
from .verify import DEFAULT_TIME_LIMIT, REGISTRY, verify

SCHEMA = 1


def _read(arg: str) -> str:
    if os.path.exists(arg):
        with open(arg) as fh:
            return fh.read()
    try:
        return scripts.read(arg)
    except FileNotFoundError:
        raise SystemExit(f"error: no such file or shipped script: {arg}")


def _emit_json(payload: dict, path: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _write(path: str, text: str) -> None:
    with open(path, "w") as fh:
        fh.write(text)


def cmd_verify(args) -> int:
    names = sorted(REGISTRY) if args.names == ["all"] else args.names
    unknown = [n for n in names if n not in REGISTRY]
    if unknown:
        print(f"error: unknown verification {', '.join(unknown)}; "
              f"choose from {', '.join(sorted(REGISTRY))}", file=sys.stderr)
        return 2
    reports = []
    for name in names:
        kwargs = {"max_depth": args.max_depth} if name == "pentagon" and args.max_depth else {}
        if name == "labeled-graph-connectivity" and args.bound:
            kwargs = {"bound": args.bound}
        r = verify(name, time_limit=args.time_limit, **kwargs)
        reports.append(r)
        out = sys.stderr if args.json == "-" else sys.stdout
        print(f"{r.status.upper():4} {name}  ({r.wall_time:.3f}s)", file=out)
    if args.json:
        _emit_json({"schema": SCHEMA, "reports": [r.payload() for r in reports]}, args.json)
    return 0 if all(r.passed for r in reports) else 1


def cmd_replay(args) -> int:
    try:
        moves = parse_script(_read(args.script))
        state = load_state(args.model, _read(args.state))
        start = time.perf_counter()
        final = replay(args.model, state, moves)
    except ScriptError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except IllegalMove as exc:
        print(f"illegal move: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"bad state: {exc}", file=sys.stderr)
        return 2
    print(f"wall time {time.perf_counter() - start:.3f}s", file=sys.stderr)
    text = dump_state(args.model, final)
    if args.json:
        _emit_json({"schema": SCHEMA, "model": args.model, "moves": len(moves),
                    "final_state": text}, args.json)
    else:
        sys.stdout.write(text)
    return 0


def cmd_census(args) -> int:
    try:
        if args.kind == "hexagon":
            if len(args.params) != 1 or args.params[0] not in hx.MODES:
                print("usage: census hexagon <strict|labeled>", file=sys.stderr)
                return 2
            census = hx.enumerate_orbits(args.params[0])
            payload = json.loads(census.to_json())
            summary = (f"{census.orbit_count} orbits over {census.labelings} labelings, "
                       f"sizes {sorted({o.size for o in census.orbits})}")
        else:
            if len(args.params) != 2:
                print(f"usage: census {args.kind} <genus> <holes>", file=sys.stderr)
                return 2
            sig = pg.SurfaceSig(*map(int, args.params))
            payload, graphs, summary = (_graph_census(sig, args) if args.kind == "graphs"
                                        else _orbit_census(sig, args))
            if args.dot:
                _write(args.dot, "".join(g.to_dot(f"g{i}") for i, g in enumerate(graphs)))
    except pg.BoundExceeded as exc:
        print(f"refused: {exc} (raise it with --bound)", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(summary, file=sys.stderr if args.json == "-" else sys.stdout)
    if args.json:
        _emit_json(payload, args.json)
    return 0


def _graph_census(sig, args):
    marked = not args.unmarked
    bound = args.bound or pg.DEFAULT_BOUND
    certs = sorted(pg.enumerate_graph_types(sig, marked=marked, bound=bound))
    graphs = [pg.graph_from_certificate(c) for c in certs]
    summary = f"{len(certs)} {'marked' if marked else 'unmarked'} graph types"
    payload = {"schema": SCHEMA, "kind": "graphs", "genus": sig.genus, "holes": sig.holes,
               "marked": marked, "type_count": len(certs),
               "types": [g.to_text() for g in graphs]}
    return payload, graphs, summary


def _orbit_census(sig, args):
    census = pg.labeled_orbits(sig, bound=args.bound or pg.DEFAULT_BOUND)
    summary = f"{census.count} orbit(s) over {census.states} labeled states"
    payload = {"schema": SCHEMA, "kind": "labeled-orbits", "genus": sig.genus,
               "holes": sig.holes, "states": census.states, "orbit_count": census.count,
               "orbits": [{"size": s, "representative": g.to_text()}
                          for s, g in zip(census.sizes, census.representatives)]}
    return payload, census.representatives, summary


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="labeled-pants",
        description="Flip-twist moves on labeled (double) pants decompositions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run named verifications")
    p.add_argument("names", nargs="+", metavar="name",
                   help=f"one of {', '.join(sorted(REGISTRY))}, or 'all'")
    p.add_argument("--json", metavar="PATH", help="write reports as JSON ('-' for stdout)")
    p.add_argument("--max-depth", type=int, default=None)
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--time-limit", type=float, default=DEFAULT_TIME_LIMIT)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("replay", help="apply a move script to a state")
    p.add_argument("model", choices=MODELS)
    p.add_argument("state")
    p.add_argument("script")
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("census", help="enumerate graph types or orbits")
    p.add_argument("kind", choices=("graphs", "labeled-orbits", "hexagon"))
    p.add_argument("params", nargs="*")
    p.add_argument("--json", metavar="PATH")
    p.add_argument("--dot", metavar="PATH")
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--unmarked", action="store_true",
                   help="treat boundary holes as indistinguishable")
    p.set_defaults(func=cmd_census)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
