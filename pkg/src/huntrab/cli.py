"""Command-line front end.

Every invocation produces one report: a flat human-readable rendering by
default, or a single JSON document with --json.  Both renderings carry the
same values.  Exit codes: 0 success, 2 usage or parse error, 3 search budget
exceeded, 4 verification found an escape.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from . import cube as cube_mod
from . import dynamics, graphs, nesting, solver
from .errors import (
    BudgetExceededError,
    CapacityError,
    FormatError,
    HomomorphismError,
    InapplicableError,
    InvalidOrderError,
    InvalidParameterError,
    InvalidStrategyError,
    NonTerminatingError,
)

SCHEMA_VERSION = 1

USAGE_ERRORS = (InvalidParameterError, CapacityError, FormatError, HomomorphismError,
                InapplicableError, InvalidOrderError, InvalidStrategyError,
                NonTerminatingError)

FAMILIES = {
    "path": (1, graphs.path_graph),
    "cycle": (1, graphs.cycle_graph),
    "grid": (2, graphs.grid_graph),
    "hypercube": (1, graphs.hypercube_graph),
    "star": (1, graphs.star_graph),
}


def _digest(path: str) -> dict:
    with open(path, "rb") as fh:
        return {"path": path, "sha256": hashlib.sha256(fh.read()).hexdigest()}


def _render_human(report: dict) -> str:
    lines = [f"schema_version: {report['schema_version']}",
             f"command: {report['command']}"]
    for name, info in sorted(report["inputs"].items()):
        if isinstance(info, dict):
            detail = " ".join(f"{k}={v}" for k, v in sorted(info.items()))
            lines.append(f"input {name}: {detail}")
        else:
            lines.append(f"input {name}: {info}")
    for key, value in report["results"].items():
        lines.append(f"{key}: {value}")
    for warning in report["warnings"]:
        lines.append(f"warning: {warning}")
    lines.append(f"timing_seconds: {report['timing_seconds']}")
    return "\n".join(lines) + "\n"


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(_render_human(report), end="")


def _load_graph(path: str) -> graphs.Graph:
    return graphs.read_graph(path)


def _looks_like_hypercube(g: graphs.Graph) -> int | None:
    """Dimension of g if its labels are exactly the subset-coded bit strings."""
    if g.labels is None or g.n == 0:
        return None
    n = g.n.bit_length() - 1
    if g.n != 1 << n:
        return None
    for v in range(g.n):
        if g.labels[v] != "".join("1" if v >> j & 1 else "0" for j in range(n)):
            return None
    for v in range(g.n):
        expected = graphs.mask_of(v ^ (1 << b) for b in range(n))
        if g.adj[v] != expected:
            return None
    return n


# ---------------------------------------------------------------------------
# Commands


def _cmd_gen(args) -> tuple[dict, int]:
    arity, builder = FAMILIES[args.family]
    if len(args.params) != arity:
        raise InvalidParameterError(
            f"{args.family} takes {arity} parameter(s), got {len(args.params)}")
    g = builder(*args.params)
    text = graphs.format_graph(g)
    if args.out is None:
        sys.stdout.write(text)
        return {}, -1  # the graph text is the whole output
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(text)
    results = {"family": args.family, "params": args.params,
               "vertices": g.n, "edges": g.edge_count, "out": args.out}
    return {"inputs": {}, "results": results, "warnings": []}, 0


def _cmd_solve(args) -> tuple[dict, int]:
    g = _load_graph(args.graph)
    variant = dynamics.DEAF if args.deaf else dynamics.STANDARD
    result = solver.hunter_number(g, variant, args.budget)
    outcome = dynamics.verify(g, result.witness)
    assert isinstance(outcome, dynamics.Caught), "solver witness must verify"
    results = {
        "hunter_number": result.hunter_number,
        "variant": variant,
        "lower_bound_used": result.lower_bound_used,
        "explored_states": result.explored_states,
        "witness_steps": len(result.witness),
        "witness_caught_at": outcome.step,
        "witness": [graphs.bits(shot) for shot in result.witness.shots],
    }
    if args.strategy_out:
        dynamics.write_strategy(result.witness, args.strategy_out)
        results["strategy_out"] = args.strategy_out
    return {"inputs": {"graph": _digest(args.graph)}, "results": results, "warnings": []}, 0


def _cmd_bounds(args) -> tuple[dict, int]:
    g = _load_graph(args.graph)
    mode = "closed" if args.deaf else "open"
    results = {
        "mode": mode,
        "union_bound": solver.lower_bound_union(g, mode, args.enum_budget),
        "degeneracy_bound": solver.lower_bound_degeneracy(g),
    }
    dim = _looks_like_hypercube(g)
    if dim is not None and dim >= 1 and not args.deaf:
        weight_map = [v.bit_count() for v in range(g.n)]
        results["hypercube_upper"] = graphs.homomorphism_bound(
            g, graphs.path_graph(dim + 1), weight_map, 1)
    return {"inputs": {"graph": _digest(args.graph)}, "results": results, "warnings": []}, 0


def _resolve_order(args, g: graphs.Graph) -> nesting.NestOrder:
    if args.order in (None, "weightlex"):
        if args.order is None and args.dims:
            return nesting.grid_nest_order(*args.dims)
        return (nesting.weightlex_full_order(g) if args.deaf
                else nesting.weightlex_nest_order(g))
    if args.order == "grid":
        if not args.dims:
            raise InvalidParameterError("--order grid requires --dims M N")
        return nesting.grid_nest_order(*args.dims)
    return nesting.read_nest_order(args.order)


def _cmd_strategy(args) -> tuple[dict, int]:
    g = _load_graph(args.graph)
    variant = dynamics.DEAF if args.deaf else dynamics.STANDARD
    order = _resolve_order(args, g)
    m = args.hunters
    if m is None:
        m = nesting.hunter_number_via_nesting(g, order)
    strategy = nesting.nest_strategy(g, order, m, variant)
    results = {
        "variant": variant,
        "hunters": m,
        "steps": len(strategy),
        "shots": nesting.shot_vertex_lists(strategy, order),
    }
    if g.labels is not None:
        results["shot_labels"] = nesting.shot_labels(g, strategy, order)
    if args.extend_parity:
        strategy = dynamics.extend_parity(g, strategy)
        results["extended_steps"] = len(strategy)
    start = "any" if (args.deaf or args.extend_parity) else None
    if start is None:
        parts = graphs.bipartition(g)
        assert parts is not None
        first = next(s for s in strategy.shots if s)
        start = "even" if first & parts.even else "odd"
    outcome = dynamics.verify(g, strategy, start)
    results["verified_start"] = start
    results["verified"] = isinstance(outcome, dynamics.Caught)
    if isinstance(outcome, dynamics.Caught):
        results["caught_at"] = outcome.step
    if args.out:
        dynamics.write_strategy(strategy, args.out)
        results["out"] = args.out
    return {"inputs": {"graph": _digest(args.graph)}, "results": results, "warnings": []}, 0


def _cmd_verify(args) -> tuple[dict, int]:
    g = _load_graph(args.graph)
    strategy = dynamics.read_strategy(args.strategy)
    outcome = dynamics.verify(g, strategy, args.start)
    inputs = {"graph": _digest(args.graph), "strategy": _digest(args.strategy)}
    if isinstance(outcome, dynamics.Caught):
        results = {"outcome": "caught", "step": outcome.step}
        code = 0
    else:
        results = {"outcome": "escaped", "walk": list(outcome.walk)}
        if g.labels is not None:
            results["walk_labels"] = [g.labels[v] for v in outcome.walk]
        code = 4
    return {"inputs": inputs, "results": results, "warnings": []}, code


def _cube_report(args) -> tuple[dict, list[str]]:
    n = args.n
    sub = args.subcommand
    warnings: list[str] = []
    if sub == "hun":
        closed_form = cube_mod.cube_hunter_number(n)
        scan = cube_mod.cube_surplus(n) + 1
        results = {"hunter_number": closed_form, "scan": scan,
                   "match": "MATCH" if closed_form == scan else "MISMATCH"}
        if closed_form != scan:
            warnings.append(f"closed form {closed_form} disagrees with profile scan {scan}")
    elif sub == "diffseq":
        seq = cube_mod.cube_diff_seq(n, args.side)
        results = {"side": args.side, "length": len(seq.values),
                   "diffseq": " ".join(str(v) for v in seq.values)}
        if n == 4:
            quoted = " ".join(str(v) for v in cube_mod.QUOTED_DIFFSEQ_Q4)
            warnings.append(
                f"a quoted version of this sequence has {len(cube_mod.QUOTED_DIFFSEQ_Q4)} entries "
                f"({quoted}); the {args.side} side of Q^4 has only {len(seq.values)} vertices, "
                "so the extra trailing zero is dropped here")
    elif sub == "mun":
        if args.k is None:
            raise InvalidParameterError("mun needs a subset size: cube N mun K")
        value = cube_mod.cube_min_union(n, args.k, args.side)
        results = {"side": args.side, "k": args.k, "min_union": value}
        if n <= 5:
            g = graphs.hypercube_graph(n)
            brute = solver.min_neighborhood_union(g, args.k, args.side, "open")
            results["brute_force"] = brute
            results["match"] = "MATCH" if brute == value else "MISMATCH"
            if brute != value:
                warnings.append(f"analytic {value} disagrees with brute force {brute}")
    elif sub == "u":
        scan = cube_mod.cube_surplus(n)
        results = {"surplus": scan}
        if n >= 2:
            closed_form = cube_mod.cube_surplus_closed_form(n)
            results["closed_form"] = closed_form
            results["match"] = "MATCH" if closed_form == scan else "MISMATCH"
            if closed_form != scan:
                warnings.append(f"closed form {closed_form} disagrees with scan {scan}")
        if n == 4:
            warnings.append(
                f"the value {cube_mod.QUOTED_SURPLUS_Q4} sometimes quoted for this quantity "
                f"is the hunter number (surplus + 1), not the surplus {scan}")
    elif sub == "deaf":
        scan = cube_mod.cube_deaf_surplus(n)
        closed_form = cube_mod.cube_deaf_closed_form(n)
        results = {"scan_surplus": scan, "hunter_number": scan + 1,
                   "closed_form": closed_form,
                   "match": "MATCH" if closed_form == scan else "MISMATCH"}
        warnings.append(
            f"the closed form tracks the surplus, not the hunter number surplus+1 = {scan + 1}")
        if closed_form != scan:
            warnings.append(
                f"closed form {closed_form} disagrees with the scanned surplus {scan}")
    elif sub == "messlemma":
        if args.k is None:
            raise InvalidParameterError("messlemma needs a layer index: cube N messlemma I")
        i = args.k
        pos_formula = cube_mod.arrow_max_position_formula(n, i)
        val_formula = cube_mod.arrow_max_value_formula(n, i)
        pos_scan, val_scan = cube_mod.arrow_max_scan(n, i)
        results = {
            "i": i,
            "position_formula": pos_formula, "position_scan": pos_scan,
            "position_match": "MATCH" if pos_formula == pos_scan else "MISMATCH",
            "value_formula": val_formula, "value_scan": val_scan,
            "value_match": "MATCH" if val_formula == val_scan else "MISMATCH",
        }
        if val_formula != val_scan:
            warnings.append(
                f"stated value formula gives {val_formula} but the scan gives {val_scan}; "
                "the scan is the trusted value")
        if pos_formula != pos_scan:
            warnings.append(
                f"stated position formula gives {pos_formula} but the scan gives {pos_scan}")
    else:  # cumbersome
        closed_form = cube_mod.cube_surplus_closed_form(n)
        scan = cube_mod.cube_surplus(n)
        results = {"closed_form": closed_form, "scan": scan,
                   "match": "MATCH" if closed_form == scan else "MISMATCH"}
        if closed_form != scan:
            warnings.append(f"closed form {closed_form} disagrees with scan {scan}")
    return results, warnings


def _cmd_cube(args) -> tuple[dict, int]:
    results, warnings = _cube_report(args)
    inputs = {"n": args.n, "subcommand": args.subcommand}
    return {"inputs": inputs, "results": results, "warnings": warnings}, 0


# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="huntrab",
        description="Hunters-and-rabbits pursuit games: solve, bound, and build strategies.")
    parser.add_argument("--json", action="store_true", help="emit the report as JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a standard-family graph file")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("params", nargs="+", type=int)
    p.add_argument("-o", "--out", help="output path (default: stdout)")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("solve", help="exact hunter number with witness strategy")
    p.add_argument("graph")
    p.add_argument("--deaf", action="store_true", help="deaf-rabbit (closed) variant")
    p.add_argument("--budget", type=int, default=solver.DEFAULT_SEARCH_BUDGET,
                   help="max search states to expand")
    p.add_argument("--strategy-out", help="also write the witness strategy to this path")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("bounds", help="lower bounds (and upper bound for labeled hypercubes)")
    p.add_argument("graph")
    p.add_argument("--deaf", action="store_true")
    p.add_argument("--enum-budget", type=int, default=solver.DEFAULT_ENUM_BUDGET)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("strategy", help="build a nest-order strategy")
    p.add_argument("graph")
    p.add_argument("--order", help="weightlex, grid, or a nest-order file path")
    p.add_argument("--dims", nargs=2, type=int, metavar=("M", "N"),
                   help="grid dimensions (required with --order grid)")
    p.add_argument("--hunters", type=int, help="shots per round (default: from the nesting check)")
    p.add_argument("--deaf", action="store_true")
    p.add_argument("--extend-parity", action="store_true",
                   help="extend to a strategy winning from any start")
    p.add_argument("--out", help="write the strategy file to this path")
    p.set_defaults(func=_cmd_strategy)

    p = sub.add_parser("verify", help="run a strategy file against a graph")
    p.add_argument("graph")
    p.add_argument("strategy")
    p.add_argument("--start", choices=["any", "even", "odd"], default="any")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("cube", help="hypercube analytics (closed forms vs scans)")
    p.add_argument("n", type=int)
    p.add_argument("subcommand",
                   choices=["hun", "diffseq", "mun", "u", "deaf", "messlemma", "cumbersome"])
    p.add_argument("k", nargs="?", type=int, help="subset size (mun) or layer index (messlemma)")
    p.add_argument("--side", choices=["even", "odd"], default="even")
    p.set_defaults(func=_cmd_cube)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    started = time.perf_counter()
    try:
        body, code = args.func(args)
    except USAGE_ERRORS as exc:
        print(f"huntrab {args.command}: {exc}", file=sys.stderr)
        return 2
    except BudgetExceededError as exc:
        print(f"huntrab {args.command}: {exc}", file=sys.stderr)
        if exc.best_lower_bound is not None:
            print(f"huntrab {args.command}: best lower bound found: {exc.best_lower_bound}",
                  file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"huntrab {args.command}: {exc}", file=sys.stderr)
        return 2
    if code < 0:  # raw output already produced (gen to stdout)
        return 0
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": args.command,
        "inputs": body["inputs"],
        "results": body["results"],
        "warnings": body["warnings"],
        "timing_seconds": round(time.perf_counter() - started, 6),
    }
    _emit(report, args.json)
    return code


if __name__ == "__main__":
    sys.exit(main())
