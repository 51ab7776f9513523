"""CLI entry point for tokengraphs."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import replace
from pathlib import Path

from .budget import Budget
from .canon import automorphism_group, find_isomorphism
from .config import CliConfig, find_config, load_config, parse_seed
from .domination import domination_number, independent_domination_number
from .errors import BudgetExceeded, Graph6Error, ParameterError
from .families import ARITY, FamilySpec, generate
from .formats import FORMATS, labels_encode, read_graph, write_graph
from .harness import Caps, run_suite
from .invariants import (
    bipartiteness,
    chromatic_number,
    clique_number,
    connected_components,
    independence_number,
)
from .tokens import build_move_union, build_token_graph, build_variant

log = logging.getLogger(__name__)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
INVARIANTS = ("components", "bipartite", "alpha", "omega", "chi", "gamma", "idom")
VARIANT_KINDS = {"fkr": "matching", "fkr-prime": "all_edges"}


def _emit(data: dict) -> None:
    print(json.dumps(data, indent=2, sort_keys=True))


def _budget(args: argparse.Namespace, config: CliConfig) -> Budget:
    node_limit = args.node_limit if args.node_limit is not None else config.budgets.node_limit
    timeout = args.timeout if args.timeout is not None else config.budgets.timeout
    return Budget(node_limit, timeout)


def _cmd_gen(args: argparse.Namespace, config: CliConfig) -> int:
    spec = FamilySpec(args.family, tuple(args.params))
    write_graph(generate(spec), args.out, args.format)
    return EXIT_OK


def _cmd_build(args: argparse.Namespace, config: CliConfig) -> int:
    g = read_graph(args.input, args.in_format)
    if args.variant is None:
        if args.m is None:
            raise ParameterError("m: --m is required unless --variant is given")
        tg = build_token_graph(g, args.k, args.m)
    elif args.variant == "union":
        tg = build_move_union(g, args.k)
    else:
        if args.r is None:
            raise ParameterError(f"r: --r is required for --variant {args.variant}")
        tg = build_variant(g, args.k, args.r, VARIANT_KINDS[args.variant])

    write_graph(tg.graph, args.out, args.format, tg.labels)
    labels_path = args.labels
    if labels_path is None and args.out not in (None, "-") and args.format != "dot":
        labels_path = Path(args.out).with_suffix(".labels")
    if labels_path is not None:
        Path(labels_path).write_text(labels_encode(tg.labels))
        log.info("Wrote labels to %s", labels_path)
    return EXIT_OK


def _cmd_inv(args: argparse.Namespace, config: CliConfig) -> int:
    g = read_graph(args.input, args.in_format)
    which = INVARIANTS if "all" in args.which else args.which
    budget = _budget(args, config)
    out: dict = {"n": g.n, "edges": g.edge_count}
    for name in which:
        log.info("Computing %s", name)
        if name == "components":
            out[name] = connected_components(g)
        elif name == "bipartite":
            out[name] = bipartiteness(g).to_json()
        elif name == "alpha":
            out[name] = independence_number(g, budget).to_json()
        elif name == "omega":
            out[name] = clique_number(g, budget).to_json()
        elif name == "chi":
            out[name] = chromatic_number(g, budget).to_json()
        elif name == "gamma":
            out[name] = domination_number(g, budget).to_json()
        elif name == "idom":
            out[name] = independent_domination_number(g, budget).to_json()
    _emit(out)
    return EXIT_OK


def _cmd_iso(args: argparse.Namespace, config: CliConfig) -> int:
    g = read_graph(args.first, args.in_format)
    h = read_graph(args.second, args.in_format)
    mapping = find_isomorphism(g, h, _budget(args, config))
    _emit({
        "isomorphic": mapping is not None,
        "mapping": mapping.to_json() if mapping is not None else None,
    })
    return EXIT_OK


def _cmd_aut(args: argparse.Namespace, config: CliConfig) -> int:
    g = read_graph(args.input, args.in_format)
    group = automorphism_group(g, _budget(args, config))
    _emit({"n": g.n, **group.to_json()})
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace, config: CliConfig) -> int:
    overrides = {}
    if args.suite is not None:
        overrides["suite"] = args.suite
    if args.seed is not None:
        overrides["seed"] = parse_seed(args.seed, "--seed")
    if args.max_n is not None:
        overrides["max_n"] = args.max_n
    if args.include_slow:
        overrides["include_slow"] = True
    if args.jobs is not None:
        overrides["jobs"] = args.jobs
    if args.out is not None:
        overrides["out"] = Path(args.out)
    budgets = config.budgets
    if args.timeout is not None:
        budgets = replace(budgets, timeout=args.timeout)
    if args.node_limit is not None:
        budgets = replace(budgets, node_limit=args.node_limit)
    config = replace(config, budgets=budgets, **overrides)

    caps = Caps(config.max_n, config.budgets.node_limit, config.budgets.timeout)
    report = run_suite(config.suite, config.seed, caps, config.include_slow, config.jobs)
    text = report.dumps()
    if config.out is None or str(config.out) == "-":
        sys.stdout.write(text)
    else:
        config.out.write_text(text)
        log.info("Wrote report to %s", config.out)

    summary = report.summary()
    print(
        f"pass={summary['pass']} fail={summary['fail']} "
        f"discrepancy={summary['discrepancy']} skipped={summary['skipped']}",
        file=sys.stderr,
    )
    if summary["skipped"]:
        log.warning("%d case(s) exceeded their budget", summary["skipped"])
    return EXIT_FAIL if report.failed else EXIT_OK


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tokengraphs",
        description="Generalized token graphs: construction, exact invariants, automorphisms "
                    "and theorem checks",
    )
    parser.add_argument(
        "--config", "-c",
        type=Path,
        default=None,
        help="Path to tokengraphs.toml (default: auto-detect)",
    )
    parser.add_argument(
        "--verbose", "-v",
        action="count",
        default=1,
        help="Increase verbosity (-v for INFO, -vv for DEBUG)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    caps = argparse.ArgumentParser(add_help=False)
    caps.add_argument("--timeout", type=_positive_float, default=None,
                      help="Wall-clock cap in seconds per solver call")
    caps.add_argument("--node-limit", type=_positive_int, default=None,
                      help="Search-node cap per solver call")

    reading = argparse.ArgumentParser(add_help=False)
    reading.add_argument("--in-format", choices=("g6", "edgelist"), default=None,
                         help="Input format (default: from extension; stdin is graph6)")

    p = sub.add_parser("gen", help="Generate a named graph family")
    p.add_argument("family", choices=list(ARITY))
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--out", "-o", default=None, help="Output path (default: stdout)")
    p.add_argument("--format", "-f", choices=FORMATS, default="g6")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("build", parents=[reading], help="Build a token graph of an input graph")
    p.add_argument("input", help="Input graph path, or - for stdin")
    p.add_argument("--k", type=int, required=True, help="Number of tokens")
    p.add_argument("--m", type=int, default=None, help="Tokens moved per step in F_k^m")
    p.add_argument("--variant", choices=("fkr", "fkr-prime", "union"), default=None)
    p.add_argument("--r", type=int, default=None, help="Half the symmetric difference for fkr variants")
    p.add_argument("--out", "-o", default=None, help="Output path (default: stdout)")
    p.add_argument("--format", "-f", choices=FORMATS, default="g6")
    p.add_argument("--labels", default=None,
                   help="Label sidecar path (default: next to --out with a .labels suffix)")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("inv", parents=[reading, caps], help="Compute exact invariants with witnesses")
    p.add_argument("input")
    p.add_argument("--which", nargs="+", choices=INVARIANTS + ("all",), default=["all"])
    p.set_defaults(func=_cmd_inv)

    p = sub.add_parser("iso", parents=[reading, caps], help="Test two graphs for isomorphism")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("aut", parents=[reading, caps], help="Automorphism group generators and order")
    p.add_argument("input")
    p.set_defaults(func=_cmd_aut)

    p = sub.add_parser("verify", parents=[caps], help="Run theorem checks and write a JSON report")
    p.add_argument("--suite", default=None, help="fast, all, or comma-separated check names")
    p.add_argument("--seed", default=None, help="Seed (default: $TOKENGRAPHS_SEED or config)")
    p.add_argument("--max-n", type=_positive_int, default=None, help="Largest host graph size")
    p.add_argument("--include-slow", action="store_true", help="Also run cases marked slow")
    p.add_argument("--jobs", "-j", type=_positive_int, default=None, help="Worker processes")
    p.add_argument("--out", "-o", default=None, help="Report path (default: stdout)")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    # Logging setup
    level = logging.WARNING
    if args.verbose >= 2:
        level = logging.DEBUG
    elif args.verbose >= 1:
        level = logging.INFO
    logging.basicConfig(
        level=level,
        format="%(levelname)-8s %(name)s: %(message)s",
    )

    try:
        config = load_config(args.config or find_config())
        return args.func(args, config)
    except BudgetExceeded as exc:
        print(f"Error: {exc} after {exc.nodes} nodes", file=sys.stderr)
        return EXIT_BUDGET
    except (ParameterError, Graph6Error, OSError) as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return EXIT_USAGE
