"""Command-line front end: solve, verify, oracle, mine, and gen.

All file I/O uses the edge-list interchange format (0-based labels);
human-facing text output prints vertices 1-based. Exit codes are a
stable contract: 0 = success / 2-factor found, 1 = computed but no
2-factor (or verification failed), 2 = usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .factor import FactorError, emit_factor, parse_factor
from .graph import EdgeListError, Graph, emit_edge_list, gen_named, gen_random, parse_edge_list
from .oracle import OracleSizeError, brute_force_char_number, mine_counterexamples
from .pchain import PChain, apply_pchain, validate_pchain
from .solver import maximize_factor, structured_report, text_report

EXIT_OK = 0
EXIT_NO = 1
EXIT_USAGE = 2


def _read_graph(path: str) -> Graph:
    return parse_edge_list(Path(path).read_text(encoding="utf-8"))


def _write_out(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _factor_dot(g: Graph, edge_ids) -> str:
    lines = ["graph factor {"]
    for eid, (u, v) in enumerate(g.edges):
        style = ' [style=bold color=black]' if eid in edge_ids else ' [style=dotted color=gray]'
        lines.append(f"  {u} -- {v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_solve(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    initial = None
    if args.initial:
        initial = parse_factor(g, Path(args.initial).read_text(encoding="utf-8"))
    report = maximize_factor(g, args.strategy, initial)
    if args.format == "structured":
        out = structured_report(report, include_trace=args.trace)
    else:
        out = text_report(report, include_trace=args.trace)
    _write_out(out, args.out)
    if args.dot:
        Path(args.dot).write_text(
            _factor_dot(g, report.final_factor.edge_ids), encoding="utf-8")
    return EXIT_OK if report.is_two_factor else EXIT_NO


def cmd_verify(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    violations: list[str] = []
    try:
        factor = parse_factor(g, Path(args.factor).read_text(encoding="utf-8"))
    except FactorError as exc:
        print(f"violation: {exc}")
        return EXIT_NO
    print(f"factor: valid, deficiency {factor.deficiency}")

    if args.chain:
        try:
            verts = tuple(int(tok) for tok in args.chain.split())
        except ValueError:
            raise EdgeListError(f"chain must be whitespace-separated integers: {args.chain!r}")
        try:
            chain = PChain.from_vertices(g, verts)
        except ValueError as exc:
            print(f"violation: {exc}")
            return EXIT_NO
        violations = validate_pchain(g, factor, chain)
        for msg in violations:
            print(f"violation: {msg}")
        if not violations:
            after = apply_pchain(factor, chain)
            print("chain: valid")
            print(f"deficiency {factor.deficiency} -> {after.deficiency}")
    return EXIT_NO if violations else EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    result = brute_force_char_number(g)
    if args.format == "structured":
        lines = [
            f"n={g.n}",
            f"edges={g.edge_count}",
            f"max_edges={result.max_edges}",
            f"min_ts={result.min_ts}",
        ]
        pairs = sorted(g.endpoints(eid) for eid in result.witness.edge_ids)
        lines.append("witness_edges=" + " ".join(f"{u}-{v}" for u, v in pairs))
        _write_out("\n".join(lines) + "\n", args.out)
    else:
        print(f"minimum deficiency: {result.min_ts}")
        print(f"maximum factor size: {result.max_edges} edges")
        if args.out:
            Path(args.out).write_text(emit_factor(result.witness), encoding="utf-8")
    return EXIT_OK


def cmd_mine(args: argparse.Namespace) -> int:
    report = mine_counterexamples(
        ns=args.n,
        ps=args.p,
        seeds=range(args.seeds),
        out_dir=args.out_dir,
        strategy=args.strategy,
    )
    _write_out(report.structured(), args.out)
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "random":
        if args.n is None:
            raise ValueError("gen --family random needs --n")
        g = gen_random(args.n, args.p, args.seed)
    else:
        params = [x for x in (args.n, args.n2) if x is not None]
        g = gen_named(args.family, *params)
    _write_out(emit_edge_list(g), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="factorkit",
        description="Maximum [0,2]-factors, characteristic numbers, and 2-factors.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="compute a maximum [0,2]-factor / 2-factor")
    p_solve.add_argument("graph", help="edge-list file")
    p_solve.add_argument("--strategy", choices=("dfs", "exhaustive"), default="dfs")
    p_solve.add_argument("--initial", help="edge-list file with a starting factor")
    p_solve.add_argument("--trace", action="store_true", help="include per-chain trace")
    p_solve.add_argument("--format", choices=("text", "structured"), default="text")
    p_solve.add_argument("--out", help="write the report to a file instead of stdout")
    p_solve.add_argument("--dot", help="write the final factor as a DOT file")
    p_solve.set_defaults(func=cmd_solve)

    p_verify = sub.add_parser("verify", help="validate a factor and optionally a chain")
    p_verify.add_argument("graph", help="edge-list file")
    p_verify.add_argument("factor", help="edge-list file with the factor edges")
    p_verify.add_argument("--chain", help="chain as 0-based vertex labels 'x1 x2 ... xk+1'")
    p_verify.add_argument("--format", choices=("text", "structured"), default="text")
    p_verify.set_defaults(func=cmd_verify)

    p_oracle = sub.add_parser("oracle", help="brute-force minimum deficiency")
    p_oracle.add_argument("graph", help="edge-list file")
    p_oracle.add_argument("--format", choices=("text", "structured"), default="text")
    p_oracle.add_argument("--out", help="structured: report file; text: witness factor file")
    p_oracle.set_defaults(func=cmd_oracle)

    p_mine = sub.add_parser("mine", help="random sweep comparing a strategy to the oracle")
    p_mine.add_argument("--n", type=int, action="append", required=True,
                        help="vertex count (repeatable)")
    p_mine.add_argument("--p", type=float, action="append", required=True,
                        help="edge probability (repeatable)")
    p_mine.add_argument("--seeds", type=int, default=100,
                        help="number of seeds, 0..seeds-1 (default 100)")
    p_mine.add_argument("--strategy", choices=("dfs", "exhaustive"), default="dfs")
    p_mine.add_argument("--out", help="write the mining report to a file")
    p_mine.add_argument("--out-dir", help="directory for replayable gap instances")
    p_mine.set_defaults(func=cmd_mine)

    p_gen = sub.add_parser("gen", help="emit a generated graph as an edge-list file")
    p_gen.add_argument("--family", required=True,
                       help="path|cycle|complete|star|complete_bipartite|petersen|fig1|random")
    p_gen.add_argument("--n", type=int, help="first family parameter")
    p_gen.add_argument("--n2", type=int, help="second family parameter (complete_bipartite)")
    p_gen.add_argument("--p", type=float, default=0.5, help="edge probability for random")
    p_gen.add_argument("--seed", type=int, default=0, help="seed for random")
    p_gen.add_argument("--out", help="write to a file instead of stdout")
    p_gen.set_defaults(func=cmd_gen)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, which matches the contract
        return int(exc.code) if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (EdgeListError, FactorError, OracleSizeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
