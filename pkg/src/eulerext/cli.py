"""Command-line entry point: ``eulerext {extend,verify,circuit,gen,experiment}``.

Exit codes: 0 success, 1 I/O or parse error, 2 infeasible / failed check.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .edgelist import ParseError, parse_edge_list, read_graph, serialize, write_graph
from .engine import ExtendConfig, extend
from .errors import ExtensionError, NotEulerian
from .experiments import GenerationError, gen_random_connected_graph, run_event_trials, write_csv
from .graph import Graph, GraphError
from .verify import hierholzer_circuit, verify_extension

EXIT_OK, EXIT_IO, EXIT_INFEASIBLE = 0, 1, 2


def _fail(code: int, kind: str, message) -> int:
    print(f"error: {kind}: {message}", file=sys.stderr)
    return code


def _read_extension(path) -> Graph:
    with open(path) as fh:
        n, pairs = parse_edge_list(fh.read())
    return Graph.from_edge_list(n, pairs)


def cmd_extend(args) -> int:
    g = read_graph(args.input)
    config = ExtendConfig(alpha=args.alpha, beta=args.beta, mode=args.mode, max_retries=args.max_retries)
    try:
        cert = extend(g, args.m, seed=args.seed, config=config)
    except ExtensionError as exc:
        return _fail(EXIT_INFEASIBLE, exc.kind, exc)
    comments = [
        f"eulerian extension m={args.m} seed={args.seed} mode={args.mode}",
        f"marked {len(cert.marked)} walks {cert.z} retries {cert.retries} max_degree {cert.max_degree}",
        "circuit: " + " ".join(map(str, cert.circuit)),
    ]
    text = serialize(cert.h, comments)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = read_graph(args.input)
    h = _read_extension(args.extension)
    if g.n != h.n:
        print(f"FAIL vertex counts differ ({g.n} vs {h.n})")
        return EXIT_INFEASIBLE
    report = verify_extension(g, h, args.m)
    for name in ("edge_count_ok", "contains_g", "connected", "all_even", "circuit_ok"):
        print(f"{name}: {'pass' if getattr(report, name) else 'FAIL'}")
    for line in report.failures:
        print(f"  {line}")
    print("PASS" if report.passed else "FAIL")
    return EXIT_OK if report.passed else EXIT_INFEASIBLE


def cmd_circuit(args) -> int:
    h = read_graph(args.input)
    try:
        circuit = hierholzer_circuit(h)
    except NotEulerian as exc:
        print("not-eulerian")
        print(f"  {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    print(" ".join(map(str, circuit)))
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        g = gen_random_connected_graph(args.n, args.b, args.delta_cap, args.seed)
    except GenerationError as exc:
        return _fail(EXIT_INFEASIBLE, "generation", exc)
    write_graph(args.out, g, [f"random connected graph n={args.n} b={args.b} delta_cap={args.delta_cap} seed={args.seed}"])
    return EXIT_OK


def cmd_experiment(args) -> int:
    try:
        records, summary = run_event_trials(args.n, args.trials, args.seed, alpha=args.alpha)
    except GenerationError as exc:
        return _fail(EXIT_INFEASIBLE, "generation", exc)
    write_csv(args.csv, records)
    r0 = records[0]
    print(f"n={r0.n} w={r0.w} b0={r0.b0} trials={len(records)}")
    for name, s in summary.items():
        flag = "ok" if s["ok"] else "BELOW"
        print(f"{name:8s} freq={s['freq']:.4f} bound={s['bound']:.6f} 3sigma-threshold={s['threshold']:.6f} {flag}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eulerext", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("extend", help="extend a graph to an Eulerian graph with exactly m edges")
    p.add_argument("--input", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--alpha", type=float, default=0.05)
    p.add_argument("--beta", type=float, default=0.3)
    p.add_argument("--mode", choices=["strict", "advisory"], default="strict")
    p.add_argument("--max-retries", type=int, default=10_000)
    p.add_argument("--out")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("verify", help="check an extension against its input graph")
    p.add_argument("--input", required=True)
    p.add_argument("--extension", required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("circuit", help="print an Eulerian circuit")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_circuit)

    p = sub.add_parser("gen", help="generate a random connected graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--delta-cap", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("experiment", help="Monte Carlo estimates of the sampling events")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--alpha", type=float, default=0.05)
    p.add_argument("--csv", required=True)
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (OSError, ParseError, GraphError) as exc:
        return _fail(EXIT_IO, type(exc).__name__, exc)


if __name__ == "__main__":
    sys.exit(main())
