"""Command-line front end.

    memotab recognize --grammar johnson Sandy "'s" professor knows Kim
    memotab chart --grammar sml a a
    memotab bench --grammars sm,sml,smml --lengths 12,24,48,96
    memotab demo path a

Exit status: 0 accepted or success, 1 rejected, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import statistics
import sys
import time
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path

from ._backend import BACKEND
from .dsl import GrammarError, compile_grammar, load_grammar, read_tokens
from .grammars import GRAMMAR_IDS, Grammar, build, fib_body, make_path_body, sentence
from .memo import memo_rec
from .nondet import POLICIES, Session, run

EXIT_ACCEPTED = 0
EXIT_REJECTED = 1
EXIT_ERROR = 2

CSV_HEADER = ("grammar", "n", "seconds", "accepted")


class CliError(Exception):
    pass


@dataclass
class BenchRecord:
    grammar: str
    n: int
    seconds: float
    accepted: bool

    def row(self) -> tuple:
        return (self.grammar, self.n, f"{self.seconds:.6f}", str(self.accepted).lower())


def instantiate(source: str, tokens: Sequence[str], policy: str = "fifo", seed: int | None = None) -> Grammar:
    """Built-in grammar id or path to a DSL file, with fresh tables for ``tokens``."""
    session = Session(tokens=tokens, policy=policy, seed=seed)
    if source in GRAMMAR_IDS:
        return build(source, session)
    path = Path(source)
    if not path.is_file():
        raise CliError(f"unknown grammar {source!r}: not one of {', '.join(GRAMMAR_IDS)} and not a readable file")
    try:
        rs = load_grammar(path)
    except OSError as e:
        raise CliError(f"cannot read {source}: {e}") from e
    except GrammarError as e:
        raise CliError(f"{source}: {e}") from e
    return compile_grammar(rs, session)


def _tokens(args: argparse.Namespace) -> list[str]:
    if args.input is None:
        return list(args.tokens)
    if args.tokens:
        raise CliError("give tokens either positionally or with --input, not both")
    try:
        return read_tokens(args.input)
    except OSError as e:
        raise CliError(f"cannot read {args.input}: {e}") from e


def chart_document(g: Grammar, accepted: bool) -> dict:
    tokens = list(g.tokens)
    charts = {}
    for name, chart in g.charts().items():
        charts[name] = [
            {
                "key": key,
                "key_remainder": tokens[key:],
                "results": sorted(results),
                "result_remainders": [tokens[p:] for p in sorted(results)],
            }
            for key, results in sorted(chart)
        ]
    return {"grammar": g.name, "tokens": tokens, "accepted": accepted, "charts": charts}


def cmd_recognize(args: argparse.Namespace) -> int:
    g = instantiate(args.grammar, _tokens(args), args.policy, args.seed)
    ok = g.accepts()
    print("accepted" if ok else "rejected")
    return EXIT_ACCEPTED if ok else EXIT_REJECTED


def cmd_chart(args: argparse.Namespace) -> int:
    g = instantiate(args.grammar, _tokens(args), args.policy, args.seed)
    doc = chart_document(g, g.accepts())
    json.dump(doc, sys.stdout, indent=None if args.compact else 2)
    sys.stdout.write("\n")
    return EXIT_ACCEPTED


def _int_list(text: str) -> list[int]:
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not values or any(v < 0 for v in values):
        raise argparse.ArgumentTypeError("lengths must be a non-empty list of non-negative integers")
    return values


def time_cell(source: str, n: int) -> tuple[float, bool]:
    """Seconds to build, run and walk every chart for ``sentence(n)``."""
    t0 = time.perf_counter()
    g = instantiate(source, sentence(n))
    ok = g.accepts()
    cells = 0
    for chart in g.charts().values():
        for _key, results in chart:
            for _ in results:
                cells += 1
    return time.perf_counter() - t0, ok


def bench(grammars: Sequence[str], lengths: Sequence[int], reps: int = 3) -> list[BenchRecord]:
    records = []
    for source in grammars:
        for n in lengths:
            samples = [time_cell(source, n) for _ in range(reps)]
            records.append(BenchRecord(source, n, statistics.median(s for s, _ in samples), all(ok for _, ok in samples)))
    return records


def loglog_slope(records: Sequence[BenchRecord]) -> float | None:
    """Least-squares slope of log(seconds) against log(n), or None with < 3 usable points."""
    pts = [(math.log(r.n), math.log(r.seconds)) for r in records if r.n > 0 and r.seconds > 0]
    if len(pts) < 3:
        return None
    xs, ys = zip(*pts)
    return statistics.linear_regression(xs, ys).slope


def cmd_bench(args: argparse.Namespace) -> int:
    grammars = [g for g in args.grammars.split(",") if g]
    for source in grammars:
        if source not in GRAMMAR_IDS and not Path(source).is_file():
            raise CliError(f"unknown grammar {source!r}")
    if args.reps < 1:
        raise CliError("--reps must be at least 1")
    records = bench(grammars, args.lengths, args.reps)
    slopes = {g: loglog_slope([r for r in records if r.grammar == g]) for g in grammars}
    if args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in records:
            w.writerow(r.row())
        for g, s in slopes.items():
            if s is not None:
                print(f"slope {g} {s:.3f}", file=sys.stderr)
    else:
        print(f"backend: {BACKEND}")
        print(f"{'grammar':<12}{'n':>6}{'seconds':>12}  accepted")
        for r in records:
            print(f"{r.grammar:<12}{r.n:>6}{r.seconds:>12.6f}  {str(r.accepted).lower()}")
        for g, s in slopes.items():
            if s is not None:
                print(f"log-log slope {g}: {s:.3f}")
    return EXIT_ACCEPTED


def _edges(text: str) -> list[tuple[str, str]]:
    edges = []
    for part in text.split(","):
        a, sep, b = part.partition(":")
        if not sep or not a or not b:
            raise argparse.ArgumentTypeError(f"edges look like a:b,b:c; got {part!r}")
        edges.append((a, b))
    return edges


def cmd_demo(args: argparse.Namespace) -> int:
    if args.name == "fib":
        try:
            n = int(args.argument)
        except ValueError:
            raise CliError(f"fib needs a non-negative integer, got {args.argument!r}") from None
        if n < 0:
            raise CliError(f"fib needs a non-negative integer, got {n}")
        results = run(memo_rec(fib_body)(n))
    else:
        edges = args.edges if args.edges is not None else [("a", "b"), ("b", "c")]
        results = run(memo_rec(make_path_body(edges))(args.argument))
    print(" ".join(str(r) for r in results))
    return EXIT_ACCEPTED


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="memotab", description="Tabled recognisers for (left-recursive) grammars.")
    p.add_argument("--version", action="version", version=f"%(prog)s 0.1.0 ({BACKEND} engine)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def input_args(sp):
        sp.add_argument("--grammar", "-g", required=True,
                        help=f"built-in grammar ({', '.join(GRAMMAR_IDS)}) or a grammar file")
        sp.add_argument("--input", "-i", help="read whitespace-separated tokens from this file")
        sp.add_argument("--policy", choices=POLICIES, default="fifo", help="agenda scheduling policy")
        sp.add_argument("--seed", type=int, default=None, help="seed for the random policy")
        sp.add_argument("tokens", nargs="*")

    sp = sub.add_parser("recognize", help="print accepted or rejected")
    input_args(sp)
    sp.set_defaults(func=cmd_recognize)

    sp = sub.add_parser("chart", help="print the memo tables as JSON")
    input_args(sp)
    sp.add_argument("--compact", action="store_true", help="single-line JSON")
    sp.set_defaults(func=cmd_chart)

    sp = sub.add_parser("bench", help="time grammars on sequences of 'a'")
    sp.add_argument("--grammars", "--grammar", default="sm,sml,smml")
    sp.add_argument("--lengths", type=_int_list, default=[12, 24, 48, 72, 96])
    sp.add_argument("--reps", type=int, default=3)
    sp.add_argument("--format", choices=("csv", "table"), default="csv")
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("demo", help="memoised fib or transitive closure")
    sp.add_argument("name", choices=("fib", "path"))
    sp.add_argument("argument")
    sp.add_argument("--edges", type=_edges, default=None, help="edge list for path, e.g. a:b,b:c")
    sp.set_defaults(func=cmd_demo)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as e:
        print(f"memotab: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
