"""``divstr`` command line entry point.

Exit codes: 0 YES / success, 1 NO, 2 usage or input error, 3 oracle budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import coloring, exact, formats, localsearch, oracle, reductions
from .dag import DagValidationError, SigmaDag, dag_from_strings, enumerate_language
from .lcs_dag import build_lcs_dag
from .strings import InvalidInputError, StringSet, word_str

EXIT_YES, EXIT_NO, EXIT_ERROR, EXIT_BUDGET = 0, 1, 2, 3


@dataclass
class RunReport:
    command: str
    decision: bool | None = None
    value: int | float | None = None
    value_label: str = "ACHIEVED"
    witness: list | None = None
    stats: dict = field(default_factory=dict)
    wall_time: float | None = None
    extra: list[tuple[str, object]] = field(default_factory=list)


def _fmt_value(v):
    if v is None:
        return "none"
    return "inf" if v == math.inf else str(v)


def emit_report(report: RunReport, fmt: str = "text", timing: bool = True) -> str:
    stats = {"states": 0, **report.stats}
    if fmt == "json":
        rec = {
            "command": report.command,
            "decision": None if report.decision is None else ("YES" if report.decision else "NO"),
            "value": None if report.value is None else _fmt_value(report.value),
            "witness": None if report.witness is None else [word_str(w) for w in report.witness],
            "stats": stats,
        }
        for key, val in report.extra:
            rec[key.lower()] = val
        if timing:
            rec["time"] = report.wall_time
        return json.dumps(rec, sort_keys=True, default=str) + "\n"
    lines = []
    if report.decision is not None:
        lines.append("DECISION " + ("YES" if report.decision else "NO"))
    if report.value is not None:
        lines.append(f"{report.value_label} {_fmt_value(report.value)}")
    lines += [f"{key} {val}" for key, val in report.extra]
    if report.witness:
        lines += [word_str(w) for w in report.witness]
    lines.append("STATS " + " ".join(f"{k}={v}" for k, v in stats.items()))
    if timing and report.wall_time is not None:
        lines.append(f"TIME {report.wall_time:.6f}")
    return "\n".join(lines) + "\n"


def load_input(args) -> SigmaDag:
    if args.dag:
        return formats.read_dag(args.dag)
    return dag_from_strings(formats.read_string_set(args.strings))


def _add_input(p):
    src = p.add_argument_group("input").add_mutually_exclusive_group(required=True)
    src.add_argument("--dag", help="Sigma-DAG file")
    src.add_argument("--strings", help="string-set file (equal-length strings)")


def _add_mode(p):
    p.add_argument("--mode", choices=["maxmin", "maxsum"], required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="divstr", description="Diverse string selection under Hamming distance.")
    parser.add_argument("--format", choices=["text", "json"], default="text")
    parser.add_argument("--no-timing", action="store_true", help="omit wall-time fields")
    parser.add_argument("--threads", type=int, default=1, help="worker processes for fpt repetitions")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exact", help="exact DP decision (or optimum with --optimize)")
    _add_mode(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--delta", type=int, default=0)
    p.add_argument("--witness", action="store_true")
    p.add_argument("--optimize", action="store_true", help="binary search for the optimum")
    p.add_argument("--distinct", action="store_true", help="max-sum: require K distinct strings")
    _add_input(p)

    p = sub.add_parser("ptas", help="(1-eps)-approximate max-sum selection")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    _add_input(p)

    p = sub.add_parser("fpt", help="randomized color-coding search")
    _add_mode(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--reps", type=int, default=None)
    p.add_argument("--max-reps", type=int, default=coloring.DEFAULT_MAX_REPS)
    p.add_argument("--witness", action="store_true")
    _add_input(p)

    p = sub.add_parser("lcs-dag", help="build the Sigma-DAG of all LCSs of the input strings")
    p.add_argument("--strings", required=True)
    p.add_argument("--out")
    p.add_argument("--max-m", type=int, default=4)

    p = sub.add_parser("enumerate", help="list the language of a DAG")
    p.add_argument("--limit", type=int, default=10**6)
    _add_input(p)

    p = sub.add_parser("validate", help="check a Sigma-DAG file")
    p.add_argument("--dag", required=True)

    p = sub.add_parser("reduce", help="hardness reductions as instance generators")
    p.add_argument("kind", choices=["3dm", "clique", "lcs-encode"])
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--delta", type=int, default=0)
    p.add_argument("--mode", choices=["maxmin", "maxsum"], default="maxmin")
    p.add_argument("--stretch", default="1",
                   help="lcs-encode: padding scale factor, or 'auto' for r+1 (1 = textbook layout)")

    p = sub.add_parser("oracle", help="brute-force reference answers")
    p.add_argument("kind", choices=["diverse", "lcs", "farthest", "3dm", "clique"])
    p.add_argument("--strings")
    p.add_argument("--in", dest="infile")
    p.add_argument("--ref", help="farthest: string-set file of reference strings")
    p.add_argument("--mode", choices=["maxmin", "maxsum"], default="maxmin")
    p.add_argument("--semantics", choices=["tuple", "set"], default="tuple")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--delta", type=int, default=0)
    p.add_argument("--witness", action="store_true")
    return parser


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise InvalidInputError(f"--{name.replace('_', '-')} is required here")


def cmd_exact(args) -> RunReport:
    g = load_input(args)
    if args.optimize:
        value, res = exact.optimize(g, args.k, args.mode, distinct=args.distinct)
        return RunReport("exact", res.decision, value, "OPTIMUM", res.witness if args.witness else None, res.stats)
    res = exact.solve(g, args.k, args.delta, args.mode, distinct=args.distinct)
    return RunReport("exact", res.decision, res.achieved, "ACHIEVED",
                     res.witness if args.witness else None, res.stats)


def cmd_ptas(args) -> RunReport:
    g = load_input(args)
    stats: dict = {}
    chosen, value = localsearch.ptas_maxsum(g, args.k, args.eps, args.seed, stats)
    return RunReport("ptas", None, value, "VALUE", chosen, stats)


def cmd_fpt(args) -> RunReport:
    g = load_input(args)
    res = coloring.fpt_solve(g, args.k, args.delta, args.mode, args.seed, args.reps,
                             max_repetitions=args.max_reps, workers=args.threads)
    return RunReport("fpt", res.decision, res.achieved, "ACHIEVED",
                     res.witness if args.witness else None, res.stats)


def cmd_lcs_dag(args, out) -> RunReport | None:
    alphabet, words = formats.read_words(args.strings)
    if len(words) > args.max_m:
        raise InvalidInputError(f"{len(words)} input strings exceed --max-m {args.max_m}")
    g = build_lcs_dag(words, alphabet)
    text = formats.format_dag(g)
    if args.out:
        Path(args.out).write_text(text)
        return RunReport("lcs-dag", extra=[("R", g.r), ("SIZE", g.size)],
                         stats={"states": g.n_vertices, "edges": g.size})
    out.write(text)
    return None


def cmd_enumerate(args, out) -> None:
    g = load_input(args)
    words, truncated = enumerate_language(g, args.limit)
    for w in words:
        out.write(word_str(w) + "\n")
    if truncated:
        print(f"divstr: language truncated at {args.limit} strings", file=sys.stderr)


def cmd_validate(args, out) -> None:
    g = formats.read_dag(args.dag)
    out.write(f"VALID r={g.r} vertices={g.n_vertices} size={g.size}\n")
    for name, d in zip(g.ids, g.depth):
        out.write(f"DEPTH {name} {d}\n")


def cmd_reduce(args) -> RunReport:
    text = Path(args.infile).read_text()
    out = Path(args.out)
    if args.kind == "3dm":
        L, K, dmin, dsum = reductions.reduce_3dm(formats.parse_3dm(text))
        out.write_text(formats.format_words(L.alphabet, L.members, "reduced from 3DM"))
        return RunReport("reduce", extra=[("K", K), ("DELTA_MIN", dmin), ("DELTA_SUM", dsum)])
    if args.kind == "clique":
        _need(args, "k")
        L, K, delta = reductions.reduce_clique(formats.parse_graph(text), args.k)
        out.write_text(formats.format_words(L.alphabet, L.members, "reduced from Clique"))
        return RunReport("reduce", extra=[("K", K), ("DELTA", delta)])
    _need(args, "k")
    alphabet, words = formats.parse_words(text)
    stretch = args.stretch if args.stretch == "auto" else int(args.stretch)
    enc = reductions.encode_as_lcs(StringSet(alphabet, tuple(words)), args.k, args.delta, args.mode, stretch)
    out.write_text(formats.format_words(enc.alphabet, [enc.s1, enc.s2], f"DELTA_SHIFTED {enc.delta_shifted}"))
    return RunReport("reduce", extra=[("K", enc.K), ("STRETCH", enc.stretch), ("DELTA_SHIFTED", enc.delta_shifted)])


def cmd_oracle(args) -> RunReport:
    kind = args.kind
    if kind == "diverse":
        _need(args, "strings")
        L = formats.read_string_set(args.strings)
        decision, best, witness = oracle.brute_diverse(L, args.k, args.delta, args.mode, args.semantics)
        return RunReport("oracle", decision, best, "OPTIMUM", witness if args.witness else None)
    if kind == "lcs":
        _need(args, "strings")
        alphabet, words = formats.read_words(args.strings)
        if len(words) != 2:
            raise InvalidInputError("oracle lcs needs exactly two strings")
        found = sorted(oracle.brute_lcs_set(*words), key=alphabet.sort_key)
        return RunReport("oracle", None, len(found[0]) if found else 0, "LCS", found)
    if kind == "farthest":
        _need(args, "strings", "ref")
        L = formats.read_string_set(args.strings)
        _, refs = formats.read_words(args.ref)
        y, value = oracle.brute_farthest(L, refs)
        return RunReport("oracle", None, value, "VALUE", [y])
    _need(args, "infile")
    text = Path(args.infile).read_text()
    if kind == "3dm":
        inst = formats.parse_3dm(text)
        decision = oracle.brute_matching_3dm(inst.n, inst.triples)
    else:
        g = formats.parse_graph(text)
        decision = oracle.brute_clique(g.n, g.edges, args.k)
    return RunReport("oracle", decision)


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_YES
    start = time.perf_counter()
    try:
        if args.command == "exact":
            report = cmd_exact(args)
        elif args.command == "ptas":
            report = cmd_ptas(args)
        elif args.command == "fpt":
            report = cmd_fpt(args)
        elif args.command == "lcs-dag":
            report = cmd_lcs_dag(args, out)
        elif args.command == "enumerate":
            report = cmd_enumerate(args, out)
        elif args.command == "validate":
            report = cmd_validate(args, out)
        elif args.command == "reduce":
            report = cmd_reduce(args)
        else:
            report = cmd_oracle(args)
    except DagValidationError as exc:
        print(f"divstr: {_kebab(type(exc).__name__)}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except oracle.BudgetExceeded as exc:
        print(f"divstr: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InvalidInputError, ValueError, OSError) as exc:
        print(f"divstr: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if report is None:
        return EXIT_YES
    report.wall_time = time.perf_counter() - start
    out.write(emit_report(report, args.format, timing=not args.no_timing))
    return EXIT_NO if report.decision is False else EXIT_YES


def _kebab(name: str) -> str:
    name = name.removesuffix("Error")
    return "".join("-" + c.lower() if c.isupper() else c for c in name).lstrip("-")


if __name__ == "__main__":
    sys.exit(main())
