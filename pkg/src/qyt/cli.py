"""Command-line front end: counting, board statistics, coefficient
tables, RSK traces, truncated expansions, and the verification suites.

Exit codes: 0 on success (and on passing suites), 1 on a failing suite,
2 on usage errors.  All results go to stdout; diagnostics to stderr.
Every subcommand takes --format {text,json,csv}; output is deterministic
for fixed arguments and seed.
"""

from __future__ import annotations

import argparse
import csv
import io
import inspect
import json
import os
import sys

from . import verify as verify_mod
from .board import FerrersBoard
from .partition import Partition
from .perm import format_word, is_permutation, parse_word
from .pnk import DEFAULT_SEED, a_table
from .qpoly import QTPoly
from .symfun import gen_fn, rsk, rsk_multiset, schur_truncated
from .tableau import qyt_count_exact


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _emit(args, payload: dict, text: str, header: list[str], rows: list[list]) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    elif args.format == "csv":
        print(_csv_text(header, rows))
    else:
        print(text)


def _shape(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _cmd_count(args) -> int:
    shape = args.shape
    if args.exact_entry is not None:
        mode, arg = "exact-entry", args.exact_entry
        value = qyt_count_exact(shape, args.exact_entry)
    elif args.max_entry is not None:
        mode, arg = "max-entry", args.max_entry
        value = sum(qyt_count_exact(shape, m) for m in range(args.max_entry + 1))
    elif args.ssyt is not None:
        mode, arg = "ssyt", args.ssyt
        value = shape.hook_content_count(args.ssyt)
    else:
        mode, arg = "syt", None
        value = shape.hook_length_count()
    payload = {"shape": str(shape), "mode": mode, "arg": arg, "count": value}
    _emit(args, payload, str(value),
          ["shape", "mode", "arg", "count"],
          [[str(shape), mode, "" if arg is None else arg, value]])
    return 0


def _cmd_board(args) -> int:
    board = FerrersBoard.from_partition(args.shape)
    if args.plus_one:
        board = board.plus_one()
    payload = board.to_json()
    payload["shape"] = str(args.shape)
    if args.hits:
        numbers = board.hit_numbers(args.limit)
        payload["hit_numbers"] = numbers
        text = ",".join(str(v) for v in numbers)
        header = ["k", "count"]
        rows = [[k, v] for k, v in enumerate(numbers)]
    elif args.q_hits:
        polys = board.q_hit_numbers(args.limit)
        payload["q_hit_numbers"] = [p.pairs() for p in polys]
        text = "\n".join(f"T_{k} = {p}" for k, p in enumerate(polys))
        header = ["k", "q_degree", "coeff"]
        rows = [[k, d, c] for k, p in enumerate(polys) for d, c in p.pairs()]
    else:
        text = ",".join(str(h) for h in board.heights)
        header = ["column", "height"]
        rows = [[i, h] for i, h in enumerate(board.heights, 1)]
    _emit(args, payload, text, header, rows)
    return 0


def _cmd_verify(args) -> int:
    names = list(verify_mod.SUITES) if args.suite == "all" else [args.suite]
    reports = []
    for name in names:
        fn = verify_mod.SUITES[name]
        kwargs = {}
        accepted = inspect.signature(fn).parameters
        max_n = args.max_n
        if max_n is None and os.environ.get("QYT_MAX_N"):
            max_n = int(os.environ["QYT_MAX_N"])
        if max_n is not None and "max_n" in accepted:
            kwargs["max_n"] = max_n
        if args.seed is not None and "seed" in accepted:
            kwargs["seed"] = args.seed
        if args.limit is not None and "limit" in accepted:
            kwargs["limit"] = args.limit
        reports.append(fn(**kwargs))

    payload = [r.to_json() for r in reports]
    lines = []
    for r in reports:
        bounds = ", ".join(f"{k}={v}" for k, v in r.bounds.items())
        lines.append(f"{r.suite}: {r.status} ({bounds}; {r.ms} ms)")
        if r.counterexample is not None:
            lines.append(json.dumps(r.counterexample, sort_keys=True))
    header = ["suite", "status", "ms", "counterexample"]
    rows = [
        [r.suite, r.status, r.ms,
         "" if r.counterexample is None else json.dumps(r.counterexample, sort_keys=True)]
        for r in reports
    ]
    _emit(args, payload if len(payload) > 1 else payload[0], "\n".join(lines), header, rows)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_table(args) -> int:
    table = a_table(args.n)
    payload = {"n": args.n, "a": table}
    lines = ["k\\m " + " ".join(f"{m:>6}" for m in range(args.n + 1))]
    for k, row in enumerate(table):
        lines.append(f"{k:>3} " + " ".join(f"{c:>6}" for c in row))
    header = ["k"] + [f"m{m}" for m in range(args.n + 1)]
    rows = [[k] + row for k, row in enumerate(table)]
    _emit(args, payload, "\n".join(lines), header, rows)
    return 0


def _cmd_rsk(args) -> int:
    word = parse_word(args.word)
    if not word or min(word) < 1:
        raise ValueError(f"not a word over positive integers: {args.word!r}")
    if is_permutation(word):
        P, Q = rsk(word)
    else:
        P, Q = rsk_multiset(word)
    shape = P.shape
    des_q = sorted(Q.descent_set())
    des_p = sorted(P.descent_set())
    payload = {
        "word": format_word(word),
        "shape": str(shape),
        "P": str(P),
        "Q": str(Q),
        "des_P": des_p,
        "des_Q": des_q,
    }
    text = "\n".join([
        f"shape: {shape}",
        f"P: {P}",
        f"Q: {Q}",
        f"Des(P): {{{','.join(str(d) for d in des_p)}}}",
        f"Des(Q): {{{','.join(str(d) for d in des_q)}}}",
    ])
    header = ["word", "shape", "P", "Q", "des_P", "des_Q"]
    rows = [[format_word(word), str(shape), str(P), str(Q),
             " ".join(str(d) for d in des_p), " ".join(str(d) for d in des_q)]]
    _emit(args, payload, text, header, rows)
    return 0


def _coeff_text(poly: QTPoly) -> str:
    return str(poly)


def _cmd_expand(args) -> int:
    if args.what == "schur":
        if args.shape is None:
            raise ValueError("expand schur requires --shape")
        n_vars = args.vars if args.vars is not None else args.shape.size
        mono = schur_truncated(args.shape, n_vars)
        payload = {
            "shape": str(args.shape),
            "vars": n_vars,
            "terms": mono.to_json(),
        }
        lines = [
            f"{','.join(str(e) for e in exps)}: {coeff}"
            for exps, coeff in mono.terms()
        ]
        header = ["exponents", "coeff"]
        rows = [[" ".join(str(e) for e in exps), coeff] for exps, coeff in mono.terms()]
        _emit(args, payload, "\n".join(lines), header, rows)
        return 0
    if args.n is None:
        raise ValueError("expand genfun requires --n")
    expansion = gen_fn(args.n, with_q=not args.no_q)
    payload = {"n": args.n, "q": not args.no_q, "schur": expansion.to_json()}
    lines = [
        f"{entry['partition']}: {_coeff_text(QTPoly({(q, t): c for q, t, c in entry['coeff']}))}"
        for entry in expansion.to_json()
    ]
    header = ["partition", "q_degree", "t_degree", "coeff"]
    rows = [
        [entry["partition"], q, t, c]
        for entry in expansion.to_json()
        for q, t, c in entry["coeff"]
    ]
    _emit(args, payload, "\n".join(lines), header, rows)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qyt",
        description="Exact counting and verification for quasi-Yamanouchi tableaux.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("count", help="count tableaux of a shape")
    p.add_argument("--shape", type=_shape, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--exact-entry", type=int, metavar="K",
                       help="quasi-Yamanouchi fillings with largest entry exactly K")
    group.add_argument("--max-entry", type=int, metavar="K",
                       help="quasi-Yamanouchi fillings with largest entry at most K")
    group.add_argument("--ssyt", type=int, metavar="M",
                       help="semistandard fillings with entries at most M")
    group.add_argument("--syt", action="store_true", help="standard fillings")
    add_format(p)
    p.set_defaults(run=_cmd_count)

    p = sub.add_parser("board", help="board heights and hit statistics")
    p.add_argument("--shape", type=_shape, required=True)
    p.add_argument("--plus-one", action="store_true",
                   help="raise every column by one")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--hits", action="store_true", help="hit numbers h_0..h_n")
    group.add_argument("--q-hits", action="store_true", help="q-hit numbers T_0..T_n")
    p.add_argument("--limit", type=int, default=None,
                   help="raise the brute-force cap on n (default 9)")
    add_format(p)
    p.set_defaults(run=_cmd_board)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(verify_mod.SUITES) + ["all"])
    p.add_argument("--max-n", type=int, default=None,
                   help="override the suite bound (or set QYT_MAX_N)")
    p.add_argument("--seed", type=int, default=None,
                   help=f"seed for sampled evaluation points (default {DEFAULT_SEED})")
    p.add_argument("--limit", type=int, default=None,
                   help="raise the brute-force cap on n (default 9)")
    add_format(p)
    p.set_defaults(run=_cmd_verify)

    p = sub.add_parser("table", help="coefficient tables")
    p.add_argument("what", choices=("a-coeffs",))
    p.add_argument("--n", type=int, required=True)
    add_format(p)
    p.set_defaults(run=_cmd_table)

    p = sub.add_parser("rsk", help="row-insert a word")
    p.add_argument("word", help='permutation or multiset word, e.g. "45312" or "1,1,2"')
    add_format(p)
    p.set_defaults(run=_cmd_rsk)

    p = sub.add_parser("expand", help="truncated expansions")
    p.add_argument("what", choices=("schur", "genfun"))
    p.add_argument("--shape", type=_shape, default=None, help="shape for schur")
    p.add_argument("--vars", type=int, default=None, help="number of variables")
    p.add_argument("--n", type=int, default=None, help="degree for genfun")
    p.add_argument("--no-q", action="store_true", help="drop the q-grading")
    add_format(p)
    p.set_defaults(run=_cmd_expand)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
