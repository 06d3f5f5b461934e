"""Command-line interface: ``prodsum <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import __version__
from .errors import CheckpointCorrupt, ProdsumError
from .forms import count_representations, enumerate_representations, eval_form
from .primes import Family, ProgressionSpec, is_prime, progression_term, progression_witness
from .sequences import (
    SEQUENCE_LABELS,
    ScanCheckpoint,
    generate_table,
    load_checkpoint,
    save_checkpoint,
    scan_zero_terms,
)
from .smallest_k import smallest_k_direct, smallest_k_profiles


class CliError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer: {text!r}")
    return value


def _emit(lines, out) -> None:
    for line in lines:
        out.write(line + "\n")


def cmd_count(args, out) -> int:
    nu = count_representations(args.n, args.k)
    if args.format == "json":
        _emit([json.dumps({"n": args.n, "k": args.k, "count": nu})], out)
    elif args.format == "csv":
        _emit(["n,k,count", f"{args.n},{args.k},{nu}"], out)
    else:
        _emit([str(nu)], out)
    return 0


def cmd_enumerate(args, out) -> int:
    reps = enumerate_representations(args.n, args.k, args.min_part)
    if args.format == "json":
        _emit([json.dumps([list(r) for r in reps])], out)
    elif args.format == "csv":
        _emit([",".join(f"x{i}" for i in range(1, args.k + 1))] + [",".join(map(str, r)) for r in reps], out)
    else:
        _emit([" ".join(map(str, r)) for r in reps], out)
    return 0


def cmd_smallest_k(args, out) -> int:
    if args.method == "direct":
        result = smallest_k_direct(args.p)
    elif args.method == "profiles":
        result = smallest_k_profiles(args.p)
    else:
        result = smallest_k_direct(args.p)
        other = smallest_k_profiles(args.p)
        if result != other:
            raise CliError(f"solvers disagree for p={args.p}: direct {result}, profiles {other}")
    if args.format == "json":
        witness = None if result.witness is None else {str(v): t for v, t in result.witness.items}
        _emit([json.dumps({"p": args.p, "s": result.k, "witness": witness})], out)
    elif args.format == "csv":
        _emit(["p,s,witness", f"{args.p},{result.k},{result.witness or ''}"], out)
    else:
        _emit([str(result)], out)
    return 0


def cmd_table(args, out) -> int:
    table = generate_table(args.name, args.count, workers=args.threads)
    if args.format == "json":
        out.write(table.to_json() + "\n")
    elif args.format == "csv":
        out.write(table.to_csv())
    else:
        _emit([f"{i} {v}" for i, v in enumerate(table.values, start=table.offset)], out)
    return 0


def cmd_scan(args, out) -> int:
    path = Path(args.checkpoint)
    if args.resume and path.exists():
        cp = load_checkpoint(path)
    else:
        cp = ScanCheckpoint()
    while cp.next_n <= args.limit:
        budget = min(args.chunk, args.limit - cp.next_n + 1)
        started = time.monotonic()
        cp = scan_zero_terms(cp, budget, workers=args.threads)
        save_checkpoint(cp, path)
        print(
            f"scanned to n={cp.next_n - 1} ({budget} indices, {time.monotonic() - started:.2f}s)",
            file=sys.stderr,
        )
    scanned = cp.next_n - 1
    _emit(
        [
            f"scanned n<={scanned}: {len(cp.zero_indices)} zero terms",
            "zero_indices=" + ",".join(map(str, cp.zero_indices)),
        ],
        out,
    )
    return 0


def cmd_progression(args, out) -> int:
    spec = ProgressionSpec(Family(args.family), args.t)
    spec.check()
    rows = []
    for m in range(2, args.m_max + 1):
        term = progression_term(spec, m)
        witness = progression_witness(spec, m)
        rows.append((m, term, is_prime(term), witness, eval_form(witness)))
    if args.format == "json":
        doc = [
            {"m": m, "term": term, "prime": prime, "witness": list(w), "form_value": fv}
            for m, term, prime, w, fv in rows
        ]
        _emit([json.dumps(doc)], out)
    elif args.format == "csv":
        _emit(["m,term,prime,witness,form_value"], out)
        _emit([f"{m},{term},{int(prime)},{' '.join(map(str, w))},{fv}" for m, term, prime, w, fv in rows], out)
    else:
        _emit([f"m={m} term={term} prime={'yes' if prime else 'no'} witness={','.join(map(str, w))} F={fv}" for m, term, prime, w, fv in rows], out)
    return 0


def cmd_verify(args, out) -> int:
    from .verify import run_fixtures

    results = run_fixtures()
    for name, ok, detail in results:
        _emit([f"{'PASS' if ok else 'FAIL'} {name}" + (f": {detail}" if detail and not ok else "")], out)
    failed = sum(not ok for _, ok, _ in results)
    _emit([f"{len(results) - failed}/{len(results)} fixtures passed"], out)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prodsum",
        description="Representations of integers as x1*...*xk + x1 + ... + xk.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_format(p, default="plain"):
        p.add_argument("--format", choices=("plain", "csv", "json"), default=default)
        return p

    p = with_format(sub.add_parser("count", help="number of representations of n at arity k"))
    p.add_argument("n", type=_positive)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_count)

    p = with_format(sub.add_parser("enumerate", help="list representations of n at arity k"))
    p.add_argument("n", type=_positive)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--min-part", type=int, choices=(1, 2), default=1)
    p.set_defaults(func=cmd_enumerate)

    p = with_format(sub.add_parser("smallest-k", help="smallest arity for a prime, with witness"))
    p.add_argument("p", type=_positive)
    p.add_argument("--method", choices=("direct", "profiles", "both"), default="direct")
    p.set_defaults(func=cmd_smallest_k)

    threads_default = os.cpu_count() or 1

    p = with_format(sub.add_parser("table", help="first terms of a named sequence"), default="csv")
    p.add_argument("name", choices=sorted(SEQUENCE_LABELS))
    p.add_argument("--count", type=_positive, required=True)
    p.add_argument("--threads", type=_positive, default=threads_default)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("scan", help="checkpointed scan for zero terms of s(n)")
    p.add_argument("--limit", type=_positive, required=True, help="last prime index to process")
    p.add_argument("--checkpoint", required=True)
    p.add_argument("--resume", action="store_true")
    p.add_argument("--chunk", type=_positive, default=1000, help="indices per persisted chunk")
    p.add_argument("--threads", type=_positive, default=threads_default)
    p.set_defaults(func=cmd_scan)

    p = with_format(sub.add_parser("progression", help="terms and witnesses of a progression family"))
    p.add_argument("--family", type=int, choices=(3, 4), required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--m-max", type=int, required=True)
    p.set_defaults(func=cmd_progression)

    p = sub.add_parser("verify", help="run the built-in fixture suite")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (ProdsumError, CliError, OverflowError, ValueError) as exc:
        kind = "corrupt checkpoint" if isinstance(exc, CheckpointCorrupt) else type(exc).__name__
        print(f"prodsum: error: {kind}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
