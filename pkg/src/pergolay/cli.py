"""Command line interface: ``pergolay <command> ...``.

Exit codes: 0 success, 1 verification or precondition failure, 2 malformed
input.  Wherever a SOURCE is expected it may be a file (SDS record, JSON or
text form, or a two-line +/- pair file) or the id of a bundled dataset entry.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

import numpy as np

from . import dataset
from .equiv import are_equivalent, canonical_form, canonical_key, normalize_blocks
from .multiply import prop2_multiply, turyn_multiply
from .pairs import (
    Pair,
    format_pair,
    is_periodic_golay_pair,
    open_lengths,
    pair_to_sds,
    parse_pair,
    psd_bound_ok,
    sds_to_pair,
)
from .sds import NotAnSdsError, Sds, derive_params, enumerate_pg_params, format_sds, parse_sds, pg_params_to_xy
from .search import configs_for_length, default_threads, search_pg
from .seqcore import compress, format_sequence, psd

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    """Malformed or unreadable input (exit code 2)."""


def _read_source(source: str) -> Sds | Pair:
    path = Path(source)
    if path.is_file():
        text = path.read_text()
    elif source in dataset.ids():
        return dataset.get(source)
    else:
        raise InputError(f"{source}: no such file or dataset id")
    try:
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if lines and set("".join(lines)) <= {"+", "-"}:
            return parse_pair(text)
        return parse_sds(text)
    except ValueError as exc:
        raise InputError(f"{source}: {exc}") from None


def _as_sds(obj: Sds | Pair) -> Sds:
    if isinstance(obj, Sds):
        return obj
    try:
        return pair_to_sds(*obj)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _emit_sds(S: Sds, fmt: str) -> str:
    return S.to_json() if fmt == "json" else format_sds(S)


# --- commands -------------------------------------------------------------


def cmd_verify(args) -> int:
    if args.dataset:
        if args.dataset not in dataset.ids():
            raise InputError(f"unknown dataset id {args.dataset!r}")
        obj: Sds | Pair = dataset.get(args.dataset)
        label = f"dataset {args.dataset}"
    elif args.source:
        obj = _read_source(args.source)
        label = args.source
    else:
        raise InputError("give a SOURCE or --dataset ID")

    report = {"source": label}
    ok = True
    if isinstance(obj, Sds):
        S = obj
        if len(S.blocks) != 2:
            raise InputError("a periodic Golay SDS has two blocks")
        a, b = sds_to_pair_unchecked(S)
    else:
        a, b = obj
        if a.shape[0] == 1:
            raise InputError("length 1 is the trivial case")
        S = pair_to_sds(a, b)
    v = S.v
    try:
        p = derive_params(S)
        report["params"] = str(p)
        report["n"] = p.n
        report["v_eq_2n"] = p.v == 2 * p.n
    except NotAnSdsError as exc:
        report["params"] = f"not an SDS (residue {exc.residue})"
        report["v_eq_2n"] = False
    report["paf"] = is_periodic_golay_pair(a, b)
    report["psd_max"] = float(max(psd(a).max(), psd(b).max()))
    report["psd_bound"] = psd_bound_ok(a, b)
    ok = report["v_eq_2n"] and report["paf"] and report["psd_bound"]
    report["result"] = "PASS" if ok else "FAIL"

    if args.format == "json":
        print(json.dumps(report))
    else:
        word = {True: "PASS", False: "FAIL"}
        print(f"source:     {label}")
        print(f"length:     {v}")
        print(f"parameters: {report['params']}" + (f"  n={report['n']}" if "n" in report else ""))
        print(f"v = 2n:     {word[report['v_eq_2n']]}")
        print(f"PAF:        {word[report['paf']]}")
        print(f"PSD bound:  {word[report['psd_bound']]} (max {report['psd_max']:.6g}, bound {2 * v})")
        print(f"result:     {report['result']}")
    return EXIT_OK if ok else EXIT_FAIL


def sds_to_pair_unchecked(S: Sds) -> Pair:
    from .seqcore import subset_to_sequence

    return Pair(subset_to_sequence(S.blocks[0], S.v), subset_to_sequence(S.blocks[1], S.v))


def cmd_params(args) -> int:
    rows = enumerate_pg_params(args.max)
    if args.format == "json":
        print(json.dumps([{"v": p.v, "r": p.k[0], "s": p.k[1], "lambda": p.lam, "n": p.n,
                           "x": pg_params_to_xy(p).x, "y": pg_params_to_xy(p).y} for p in rows]))
        return EXIT_OK
    print(f"{'v':>5} {'r':>5} {'s':>5} {'lambda':>7} {'n':>5} {'x':>4} {'y':>4}")
    for p in rows:
        x, y = pg_params_to_xy(p)
        print(f"{p.v:>5} {p.k[0]:>5} {p.k[1]:>5} {p.lam:>7} {p.n:>5} {x:>4} {y:>4}")
    return EXIT_OK


def cmd_lengths(args) -> int:
    vals = open_lengths(args.max)
    if args.format == "json":
        print(json.dumps({"max": args.max, "open": vals, "arasu_xiang_applied": False}))
    else:
        print(" ".join(map(str, vals)))
        print("note: only 'v even' and 'v/2 a sum of two squares' are applied; the Arasu-Xiang "
              "condition is not implemented, so the list may contain lengths it rules out.")
    return EXIT_OK


def cmd_compress(args) -> int:
    obj = _read_source(args.source)
    a, b = sds_to_pair_unchecked(obj) if isinstance(obj, Sds) else obj
    try:
        ca, cb = compress(a, args.d), compress(b, args.d)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.format == "json":
        print(json.dumps({"d": args.d, "m": a.shape[0] // args.d, "a": ca.tolist(), "b": cb.tolist()}))
    else:
        print(" ".join(map(str, ca.tolist())))
        print(" ".join(map(str, cb.tolist())))
    return EXIT_OK


def cmd_multiply(args) -> int:
    golay = _read_source(args.golay)
    if not isinstance(golay, Pair):
        raise InputError(f"{args.golay}: expected a +/- pair file for the Golay factor")
    other = _read_source(args.source)
    try:
        if args.method == "turyn":
            P = sds_to_pair(other) if isinstance(other, Sds) else other
            out = turyn_multiply(golay, P)
        else:
            out = prop2_multiply(golay, _as_sds(other))
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    S = pair_to_sds(*out)
    if args.format == "json":
        print(json.dumps({"pair": [format_sequence(out.a), format_sequence(out.b)], "sds": S.to_record(),
                          "params": str(derive_params(S))}))
    else:
        sys.stdout.write(format_pair(*out))
        print(format_sds(S))
        print(f"parameters: {derive_params(S)}")
    return EXIT_OK


def cmd_search(args) -> int:
    try:
        configs = configs_for_length(args.v, args.d, fix_first=not args.no_fix_first,
                                     limit=args.limit, threads=args.threads)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if not args.quiet:
        logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s", stream=sys.stderr)

    out_path = Path(args.out) if args.out else None
    sink = out_path.open("a") if out_path else None

    def record(S: Sds) -> None:
        if sink is not None:
            sink.write(S.to_json() + "\n")
            sink.flush()

    found: list[Sds] = []
    try:
        for cfg in configs:
            ckpt = None
            if args.checkpoint:
                ckpt = args.checkpoint if len(configs) == 1 else f"{args.checkpoint}.{cfg.params.k[0]}-{cfg.params.k[1]}"
            found.extend(search_pg(cfg, checkpoint=ckpt, on_solution=record))
    finally:
        if sink is not None:
            sink.close()
    if out_path is not None:
        # merge with solutions from earlier (checkpointed) runs
        merged = {parse_sds(line) for line in out_path.read_text().splitlines() if line.strip()}
        found = sorted(merged, key=canonical_key)
        out_path.write_text("".join(S.to_json() + "\n" for S in found))
    else:
        found = sorted(set(found), key=canonical_key)
    for S in found:
        print(_emit_sds(S, args.format))
    if not args.quiet:
        print(f"{len(found)} inequivalent solutions", file=sys.stderr)
    return EXIT_OK


def cmd_canon(args) -> int:
    S = _as_sds(_read_source(args.source))
    if len(S.blocks) != 2:
        raise InputError("canonical forms are defined for two blocks")
    print(_emit_sds(canonical_form(normalize_blocks(S)), args.format))
    return EXIT_OK


def cmd_equiv(args) -> int:
    S1 = _as_sds(_read_source(args.first))
    S2 = _as_sds(_read_source(args.second))
    try:
        same = are_equivalent(S1, S2)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    print("equivalent" if same else "inequivalent")
    return EXIT_OK


def cmd_dataset(args) -> int:
    table = dataset.load_dataset()
    if args.id is None:
        for key, entry in table.items():
            print(f"{key:8} {entry.expected_params!s:18} {entry.source}")
        return EXIT_OK
    if args.id not in table:
        raise InputError(f"unknown dataset id {args.id!r}")
    entry = table[args.id]
    if args.pair:
        a, b = sds_to_pair(entry.sds)
        sys.stdout.write(format_pair(a, b))
    else:
        print(_emit_sds(entry.sds, args.format))
    return EXIT_OK


# --- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pergolay", description="Periodic Golay pairs and their SDSs.")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[fmt], help="verify an SDS record or pair file")
    p.add_argument("source", nargs="?")
    p.add_argument("--dataset", metavar="ID")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("params", parents=[fmt], help="list periodic Golay SDS parameter sets")
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("lengths", parents=[fmt], help="lengths not yet settled by the sieve")
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(func=cmd_lengths)

    p = sub.add_parser("compress", parents=[fmt], help="m-compress both sequences of a pair")
    p.add_argument("source")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_compress)

    p = sub.add_parser("multiply", parents=[fmt], help="multiply a Golay pair and a periodic Golay pair")
    p.add_argument("--method", choices=("turyn", "sds"), required=True)
    p.add_argument("golay", help="pair file holding the Golay pair")
    p.add_argument("source", help="periodic Golay pair or SDS")
    p.set_defaults(func=cmd_multiply)

    p = sub.add_parser("search", parents=[fmt], help="two-stage compression search")
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--checkpoint", metavar="PATH")
    p.add_argument("--out", metavar="PATH", help="append solutions here as they are found")
    p.add_argument("--no-fix-first", action="store_true", help="lift every candidate without pinning")
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("canon", parents=[fmt], help="canonical form of an SDS")
    p.add_argument("source")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("equiv", help="decide equivalence of two SDSs")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("dataset", parents=[fmt], help="list or print bundled SDSs")
    p.add_argument("id", nargs="?")
    p.add_argument("--pair", action="store_true", help="print the +/- pair instead of the SDS")
    p.set_defaults(func=cmd_dataset)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "threads", 0) is None:
        args.threads = default_threads()
    dataset.load_dataset()  # self-check of the bundled data
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
