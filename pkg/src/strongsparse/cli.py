"""Command-line front end: ``strongsparse <command> ...``.

Exit codes: 0 success, 1 bad input, 2 counterexample / invalid colouring,
3 enumeration size limit exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from pathlib import Path

from . import addcomb, generators, locolor, oracle, reduction
from .instance import (
    FormatError,
    Instance,
    LiteralInstance,
    parse_any,
    parse_merges,
    quotient,
    serialize,
    serialize_literal,
    serialize_merges,
)
from .sparsifier import baseline_pair_merge, sparsify

EXIT_OK, EXIT_INPUT, EXIT_COUNTEREXAMPLE, EXIT_LIMIT = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _write(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _write_stats(path: str | None, record: dict):
    if path:
        _write(path, json.dumps(record, sort_keys=True) + "\n")


def cmd_sparsify(args) -> int:
    inst = parse_any(_read(args.input))
    mode = args.mode
    if isinstance(inst, LiteralInstance):
        mode = "nonmonotone"
    elif mode == "nonmonotone":
        inst = LiteralInstance(inst.n, inst.clauses)

    if mode == "nonmonotone":
        if args.baseline:
            raise FormatError("--baseline applies to monotone instances only")
        res = reduction.sparsify_nonmonotone(inst, args.threads)
        out = reduction.literal_quotient(inst, res.eq)
        _write(args.out_instance, serialize_literal(out))
        _write(args.out_merges, serialize_merges(res.eq))
        bound = reduction.clause_bound_check(inst, res.eq, res.eq_y)
        _write_stats(args.stats, {
            "mode": "nonmonotone",
            "status": res.status.value,
            "n_in": inst.n,
            "m_in": inst.m,
            "n_out": out.n,
            "m_out": out.m,
            "monotone_m_out": quotient(res.monotone, res.eq_y)[0].m,
            "clause_bound_ok": bound is None,
        })
        return EXIT_OK

    if args.baseline:
        eq, out = baseline_pair_merge(inst)
        record = {
            "mode": "baseline",
            "n_in": inst.n,
            "m_in": inst.m,
            "merges": inst.n - out.n,
            "n_out": out.n,
            "m_out": out.m,
        }
    else:
        eq, out, stats = sparsify(inst, args.threads)
        record = {"mode": "full", "merges": inst.n - out.n, **stats.to_dict()}
    _write(args.out_instance, serialize(out))
    _write(args.out_merges, serialize_merges(eq))
    _write_stats(args.stats, record)
    return EXIT_OK


def cmd_verify(args) -> int:
    inst = parse_any(_read(args.input))
    eq = parse_merges(_read(args.merges))
    if eq.n != inst.n:
        raise FormatError(f"merge map covers {eq.n} variables, instance has {inst.n}")
    try:
        if isinstance(inst, LiteralInstance):
            cex = oracle.verify_literal_merges(inst, eq, args.limit)
        else:
            cex = oracle.verify_merges(inst, eq, args.limit)
    except oracle.SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    if cex is None:
        print("ok")
        return EXIT_OK
    sol = "".join(map(str, cex.solution))
    print(f"counterexample: solution {sol} separates {cex.pair[0]} and {cex.pair[1]}")
    return EXIT_COUNTEREXAMPLE


def cmd_generate(args) -> int:
    kind = args.kind
    if kind == "xor":
        text = serialize(generators.gen_xor(args.k))
    elif kind == "subset-family":
        text = addcomb.serialize_family(generators.gen_subset_family(args.d))
    elif kind == "random":
        if args.nonmonotone:
            text = serialize_literal(generators.gen_random_nonmonotone(args.n, args.m, args.seed))
        else:
            text = serialize(generators.gen_random(args.n, args.m, args.seed))
    else:
        text = serialize(generators.gen_planted(args.n, args.m, args.seed))
    _write(args.out, text)
    return EXIT_OK


BENCH_COLUMNS = ["k", "n", "m_in", "m_out_baseline", "m_out_full", "rounds", "seconds"]


def bench_rows(k_lo: int, k_hi: int, workers: int | None = None) -> list[dict]:
    rows = []
    for k in range(k_lo, k_hi + 1):
        inst = generators.gen_xor(k)
        _, base_out = baseline_pair_merge(inst)
        t = time.perf_counter()
        _, out, stats = sparsify(inst, workers)
        rows.append({
            "k": k,
            "n": inst.n,
            "m_in": inst.m,
            "m_out_baseline": base_out.m,
            "m_out_full": out.m,
            "rounds": stats.rounds,
            "seconds": f"{time.perf_counter() - t:.3f}",
        })
    return rows


def _k_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            return int(lo), int(lo)
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None


def cmd_bench(args) -> int:
    lo, hi = args.k_range
    rows = bench_rows(lo, hi, args.threads)
    if args.csv in (None, "-"):
        fh = sys.stdout
        writer = csv.DictWriter(fh, BENCH_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    else:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            writer = csv.DictWriter(fh, BENCH_COLUMNS, lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
    return EXIT_OK


def _monotone(text: str) -> Instance:
    inst = parse_any(text, allow_repeats=True)
    if isinstance(inst, LiteralInstance):
        raise FormatError("a hypergraph must be a monotone instance")
    return inst


def cmd_check_lo(args) -> int:
    h = _monotone(_read(args.input))
    c = locolor.parse_colouring(_read(args.colouring))
    try:
        bad = locolor.check_lo(h, c)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    if bad is None:
        print("ok")
        return EXIT_OK
    print(f"violation: edge {' '.join(map(str, bad))} has a repeated maximum colour")
    return EXIT_COUNTEREXAMPLE


def cmd_lift(args) -> int:
    eq = parse_merges(_read(args.merges))
    c = locolor.parse_colouring(_read(args.colouring))
    try:
        lifted = locolor.lift_colouring(eq, c)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    _write(args.out, locolor.serialize_colouring(lifted))
    if args.input:
        bad = locolor.check_lo(_monotone(_read(args.input)), lifted)
        if bad is not None:
            print(f"violation: edge {' '.join(map(str, bad))}", file=sys.stderr)
            return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def cmd_lo2(args) -> int:
    h = _monotone(_read(args.input))
    try:
        c = locolor.brute_lo2(h, args.limit)
    except oracle.SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    if c is None:
        print("no LO 2-colouring", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    _write(args.out, locolor.serialize_colouring(c))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="strongsparse", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add_sparsify_args(sp, mode_default):
        sp.add_argument("--in", dest="input", required=True)
        sp.add_argument("--mode", choices=["monotone", "nonmonotone"], default=mode_default)
        sp.add_argument("--out-instance", required=True)
        sp.add_argument("--out-merges", required=True)
        sp.add_argument("--stats")
        sp.add_argument("--baseline", action="store_true")
        sp.add_argument("--threads", type=int, default=None)

    sp = sub.add_parser("sparsify", help="merge variables equal in all solutions")
    add_sparsify_args(sp, "monotone")
    sp.set_defaults(func=cmd_sparsify)

    sp = sub.add_parser("reduce", help="sparsify a non-monotone instance")
    add_sparsify_args(sp, "nonmonotone")
    sp.set_defaults(func=cmd_sparsify)

    sp = sub.add_parser("verify", help="certify a merge map by enumeration")
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("--merges", required=True)
    sp.add_argument("--limit", type=int, default=oracle.DEFAULT_LIMIT)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("generate", help="write a generated instance or family")
    gen = sp.add_subparsers(dest="kind", required=True)
    g = gen.add_parser("xor")
    g.add_argument("--k", type=int, required=True)
    g = gen.add_parser("subset-family")
    g.add_argument("--d", type=int, required=True)
    for name in ("random", "planted"):
        g = gen.add_parser(name)
        g.add_argument("--n", type=int, required=True)
        g.add_argument("--m", type=int, required=True)
        g.add_argument("--seed", type=int, required=True)
        if name == "random":
            g.add_argument("--nonmonotone", action="store_true")
    for g in gen.choices.values():
        g.add_argument("--out")
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("bench", help="baseline vs full sparsifier on a family")
    sp.add_argument("--family", choices=["xor"], default="xor")
    sp.add_argument("--k-range", type=_k_range, required=True)
    sp.add_argument("--csv")
    sp.add_argument("--threads", type=int, default=None)
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("check-lo", help="check an LO colouring of a hypergraph")
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("--colouring", required=True)
    sp.set_defaults(func=cmd_check_lo)

    sp = sub.add_parser("lift", help="lift a quotient colouring through a merge map")
    sp.add_argument("--merges", required=True)
    sp.add_argument("--colouring", required=True)
    sp.add_argument("--out")
    sp.add_argument("--in", dest="input", help="original hypergraph to check the lift against")
    sp.set_defaults(func=cmd_lift)

    sp = sub.add_parser("lo2", help="brute-force LO 2-colouring")
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("--out")
    sp.add_argument("--limit", type=int, default=oracle.DEFAULT_LIMIT)
    sp.set_defaults(func=cmd_lo2)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
