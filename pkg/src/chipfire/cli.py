"""Command-line front end.

Subcommands: stable, fires, seq, verify, schizo.  Every numeric argument is
parsed as an arbitrary-precision decimal integer.  Exit codes: 0 success,
1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import engine, formulas, numerics, schizo, sequences

FORMATS = ("table", "csv", "json")
SEQ_FORMATS = FORMATS + ("bfile",)


def _json_dumps(obj) -> str:
    # canonical form so that loads() + dumps() round-trips byte-exactly
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _parse_k_range(text: str) -> list[int]:
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
    else:
        lo = hi = int(text)
    if lo < 2 or hi < lo:
        raise ValueError(f"bad k range {text!r}; need 2 <= lo <= hi")
    return list(range(lo, hi + 1))


def cmd_stable(args) -> int:
    cfg = numerics.stable_config(args.N, args.k)
    digits = numerics.to_base(args.N - numerics.repunit(cfg.n, args.k),
                              args.k, cfg.n)
    if args.format == "json":
        print(_json_dumps({"N": args.N, "k": args.k, "n": cfg.n,
                           "digits": str(digits), "chips_per_vertex": list(cfg.c)}))
    elif args.format == "csv":
        print("layer,chips_per_vertex")
        for i, c in enumerate(cfg.c):
            print(f"{i + 1},{c}")
    else:
        print(f"N = {args.N}  k = {args.k}  n = {cfg.n}  digits = {digits}")
        for i, c in enumerate(cfg.c):
            print(f"layer {i + 1}: {c} chips per vertex")
    return 0


def cmd_fires(args) -> int:
    profile = formulas.fire_profile(args.N, args.k)
    if args.format == "json":
        print(_json_dumps({"N": args.N, "k": args.k, "n": profile.n,
                           "fires_per_vertex": list(profile.f),
                           "root_fires": profile.f[0],
                           "total_fires": profile.total}))
    elif args.format == "csv":
        print("layer,fires_per_vertex")
        for i, f in enumerate(profile.f):
            print(f"{i + 1},{f}")
        print(f"total,{profile.total}")
    else:
        print(f"N = {args.N}  k = {args.k}  n = {profile.n}")
        for i, f in enumerate(profile.f):
            print(f"layer {i + 1}: {f} fires per vertex")
        print(f"root fires = {profile.f[0]}")
        print(f"total fires = {profile.total}")
    return 0


def cmd_seq(args) -> int:
    window = sequences.generate(sequences.SequenceId(name=args.id, k=args.k),
                                start=args.start, count=args.count)
    if args.diff:
        window = sequences.difference(window)
    if args.format == "bfile":
        sequences.emit_bfile(window, sys.stdout)
    elif args.format == "csv":
        sequences.emit_csv(window, sys.stdout, header=args.header)
    elif args.format == "json":
        sequences.emit_json(window, sys.stdout)
    else:
        label = f"{window.id.name} (k = {window.id.k})"
        print(f"{label}: " +
              ", ".join(str(v) for v in window.values))
    return 0


def _verify_cell(N: int, k: int) -> str | None:
    """Compare every formula against the layer engine for one (N, k).

    Returns None when everything matches, else a description of the first
    mismatch.
    """
    sim = engine.simulate_layers(N, k)
    cfg = numerics.stable_config(N, k)
    if sim.stable_chips != cfg.c:
        return (f"stable config mismatch at N={N}, k={k}: "
                f"engine {sim.stable_chips}, formula {cfg.c}")
    for i in range(cfg.n):
        expect = formulas.vertex_fires(N, k, i)
        if sim.fires_by_layer[i] != expect:
            return (f"vertex fires mismatch at N={N}, k={k}, layer index {i}: "
                    f"engine {sim.fires_by_layer[i]}, formula {expect}")
    checks = (
        ("root fires", sim.root_fires, formulas.root_fires(N, k)),
        ("root fires recursion", sim.root_fires, formulas.root_fires_rec(N, k)),
        ("total fires", sim.total_fires, formulas.total_fires(N, k)),
        ("total fires recursion", sim.total_fires, formulas.total_fires_rec(N, k)),
    )
    for label, got, expect in checks:
        if got != expect:
            return f"{label} mismatch at N={N}, k={k}: engine {got}, formula {expect}"
    return None


def _verify_confluence(N: int, k: int, strategies: list[str], seeds: int,
                       force: bool) -> str | None:
    results = []
    for strategy in strategies:
        for seed in range(seeds):
            results.append(engine.simulate(N, k, strategy=strategy, seed=seed,
                                           force=force))
    first = results[0]
    for r in results[1:]:
        if r != first:
            return (f"confluence mismatch at N={N}, k={k}: "
                    f"{first} vs {r}")
    layer = engine.simulate_layers(N, k)
    if first.observables() != layer.observables():
        return (f"node/layer mismatch at N={N}, k={k}: "
                f"{first.observables()} vs {layer.observables()}")
    return None


def cmd_verify(args) -> int:
    ks = _parse_k_range(args.k)
    if args.N < 1:
        raise ValueError(f"need N >= 1, got {args.N}")
    if args.strategies == "all":
        strategies = list(engine.STRATEGIES)
    elif args.strategies:
        strategies = [s.strip() for s in args.strategies.split(",")]
        for s in strategies:
            if s not in engine.STRATEGIES:
                raise ValueError(f"unknown strategy {s!r}; "
                                 f"choose from {engine.STRATEGIES}")
    else:
        strategies = []
    node_max = args.node_N if args.node_N is not None else min(args.N, 300)

    for k in ks:
        for N in range(1, args.N + 1):
            mismatch = _verify_cell(N, k)
            if mismatch:
                print(f"FAIL: {mismatch}")
                return 1
        print(f"k={k}: formulas match engine for N=1..{args.N}")
        if strategies:
            for N in range(1, node_max + 1):
                mismatch = _verify_confluence(N, k, strategies, args.seeds,
                                              args.force)
                if mismatch:
                    print(f"FAIL: {mismatch}")
                    return 1
            print(f"k={k}: confluent over {len(strategies)} strategies x "
                  f"{args.seeds} seeds for N=1..{node_max}")
    print("verify: all checks passed")
    return 0


def _blocks_payload(report: schizo.BlockReport) -> list[dict]:
    return [{"digit": b.digit, "start": b.start, "length": b.length}
            for b in report.blocks]


def cmd_schizo(args) -> int:
    value = formulas.a_seq(args.n, args.k)
    if args.inverse:
        dump = schizo.inv_sqrt_digits(value, args.precision)
    else:
        dump = schizo.sqrt_digits(value, args.precision)
    report = schizo.block_report(dump, min_run=args.min_run)
    if args.format == "json":
        print(_json_dumps({"subject": dump.subject, "value": value,
                           "digits": str(dump), "precision": dump.precision,
                           "blocks": _blocks_payload(report)}))
    else:
        print(f"a({args.n}, {args.k}) = {value}")
        print(f"{dump.subject} = {dump}")
        if report.blocks:
            print(f"repeated-digit blocks (run >= {args.min_run}):")
            for b in report.blocks:
                print(f"  digit {b.digit} at offset {b.start}, length {b.length}")
        else:
            print(f"no repeated-digit blocks with run >= {args.min_run}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chipfire",
        description="Exact chip-firing on the infinite k-ary tree with a "
                    "self-loop at the root.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stable", help="stable configuration for N chips")
    p.add_argument("-N", type=int, required=True, help="chip count (>= 1)")
    p.add_argument("-k", type=int, required=True, help="branching factor (>= 2)")
    p.add_argument("--format", "-f", choices=FORMATS, default="table")
    p.set_defaults(func=cmd_stable)

    p = sub.add_parser("fires", help="per-layer, root, and total fire counts")
    p.add_argument("-N", type=int, required=True, help="chip count (>= 1)")
    p.add_argument("-k", type=int, required=True, help="branching factor (>= 2)")
    p.add_argument("--format", "-f", choices=FORMATS, default="table")
    p.set_defaults(func=cmd_fires)

    p = sub.add_parser("seq", help="generate a named sequence window")
    p.add_argument("id", help="sequence id: " + ", ".join(sequences.SEQUENCE_NAMES))
    p.add_argument("-k", type=int, required=True, help="branching factor (>= 2)")
    p.add_argument("-n", "--count", dest="count", type=int, default=10,
                   help="number of terms (default 10)")
    p.add_argument("--start", type=int, default=1, help="first index (default 1)")
    p.add_argument("--diff", action="store_true",
                   help="emit first differences of the window")
    p.add_argument("--header", action="store_true",
                   help="include a header row (csv only)")
    p.add_argument("--format", "-f", choices=SEQ_FORMATS, default="table")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("verify",
                       help="check formulas against the simulation engine")
    p.add_argument("-k", required=True,
                   help="branching factor or range, e.g. 3 or 2..6")
    p.add_argument("-N", type=int, required=True,
                   help="check every pile size 1..N")
    p.add_argument("--strategies", default="",
                   help="comma-separated node-level strategies, or 'all'")
    p.add_argument("--seeds", type=int, default=1,
                   help="seeds per strategy for the random policy (default 1)")
    p.add_argument("--node-N", type=int, default=None,
                   help="cap pile size for node-level runs (default min(N, 300))")
    p.add_argument("--force", action="store_true",
                   help="lift the node-count budget on node-level runs")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("schizo",
                       help="decimal digits of sqrt(a(n,k)) or its reciprocal")
    p.add_argument("-k", type=int, required=True, help="sequence base (>= 2)")
    p.add_argument("-n", type=int, required=True, help="sequence index (>= 1)")
    p.add_argument("-p", "--precision", dest="precision", type=int, required=True,
                   help="fractional digits to extract")
    p.add_argument("--min-run", type=int, default=schizo.DEFAULT_MIN_RUN,
                   help="minimum repeated-digit run to report (default 4)")
    p.add_argument("--inverse", action="store_true",
                   help="dump 1/sqrt(a(n,k)) instead")
    p.add_argument("--format", "-f", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_schizo)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
