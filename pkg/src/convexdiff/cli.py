"""Command-line front end.

Machine output (JSON / CSV) goes to stdout or the requested file; human
summaries go to stderr. Exit codes: 0 success, 1 a verification ran and
failed, 2 invalid input or parameters.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import claims, constructions, oracles
from .errors import ConvexDiffError, InvalidInput, InvalidParams
from .exact import RealSet, gen_convex_random


def _log(msg: str) -> None:
    print(msg, file=sys.stderr)


def _emit(payload: dict, out: Optional[str]) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_realset(path: str) -> RealSet:
    with open(path, encoding="utf-8") as fh:
        try:
            payload = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidInput(f"{path} is not valid JSON: {exc}") from exc
    return RealSet.from_json(payload)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="convexdiff",
        description="Convex subsets of difference sets: constructions, "
        "gluing, matchings, oracles, claim checks, growth tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit a construction as RealSet JSON")
    p.add_argument("kind", choices=["thm1", "thm3", "squares", "random"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--strict", action="store_true", help="thm1: enforce n % 100 == 0, n >= 1000")
    p.add_argument("--seed", type=int, default=0, help="random: RNG seed")
    p.add_argument("--out", required=True)

    p = sub.add_parser("glue", help="glue the difference blocks into one convex set")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--strict", action="store_true")
    p.add_argument("--out", required=True)
    p.add_argument("--trace", help="also write the splice trace JSON here")

    p = sub.add_parser("match", help="build a matching over a convex set")
    p.add_argument("kind", choices=["thm2", "thm4"])
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("oracle", help="run an exact oracle, result JSON on stdout")
    p.add_argument("kind", choices=["lcs", "cm", "no4ap"])
    p.add_argument("--in", dest="inp", help="input RealSet JSON (lcs, cm)")
    p.add_argument("--n", type=int, help="ground-set size (no4ap)")
    p.add_argument("--limit", type=int, help="override the exhaustive guard (cm)")
    p.add_argument("--threads", type=int, default=1, help="accepted; results are identical for any value")

    p = sub.add_parser("verify", help="check a claim, report JSON on stdout")
    p.add_argument("kind", choices=["claim21", "claim22", "thm1size", "claims3"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sample-cap", type=int, dest="sample_cap")

    p = sub.add_parser("bench", help="emit growth tables")
    p.add_argument("what", choices=["growth"])
    p.add_argument("--family", required=True, choices=list(claims.GROWTH_FAMILIES))
    p.add_argument("--n-list", required=True, dest="n_list", help="comma-separated n values")
    p.add_argument("--csv", required=True)
    return parser


def _cmd_construct(args: argparse.Namespace) -> int:
    if args.kind == "thm1":
        s = constructions.thm1_set(args.n, strict=args.strict)
    elif args.kind == "thm3":
        s = constructions.thm3_set(args.n)
    elif args.kind == "squares":
        s = constructions.squares_set(args.n)
    else:
        s = gen_convex_random(args.n, args.seed)
    _emit(s.to_json(), args.out)
    _log(f"construct {args.kind}: wrote {len(s)} elements to {args.out}")
    return 0


def _cmd_glue(args: argparse.Namespace) -> int:
    s, trace = constructions.glue_chain(args.n, strict=args.strict)
    _emit(s.to_json(), args.out)
    if args.trace:
        _emit(trace.to_json(), args.trace)
    _log(
        f"glue: |S| = {len(s)} from {len(trace.splices) + 1} blocks -> {args.out}"
    )
    return 0


def _cmd_match(args: argparse.Namespace) -> int:
    base = _read_realset(args.inp)
    if args.kind == "thm2":
        m = constructions.thm2_matching(base)
    else:
        m = constructions.thm4_matching(base)
    _emit(m.to_json(), args.out)
    _log(f"match {args.kind}: {len(m)} pairs over {m.base_size} elements -> {args.out}")
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    if args.threads < 1:
        raise InvalidParams(f"--threads must be >= 1, got {args.threads}")
    if args.kind == "no4ap":
        if args.n is None:
            raise InvalidParams("oracle no4ap requires --n")
        res = oracles.max_weakly_convex_no4ap(args.n)
    else:
        if args.inp is None:
            raise InvalidParams(f"oracle {args.kind} requires --in")
        base = _read_realset(args.inp)
        if args.kind == "lcs":
            res = oracles.lcs_convex(base)
        else:
            limit = 12 if args.limit is None else args.limit
            res = oracles.max_convex_matching(base, limit=limit)
    _emit(res.to_json(), None)
    _log(f"oracle {args.kind}: value {res.value}, exhaustive {res.exhaustive}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.kind == "claim21":
        report = claims.verify_claim_2_1(args.n)
    elif args.kind == "claim22":
        report = claims.verify_claim_2_2(args.n)
    elif args.kind == "thm1size":
        report = claims.verify_thm1_size(args.n)
    else:
        report = claims.verify_claims_3(args.n, sample_cap=args.sample_cap)
    _emit(report.to_json(), None)
    _log(f"verify {args.kind}: {'pass' if report.passed else 'FAIL'}")
    return 0 if report.passed else 1


def _cmd_bench(args: argparse.Namespace) -> int:
    try:
        ns = [int(t) for t in args.n_list.split(",") if t.strip()]
    except ValueError as exc:
        raise InvalidParams(
            f"--n-list must be comma-separated integers, got {args.n_list!r}"
        ) from exc
    if not ns:
        raise InvalidParams("--n-list is empty")
    rows = claims.growth_table(args.family, ns)
    claims.growth_csv(rows, args.csv)
    _log(f"bench growth: {len(rows)} rows for {args.family} -> {args.csv}")
    return 0


_HANDLERS = {
    "construct": _cmd_construct,
    "glue": _cmd_glue,
    "match": _cmd_match,
    "oracle": _cmd_oracle,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except ConvexDiffError as exc:
        _log(f"error: {exc}")
        return 2
    except OSError as exc:
        _log(f"error: {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
