"""Command-line front end: list, eval, verify, and bench subcommands.

Exit codes: 0 when everything matched (or a plain evaluation succeeded),
1 when a closed-form-vs-oracle comparison mismatched, 2 on usage or
domain errors (unknown identity, invalid seeds, zero term in a
reciprocal window, empty range).
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time
from fractions import Fraction
from typing import Optional

from .errors import DomainError, UnknownIdentityError, ZeroTermError
from .oracle import oracle_sum
from .sequences import SequenceSpec
from .verifier import (
    REGISTRY,
    TSV_COLUMNS,
    GridSpec,
    VerificationReport,
    descriptor,
    effective_inputs,
    render_value,
    sweep,
)

# verify/bench run the oracle only up to this n unless --force-oracle is given
ORACLE_AUTO_LIMIT = 10000


def _parse_seed_pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected seeds as 'g0,g1', got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"seeds must be integers, got {text!r}") from None


def _parse_seeds(text: str) -> list[tuple[int, int]]:
    pairs = [_parse_seed_pair(part) for part in text.split(";") if part]
    if not pairs:
        raise ValueError("at least one seed pair is required")
    return pairs


def _parse_range(text: str) -> tuple[int, int]:
    """Inclusive integer interval: 'a..b', or a single integer 'a'."""
    try:
        if ".." in text:
            lo_text, hi_text = text.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
        else:
            lo = hi = int(text)
    except ValueError:
        raise ValueError(f"expected a range 'a..b' or an integer, got {text!r}") from None
    if lo > hi:
        raise ValueError(f"empty range {text!r}")
    return lo, hi


def _warn_ignored_flags(desc, args) -> None:
    if desc.seeds is not None and (args.g0 is not None or args.g1 is not None):
        print(
            f"warning: {desc.id} has fixed seeds ({desc.seeds.g0}, {desc.seeds.g1}); "
            "ignoring --g0/--g1",
            file=sys.stderr,
        )
    if desc.fixed_t is not None and args.t is not None and args.t != desc.fixed_t:
        print(
            f"warning: {desc.id} has fixed shift t = {desc.fixed_t}; ignoring --t",
            file=sys.stderr,
        )


def _digest(value) -> dict:
    """Small summary of a huge exact value: leading characters, digit count."""
    text = render_value(value)
    return {"leading": text[:24], "digits": sum(ch.isdigit() for ch in text)}


def run_bench(
    identity_id: str,
    spec: Optional[SequenceSpec] = None,
    t: int = 0,
    n: int = 1,
    repeats: int = 5,
    force_oracle: bool = False,
) -> dict:
    """Time closed-form vs oracle evaluation; medians over `repeats` runs.

    The oracle runs only when n <= ORACLE_AUTO_LIMIT or force_oracle is set;
    the closed form always runs, and when both run their values must agree.
    """
    if n < 1:
        raise DomainError(f"bench requires n >= 1, got {n}")
    if repeats < 1:
        raise DomainError(f"bench requires repeats >= 1, got {repeats}")
    desc = descriptor(identity_id)
    if spec is None:
        spec = SequenceSpec(0, 1)
    spec, t = effective_inputs(desc, spec, t)
    closed_times = []
    closed_value = None
    for _ in range(repeats):
        started = time.perf_counter()
        closed_value = desc.evaluate(spec, t, n)
        closed_times.append(time.perf_counter() - started)
    result = {
        "identity": desc.id,
        "g0": str(spec.g0),
        "g1": str(spec.g1),
        "t": t,
        "n": n,
        "repeats": repeats,
        "closed_seconds": statistics.median(closed_times),
        "closed_value": _digest(closed_value),
    }
    if force_oracle or n <= ORACLE_AUTO_LIMIT:
        oracle_times = []
        oracle_value = None
        for _ in range(repeats):
            started = time.perf_counter()
            oracle_value = oracle_sum(desc.kind, spec, t, n) * desc.oracle_scale
            oracle_times.append(time.perf_counter() - started)
        result["oracle_seconds"] = statistics.median(oracle_times)
        result["oracle_value"] = _digest(oracle_value)
        result["match"] = Fraction(closed_value) == oracle_value
    else:
        result["oracle_seconds"] = None
        result["oracle_value"] = None
        result["match"] = None
        result["note"] = (
            f"oracle skipped for n > {ORACLE_AUTO_LIMIT}; pass --force-oracle to run it"
        )
    return result


def _cmd_list(args) -> int:
    rows = [
        {"id": d.id, "summand": d.summand, "closed_form": d.closed_form, "source": d.source}
        for d in REGISTRY
    ]
    if args.format == "tsv":
        print("\t".join(("id", "summand", "closed_form", "source")))
        for row in rows:
            print("\t".join(row.values()))
    else:
        print(json.dumps(rows, indent=2))
    return 0


def _cmd_eval(args) -> int:
    desc = descriptor(args.identity)
    _warn_ignored_flags(desc, args)
    spec = SequenceSpec(
        args.g0 if args.g0 is not None else 0,
        args.g1 if args.g1 is not None else 1,
    )
    t = args.t if args.t is not None else 0
    spec, t = effective_inputs(desc, spec, t)
    n = args.n
    if desc.min_n is not None and n < desc.min_n:
        raise DomainError(f"identity {desc.id} requires n >= {desc.min_n}, got {n}")
    closed_value = oracle_value = None
    if args.method in ("closed", "both"):
        closed_value = desc.evaluate(spec, t, n)
    if args.method in ("oracle", "both"):
        oracle_value = oracle_sum(desc.kind, spec, t, n) * desc.oracle_scale
    match = Fraction(closed_value) == oracle_value if args.method == "both" else None
    closed_text = None if closed_value is None else render_value(closed_value)
    oracle_text = None if oracle_value is None else render_value(oracle_value)
    if args.format == "tsv":
        report = VerificationReport(
            desc.id, spec.g0, spec.g1, t, n,
            closed=closed_text, oracle=oracle_text, match=bool(match),
        )
        print("\t".join(TSV_COLUMNS))
        print(report.as_tsv_row())
    else:
        payload = {
            "identity": desc.id,
            "g0": str(spec.g0),
            "g1": str(spec.g1),
            "t": t,
            "n": n,
            "method": args.method,
            "closed": closed_text,
            "oracle": oracle_text,
            "match": match,
        }
        print(json.dumps(payload, indent=2))
    return 1 if match is False else 0


def _cmd_verify(args) -> int:
    if args.identity == "all":
        ids = [d.id for d in REGISTRY]
    else:
        ids = [descriptor(args.identity).id]
    grid = GridSpec(
        seeds=tuple(_parse_seeds(args.seeds)),
        t_range=_parse_range(args.t_range),
        n_range=_parse_range(args.n_range),
    )
    out = sys.stdout
    total = mismatches = 0
    if args.format == "tsv":
        out.write("\t".join(TSV_COLUMNS) + "\n")
    else:
        out.write("[")
    first = True
    for identity_id in ids:
        reports = sweep(identity_id, grid)
        failed = sum(1 for rep in reports if not rep.match)
        total += len(reports)
        mismatches += failed
        for rep in reports:
            if args.format == "tsv":
                out.write(rep.as_tsv_row() + "\n")
            else:
                out.write("\n" if first else ",\n")
                out.write(json.dumps(rep.as_dict()))
            first = False
        print(f"{identity_id}: {len(reports) - failed}/{len(reports)} match", file=sys.stderr)
    if args.format != "tsv":
        out.write("\n]\n" if not first else "]\n")
    print(f"total: {total - mismatches}/{total} match", file=sys.stderr)
    return 1 if mismatches else 0


def _cmd_bench(args) -> int:
    desc = descriptor(args.identity)
    _warn_ignored_flags(desc, args)
    spec = SequenceSpec(
        args.g0 if args.g0 is not None else 0,
        args.g1 if args.g1 is not None else 1,
    )
    t = args.t if args.t is not None else 0
    result = run_bench(
        desc.id, spec, t, args.n, repeats=args.repeat, force_oracle=args.force_oracle
    )
    print(json.dumps(result, indent=2))
    return 1 if result["match"] is False else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gibsum",
        description="Evaluate and verify gibonacci power-sum identities in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", help="catalog of registered identities")
    p_list.add_argument("--format", choices=("json", "tsv"), default="json")
    p_list.set_defaults(func=_cmd_list)

    p_eval = sub.add_parser("eval", help="evaluate one identity at one point")
    p_eval.add_argument("identity")
    p_eval.add_argument("--g0", type=int, default=None, help="seed G(0), default 0")
    p_eval.add_argument("--g1", type=int, default=None, help="seed G(1), default 1")
    p_eval.add_argument("--t", type=int, default=None, help="index shift, default 0")
    p_eval.add_argument("--n", type=int, required=True, help="summation length")
    p_eval.add_argument("--method", choices=("closed", "oracle", "both"), default="closed")
    p_eval.add_argument("--format", choices=("json", "tsv"), default="json")
    p_eval.set_defaults(func=_cmd_eval)

    p_verify = sub.add_parser("verify", help="sweep closed form vs oracle over a grid")
    p_verify.add_argument("identity", help="identity id, or 'all'")
    p_verify.add_argument("--seeds", default="0,1", help="semicolon-separated 'g0,g1' pairs")
    p_verify.add_argument(
        "--t", "--t-range", dest="t_range", default="0..0", help="shift range 'a..b'"
    )
    p_verify.add_argument(
        "--n", "--n-range", dest="n_range", default="0..20", help="length range 'a..b'"
    )
    p_verify.add_argument("--format", choices=("json", "tsv"), default="json")
    p_verify.set_defaults(func=_cmd_verify)

    p_bench = sub.add_parser("bench", help="time closed form vs oracle")
    p_bench.add_argument("identity")
    p_bench.add_argument("--g0", type=int, default=None)
    p_bench.add_argument("--g1", type=int, default=None)
    p_bench.add_argument("--t", type=int, default=None)
    p_bench.add_argument("--n", type=int, required=True)
    p_bench.add_argument("--repeat", type=int, default=5, help="timing runs per side")
    p_bench.add_argument("--force-oracle", action="store_true")
    p_bench.set_defaults(func=_cmd_bench)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (DomainError, UnknownIdentityError, ZeroTermError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
