"""Command-line entry point: duel, sweep, fuzz, opt, verify, simulate.

Exit codes: 0 ok, 1 property violation, 2 usage or input error,
3 policy error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import harness
from .engine import simulate
from .errors import PolicyError, SchedError, SourceError
from .jsonio import (dumps, instance_from_dict, instance_to_dict, load_json,
                     trace_from_dict, trace_to_dict, witness_from_dict)
from .model import Job, Model, parse_time, validate_trace, validate_witness
from .opt import opt_brute_result, opt_dp
from .policies import STANDARD, make_policy

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_POLICY = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_range(text: str) -> tuple:
    """``"lo:hi"`` (inclusive) or a single integer."""
    lo, sep, hi = text.partition(":")
    try:
        lo, hi = int(lo), int(hi) if sep else int(lo)
    except ValueError:
        raise UsageError(f"bad range {text!r}, expected lo:hi") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return lo, hi


def parse_base(text: str) -> Job:
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError(f"--base expects r,p,s, got {text!r}")
    return Job(0, *(parse_time(p) for p in parts))


def _write(text: str, path):
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _adversary_args(p):
    p.add_argument("--model", choices=[m.value for m in Model], default="revoke")
    p.add_argument("--eps-frac", default="1/10", help="adversary epsilon as a fraction of p")
    p.add_argument("--base", default="0,1,2", help="outermost job as r,p,s")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="revokesched", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("duel", help="one policy against the adaptive adversary")
    p.add_argument("--policy", required=True)
    p.add_argument("--depth", type=int, default=3)
    _adversary_args(p)
    p.add_argument("--out", help="report JSON path (default stdout)")
    p.add_argument("--trace", help="also write the trace JSON here")

    p = sub.add_parser("sweep", help="duel several policies over a range of depths")
    p.add_argument("--policies", default=",".join(STANDARD))
    p.add_argument("--depths", default="3:12")
    _adversary_args(p)
    p.add_argument("--csv", help="CSV path (default stdout)")

    p = sub.add_parser("fuzz", help="duel seeded policies over a seed range")
    p.add_argument("--seeds", default="0:999")
    p.add_argument("--depth", type=int, default=5)
    _adversary_args(p)
    p.add_argument("--out", help="summary JSON path (default stdout)")

    p = sub.add_parser("opt", help="offline optimum of an instance file")
    p.add_argument("instance")
    p.add_argument("--method", choices=["dp", "brute", "both"], default="dp")
    p.add_argument("--out")

    p = sub.add_parser("verify", help="check a witness or a trace against an instance")
    p.add_argument("--instance", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--witness")
    group.add_argument("--trace")

    p = sub.add_parser("simulate", help="replay a fixed instance against a policy")
    p.add_argument("instance")
    p.add_argument("--policy", required=True)
    p.add_argument("--model", choices=[m.value for m in Model], default="revoke")
    p.add_argument("--out", help="result JSON path (default stdout)")
    p.add_argument("--trace", help="also write the trace JSON here")
    return parser


def cmd_duel(args) -> int:
    make_policy(args.policy)  # reject unknown names before running
    rep = harness.duel(args.policy, args.depth, args.model, parse_time(args.eps_frac),
                       parse_base(args.base))
    _write(dumps(rep.to_dict()), args.out)
    if args.trace:
        Path(args.trace).write_text(dumps(trace_to_dict(rep.trace)))
    return EXIT_OK


def cmd_sweep(args) -> int:
    names = [n for n in args.policies.split(",") if n]
    if not names:
        raise UsageError("no policies given")
    for name in names:
        make_policy(name)
    lo, hi = parse_range(args.depths)
    rows = harness.sweep(names, range(lo, hi + 1), args.model, parse_time(args.eps_frac),
                         parse_base(args.base))
    _write(harness.sweep_csv(rows), args.csv)
    return EXIT_OK


def cmd_fuzz(args) -> int:
    lo, hi = parse_range(args.seeds)
    summary = harness.fuzz(lo, hi, args.depth, args.model, parse_time(args.eps_frac),
                           parse_base(args.base))
    _write(dumps(summary.to_dict()), args.out)
    print(f"{summary.passed}/{summary.runs} pass", file=sys.stderr)
    return EXIT_VIOLATION if summary.violations else EXIT_OK


def cmd_opt(args) -> int:
    inst = instance_from_dict(load_json(args.instance))
    if args.method == "brute":
        result = opt_brute_result(inst)
    else:
        result = opt_dp(inst)
    payload = result.to_dict()
    code = EXIT_OK
    if args.method == "both":
        brute = opt_brute_result(inst)
        payload["brute_count"] = brute.count
        if brute.count != result.count:
            print(f"mismatch: dp={result.count} brute={brute.count}", file=sys.stderr)
            code = EXIT_VIOLATION
    _write(dumps(payload), args.out)
    return code


def cmd_verify(args) -> int:
    inst = instance_from_dict(load_json(args.instance))
    if args.witness:
        found = validate_witness(inst, witness_from_dict(load_json(args.witness)))
    else:
        found = validate_trace(trace_from_dict(load_json(args.trace)), inst)
    for v in found:
        print(v)
    if not found:
        print("ok")
    return EXIT_VIOLATION if found else EXIT_OK


def cmd_simulate(args) -> int:
    inst = instance_from_dict(load_json(args.instance))
    res = simulate(make_policy(args.policy), inst, args.model)
    payload = {
        "policy": args.policy,
        "model": res.trace.model.value,
        "instance": instance_to_dict(res.realized),
        "trace": trace_to_dict(res.trace),
        "completed": res.completed_count,
        "outcomes": {str(k): v for k, v in res.outcomes.items()},
    }
    _write(dumps(payload), args.out)
    if args.trace:
        Path(args.trace).write_text(dumps(trace_to_dict(res.trace)))
    return EXIT_OK


COMMANDS = {
    "duel": cmd_duel, "sweep": cmd_sweep, "fuzz": cmd_fuzz,
    "opt": cmd_opt, "verify": cmd_verify, "simulate": cmd_simulate,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except PolicyError as exc:
        print(f"policy error: {exc}", file=sys.stderr)
        return EXIT_POLICY
    except SourceError as exc:
        print(f"source error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (UsageError, SchedError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
