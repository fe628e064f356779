"""Duels, sweeps and fuzz runs of policies against the adaptive adversary."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from .adversary import AdversaryConfig, adversary_source, opt_witness
from .engine import simulate
from .jsonio import instance_to_dict, trace_to_dict, witness_to_dict
from .model import Instance, Job, Model, Trace, Witness, format_time
from .opt import opt_dp
from .policies import make_policy

DEFAULT_BASE = Job(0, 0, 1, 2)


def ratio(completed: int, opt: int) -> Fraction:
    """ALG/OPT, reported as a fraction at most 1 (1 when OPT is empty)."""
    return Fraction(completed, opt) if opt else Fraction(1)


@dataclass(frozen=True)
class DuelReport:
    policy: str
    model: Model
    depth: int
    instance: Instance
    trace: Trace
    completed: int
    opt: int
    ratio: Fraction
    branches: tuple
    witness: Witness
    dp_witness: Witness

    def to_dict(self) -> dict:
        return {
            "policy": self.policy,
            "model": self.model.value,
            "depth": self.depth,
            "instance": instance_to_dict(self.instance),
            "trace": trace_to_dict(self.trace),
            "completed": self.completed,
            "opt": self.opt,
            "ratio": format_time(self.ratio),
            "branches": [b.to_dict() for b in self.branches],
            "witness": witness_to_dict(self.witness),
        }


def duel(policy: str, depth: int, model=Model.REVOKE, eps_frac=Fraction(1, 10),
         base: Job = DEFAULT_BASE) -> DuelReport:
    """Play ``policy`` against the depth-``depth`` adversary and score it."""
    handle = make_policy(policy)
    source = adversary_source(AdversaryConfig(depth, eps_frac, base))
    result = simulate(handle, source, model)
    best = opt_dp(result.realized)
    return DuelReport(
        policy=policy,
        model=Model(model),
        depth=depth,
        instance=result.realized,
        trace=result.trace,
        completed=result.completed_count,
        opt=best.count,
        ratio=ratio(result.completed_count, best.count),
        branches=tuple(source.branches),
        witness=opt_witness(result.realized, source.branches),
        dp_witness=best.witness,
    )


@dataclass(frozen=True)
class SweepRow:
    k: int
    policy: str
    completed: int
    opt: int
    ratio: Fraction


def sweep(policies, depths, model=Model.REVOKE, eps_frac=Fraction(1, 10),
          base: Job = DEFAULT_BASE) -> list:
    rows = []
    for k in depths:
        for name in policies:
            rep = duel(name, k, model, eps_frac, base)
            rows.append(SweepRow(k, name, rep.completed, rep.opt, rep.ratio))
    rows.sort(key=lambda row: (row.k, row.policy))
    return rows


def sweep_csv(rows) -> str:
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(["k", "policy", "completed", "opt", "ratio"])
    for row in rows:
        out.writerow([row.k, row.policy, row.completed, row.opt, format_time(row.ratio)])
    return buf.getvalue()


@dataclass(frozen=True)
class FuzzSummary:
    depth: int
    model: Model
    seeds: tuple  # inclusive (lo, hi)
    runs: int
    violations: tuple  # (seed, completed, opt)

    @property
    def passed(self) -> int:
        return self.runs - len(self.violations)

    def to_dict(self) -> dict:
        return {
            "depth": self.depth,
            "model": self.model.value,
            "seeds": list(self.seeds),
            "runs": self.runs,
            "passed": self.passed,
            "violations": [{"seed": s, "completed": c, "opt": o} for s, c, o in self.violations],
        }


def fuzz(seed_lo: int, seed_hi: int, depth: int, model=Model.REVOKE,
         eps_frac=Fraction(1, 10), base: Job = DEFAULT_BASE) -> FuzzSummary:
    """Duel every seeded policy in ``[seed_lo, seed_hi]``.

    A run violates the bound when ALG completes more than one job or OPT
    differs from ``depth``.
    """
    bad = []
    for seed in range(seed_lo, seed_hi + 1):
        rep = duel(f"seeded:{seed}", depth, model, eps_frac, base)
        if rep.completed > 1 or rep.opt != depth:
            bad.append((seed, rep.completed, rep.opt))
    return FuzzSummary(depth, Model(model), (seed_lo, seed_hi), seed_hi - seed_lo + 1, tuple(bad))
