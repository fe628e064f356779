"""Exact offline optimum for unweighted single-machine throughput.

``opt_dp`` runs a subset dynamic program over earliest finishing times;
``opt_brute`` enumerates orderings and serves as an independent oracle.
Both schedule non-preemptively under release and latest-start limits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CapacityError
from .model import Instance, Time, Witness, format_time

DP_CAP = 20
BRUTE_CAP = 8
NEG_INF = float("-inf")  # machine free since forever: max(NEG_INF, r) == r


@dataclass(frozen=True)
class OptResult:
    count: int
    witness: Witness
    method: str

    def to_dict(self) -> dict:
        from .jsonio import witness_to_dict
        return {"count": self.count, "witness": witness_to_dict(self.witness),
                "method": self.method}


def _scaled(inst: Instance):
    """Integer (r, p, latest) per job after clearing all denominators."""
    scale = 1
    for j in inst:
        for v in (j.r, j.p, j.s):
            scale = math.lcm(scale, v.denominator)
    rows = [(int(j.r * scale), int(j.p * scale), int(j.latest * scale)) for j in inst]
    return scale, rows


def earliest_finish_table(inst: Instance):
    """``finish[mask]`` is the least completion time of the jobs in ``mask``
    scheduled back to back, or None if no feasible order exists.
    ``last[mask]`` is the job finishing last in that schedule.

    Values are integers in units of ``1/scale``.
    """
    n = len(inst)
    scale, rows = _scaled(inst)
    size = 1 << n
    finish = [None] * size
    last = [-1] * size
    finish[0] = NEG_INF
    for mask in range(1, size):
        best, arg = None, -1
        m = mask
        while m:
            low = m & -m
            j = low.bit_length() - 1
            m ^= low
            prev = finish[mask ^ low]
            if prev is None:
                continue
            r, p, latest = rows[j]
            start = r if prev < r else prev
            if start > latest:
                continue
            end = start + p
            if best is None or end < best:
                best, arg = end, j
        finish[mask] = best
        last[mask] = arg
    return scale, finish, last


def earliest_finish(inst: Instance, ids) -> Time | None:
    """Least completion time of the job set ``ids``; None if infeasible."""
    scale, finish, _ = earliest_finish_table(inst)
    mask = sum(1 << j for j in set(ids))
    f = finish[mask]
    if f is None:
        return None
    if f == NEG_INF:
        return f
    return Time(f, scale)


def opt_dp(inst: Instance, cap: int = DP_CAP) -> OptResult:
    """Maximum number of jobs completable on time, with a witness schedule."""
    n = len(inst)
    if n > cap:
        raise CapacityError(f"opt_dp handles at most {cap} jobs, got {n}")
    scale, finish, last = earliest_finish_table(inst)
    best_mask, best_key = 0, (0, 0)
    for mask in range(1, 1 << n):
        f = finish[mask]
        if f is None:
            continue
        key = (bin(mask).count("1"), -f)
        if key > best_key:
            best_mask, best_key = mask, key

    order = []
    mask = best_mask
    while mask:
        j = last[mask]
        order.append(j)
        mask ^= 1 << j
    order.reverse()

    t = None
    assignments = []
    for j in order:
        job = inst[j]
        start = job.r if t is None or t < job.r else t
        assignments.append((j, start))
        t = start + job.p
    return OptResult(len(order), Witness(tuple(assignments)), "dp")


def _brute(inst: Instance, cap: int):
    n = len(inst)
    if n > cap:
        raise CapacityError(f"opt_brute handles at most {cap} jobs, got {n}")
    best = []
    jobs = list(inst)

    def extend(seq, used, t):
        nonlocal best
        if len(seq) > len(best):
            best = list(seq)
        if len(best) == n:
            return
        for job in jobs:
            if job.id in used:
                continue
            start = job.r if t is None or t < job.r else t
            if start > job.latest:
                continue
            seq.append((job.id, start))
            used.add(job.id)
            extend(seq, used, start + job.p)
            used.discard(job.id)
            seq.pop()

    extend([], set(), None)
    return best


def opt_brute(inst: Instance, cap: int = BRUTE_CAP) -> int:
    """Optimum by enumerating every ordering of every subset.

    An ordering whose prefix already misses a latest start is dropped along
    with all its extensions, which is the same as checking it in full.
    """
    return len(_brute(inst, cap))


def opt_brute_result(inst: Instance, cap: int = BRUTE_CAP) -> OptResult:
    best = _brute(inst, cap)
    return OptResult(len(best), Witness(tuple(best)), "brute")


def describe(result: OptResult) -> str:
    body = ", ".join(f"J{j}@{format_time(t)}" for j, t in result.witness.assignments)
    return f"{result.method}: {result.count} jobs [{body}]"
