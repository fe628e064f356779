"""Adaptive lower-bound adversary for the preemption-revoke model.

The adversary releases ``J_0`` and then, level by level, nests a new job
inside the previous one depending on what the online policy did:

* run branch: the policy started ``J_i`` at ``a_i``. The next job is
  released at ``a_i + eps_i`` with its whole window inside ``[a_i, a_i + p_i)``.
* ignore branch: ``J_i`` was not started by its latest start ``L_i``. The
  next job is released at ``L_i + eps_i`` with its window inside ``[L_i, d_i)``.

``eps_i = eps_frac * p_i``. Every emitted job has ``s = 2p`` and its window
ends exactly at the right end of the available interval.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .engine import JobSource
from .errors import ConstructionError, InputError
from .model import (Event, EventKind, Instance, Interval, Job, Time, TimeLike,
                    Witness, as_time, format_time)

RUN = "run"
IGNORE = "ignore"


def side_gap_start(job: Job, inner: Interval) -> Time:
    """Start time placing ``job`` in a side gap of its window around ``inner``.

    Requires ``s >= 2p``, ``inner`` inside ``[r, d)`` and ``|inner| <= p``.
    Returns ``inner.hi`` when that still meets the latest start, otherwise
    ``r`` (the left gap then has room for the whole job).
    """
    if job.s < 2 * job.p:
        raise InputError(f"side gap needs s >= 2p, got s={job.s}, p={job.p}")
    if not inner.within(job.window):
        raise InputError(f"[{inner.lo}, {inner.hi}) is not inside the window of job {job.id}")
    if inner.length > job.p:
        raise InputError(f"inner interval longer than p={job.p}")
    if inner.hi <= job.latest:
        return inner.hi
    return job.r


def nested_job(available: Interval, eps: TimeLike, next_id: int) -> Job:
    """Job released ``eps`` after ``available.lo`` whose window ends at
    ``available.hi``, with ``p = (d - r) / 3`` and ``s = 2p``."""
    eps = as_time(eps)
    if eps <= 0:
        raise ConstructionError(f"eps must be positive, got {eps}")
    if eps >= available.length:
        raise ConstructionError(f"eps={eps} swallows the window of length {available.length}")
    r = available.lo + eps
    p = (available.hi - r) / 3
    return Job(next_id, r, p, 2 * p)


@dataclass(frozen=True)
class AdversaryConfig:
    depth: int = 3
    eps_frac: Fraction = Fraction(1, 10)
    base: Job = Job(0, 0, 1, 2)

    def __post_init__(self):
        object.__setattr__(self, "eps_frac", as_time(self.eps_frac))
        if self.depth < 1:
            raise InputError(f"depth must be >= 1, got {self.depth}")
        if not 0 < self.eps_frac < Fraction(1, 3):
            raise InputError(f"eps_frac must lie in (0, 1/3), got {self.eps_frac}")
        if self.base.id != 0:
            raise InputError("base job must have id 0")
        if self.base.s < 2 * self.base.p:
            raise InputError("base job needs s >= 2p")


@dataclass(frozen=True)
class BranchRecord:
    """How job ``level + 1`` was placed relative to job ``level``."""

    level: int
    branch: str
    a: Optional[Time]
    job: Job

    def to_dict(self) -> dict:
        return {"level": self.level, "branch": self.branch,
                "a": None if self.a is None else format_time(self.a)}


class AdversarySource(JobSource):
    """Adaptive job source; one instance per simulation."""

    def __init__(self, cfg: AdversaryConfig):
        self.cfg = cfg
        self.jobs = []
        self.branches = []
        self._resolved = set()  # levels whose branch is decided

    @property
    def realized(self) -> Instance:
        return Instance(tuple(self.jobs))

    def _eps(self, job: Job) -> Time:
        return self.cfg.eps_frac * job.p

    def _emit(self, job: Job, sched):
        self.jobs.append(job)
        sched.release(job)
        if len(self.jobs) < self.cfg.depth:
            sched.trigger(job.latest + self._eps(job) / 2, job.id)

    def begin(self, sched):
        self._emit(self.cfg.base, sched)

    def observe(self, event: Event, sched):
        if event.kind is not EventKind.START:
            return
        level = event.job
        if level in self._resolved or level != len(self.jobs) - 1:
            return
        if len(self.jobs) >= self.cfg.depth:
            return
        outer = self.jobs[level]
        self._resolved.add(level)
        inner = nested_job(Interval(event.t, event.t + outer.p), self._eps(outer), level + 1)
        self.branches.append(BranchRecord(level, RUN, event.t, inner))
        self._emit(inner, sched)

    def fire(self, t, level, sched):
        if level in self._resolved:
            return
        outer = self.jobs[level]
        self._resolved.add(level)
        inner = nested_job(Interval(outer.latest, outer.d), self._eps(outer), level + 1)
        self.branches.append(BranchRecord(level, IGNORE, None, inner))
        self._emit(inner, sched)


def adversary_source(cfg: AdversaryConfig) -> AdversarySource:
    return AdversarySource(cfg)


def opt_witness(realized: Instance, branches) -> Witness:
    """Offline schedule completing every job of an adversary-built instance.

    The innermost job runs at its release; each enclosing job is then placed
    in a side gap (run branch) or at its own release (ignore branch).
    Assignments are listed innermost first.
    """
    jobs = list(realized)
    branches = list(branches)
    if not jobs:
        return Witness(())
    if len(branches) != len(jobs) - 1:
        raise InputError(f"{len(jobs)} jobs need {len(jobs) - 1} branch records, got {len(branches)}")
    for i, rec in enumerate(branches):
        if rec.level != i or rec.job != jobs[i + 1]:
            raise InputError(f"branch record {i} does not match the realized instance")
        if rec.branch not in (RUN, IGNORE):
            raise InputError(f"unknown branch {rec.branch!r}")
        if not jobs[i + 1].window.within(jobs[i].window):
            raise InputError(f"job {i + 1} is not nested inside job {i}")

    starts = {jobs[-1].id: jobs[-1].r}
    for rec in reversed(branches):
        outer = jobs[rec.level]
        if rec.branch == RUN:
            starts[outer.id] = side_gap_start(outer, rec.job.window)
        else:
            starts[outer.id] = outer.r
    return Witness(tuple(starts.items()))
