"""Time arithmetic, the job/trace/witness data model and its validators.

All instants and durations are exact rationals (``fractions.Fraction``).
Windows are half-open: a job occupies ``[start, start + p)``, so one job
may complete at ``t`` and another may start at the same ``t``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Optional, Union

from .errors import InputError, InvalidTimeError

Time = Fraction
TimeLike = Union[Fraction, int, str]


def normalize(num: int, den: int = 1) -> Time:
    """Return ``num/den`` in lowest terms with a positive denominator."""
    if den == 0:
        raise InvalidTimeError(f"zero denominator in {num}/{den}")
    return Fraction(num, den)


def as_time(value: TimeLike) -> Time:
    """Coerce an int, Fraction or ``"num/den"`` string to a Time.

    Floats are refused: they would smuggle rounding into the model.
    """
    if isinstance(value, bool):
        raise InvalidTimeError(f"not a time: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Rational):
        return normalize(value.numerator, value.denominator)
    if isinstance(value, str):
        return parse_time(value)
    raise InvalidTimeError(f"not an exact time: {value!r}")


def parse_time(text: str) -> Time:
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        return normalize(int(num), int(den) if sep else 1)
    except ValueError as exc:
        if isinstance(exc, InvalidTimeError):
            raise
        raise InvalidTimeError(f"cannot parse time {text!r}") from None


def format_time(t: Time) -> str:
    """Canonical ``"num/den"`` form, denominator always present."""
    return f"{t.numerator}/{t.denominator}"


@dataclass(frozen=True, order=True)
class Job:
    """A job ``(r, p, s)``: release, processing time and slack."""

    id: int
    r: Time
    p: Time
    s: Time

    def __post_init__(self):
        for name in ("r", "p", "s"):
            object.__setattr__(self, name, as_time(getattr(self, name)))
        if self.p <= 0:
            raise InputError(f"job {self.id}: processing time must be > 0, got {self.p}")
        if self.s < 0:
            raise InputError(f"job {self.id}: slack must be >= 0, got {self.s}")

    @property
    def d(self) -> Time:
        return self.r + self.p + self.s

    @property
    def latest(self) -> Time:
        return self.r + self.s

    @property
    def window(self) -> "Interval":
        return Interval(self.r, self.d)


def deadline(job: Job) -> Time:
    return job.r + job.p + job.s


def latest_start(job: Job) -> Time:
    """Last instant at which ``job`` may start (inclusive)."""
    return job.r + job.s


@dataclass(frozen=True)
class Interval:
    """Half-open interval ``[lo, hi)``."""

    lo: Time
    hi: Time

    def __post_init__(self):
        object.__setattr__(self, "lo", as_time(self.lo))
        object.__setattr__(self, "hi", as_time(self.hi))
        if not self.lo < self.hi:
            raise InputError(f"empty interval [{self.lo}, {self.hi})")

    @property
    def length(self) -> Time:
        return self.hi - self.lo

    def within(self, other: "Interval") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def overlaps(self, other: "Interval") -> bool:
        return self.lo < other.hi and other.lo < self.hi


@dataclass(frozen=True)
class Instance:
    jobs: tuple = ()

    def __post_init__(self):
        jobs = tuple(self.jobs)
        object.__setattr__(self, "jobs", jobs)
        for i, job in enumerate(jobs):
            if job.id != i:
                raise InputError(f"job ids must be dense from 0; position {i} has id {job.id}")
            if i and job.r < jobs[i - 1].r:
                raise InputError(f"job {i} released before job {i - 1}")

    def __len__(self):
        return len(self.jobs)

    def __iter__(self):
        return iter(self.jobs)

    def __getitem__(self, job_id: int) -> Job:
        return self.jobs[job_id]


class Model(str, Enum):
    REVOKE = "revoke"
    RESTART = "restart"


class EventKind(str, Enum):
    RELEASE = "release"
    START = "start"
    REVOKE = "revoke"
    COMPLETE = "complete"
    EXPIRE = "expire"


@dataclass(frozen=True)
class Event:
    t: Time
    kind: EventKind
    job: int


@dataclass(frozen=True)
class Trace:
    events: tuple = ()
    model: Model = Model.REVOKE

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))
        object.__setattr__(self, "model", Model(self.model))


@dataclass(frozen=True)
class Witness:
    """An explicit non-preemptive schedule: ``(job id, start)`` pairs."""

    assignments: tuple = ()

    def __post_init__(self):
        pairs = tuple((int(j), as_time(t)) for j, t in self.assignments)
        object.__setattr__(self, "assignments", pairs)

    def __len__(self):
        return len(self.assignments)

    def as_dict(self) -> dict:
        return dict(self.assignments)


@dataclass(frozen=True)
class Violation:
    rule: str
    message: str
    index: Optional[int] = field(default=None, compare=False)

    def __str__(self):
        where = f" (event {self.index})" if self.index is not None else ""
        return f"{self.rule}: {self.message}{where}"


def validate_trace(trace: Trace, inst: Instance) -> list:
    """Check a trace against the machine rules; returns a list of Violations.

    An empty list means the trace is a legal run under ``trace.model``.
    """
    out = []
    known = {job.id: job for job in inst}
    released = set()
    started = set()
    completed = set()
    running = None  # (job id, start)
    prev_t = None

    for i, ev in enumerate(trace.events):
        if prev_t is not None and ev.t < prev_t:
            out.append(Violation("time-order", f"t={ev.t} after t={prev_t}", i))
        prev_t = ev.t if prev_t is None else max(prev_t, ev.t)
        job = known.get(ev.job)
        if job is None:
            out.append(Violation("unknown-job", f"job {ev.job} not in instance", i))
            continue

        if ev.kind is EventKind.RELEASE:
            if ev.t != job.r:
                out.append(Violation("release", f"job {job.id} released at {ev.t}, r={job.r}", i))
            released.add(job.id)
            continue
        if job.id not in released:
            out.append(Violation("unreleased", f"{ev.kind.value} of unreleased job {job.id}", i))

        if ev.kind is EventKind.START:
            if running is not None:
                out.append(Violation(
                    "overlap", f"job {job.id} started while job {running[0]} is running", i))
            if ev.t < job.r:
                out.append(Violation("release", f"job {job.id} started at {ev.t} < r={job.r}", i))
            if ev.t > job.latest:
                out.append(Violation(
                    "latest-start", f"job {job.id} started at {ev.t} > r+s={job.latest}", i))
            if job.id in started:
                if trace.model is Model.REVOKE:
                    out.append(Violation("no-restart", f"job {job.id} started twice", i))
                elif job.id in completed:
                    out.append(Violation("no-restart", f"completed job {job.id} restarted", i))
            started.add(job.id)
            running = (job.id, ev.t)
        elif ev.kind is EventKind.REVOKE:
            if running is None or running[0] != job.id:
                out.append(Violation("revoke", f"job {job.id} revoked but not running", i))
            else:
                running = None
        elif ev.kind is EventKind.COMPLETE:
            if running is None or running[0] != job.id:
                out.append(Violation("completion", f"job {job.id} completed but not running", i))
            else:
                if ev.t != running[1] + job.p:
                    out.append(Violation(
                        "completion",
                        f"job {job.id} completed at {ev.t}, expected {running[1] + job.p}", i))
                completed.add(job.id)
                running = None
        elif ev.kind is EventKind.EXPIRE:
            if ev.t < job.latest:
                out.append(Violation("expire", f"job {job.id} expired before r+s={job.latest}", i))
            if running is not None and running[0] == job.id:
                out.append(Violation("expire", f"running job {job.id} expired", i))
    return out


def validate_witness(inst: Instance, witness: Witness) -> list:
    """Violations of a claimed schedule; empty iff every job starts inside
    ``[r, r+s]`` and processing intervals are pairwise disjoint."""
    out = []
    seen = set()
    placed = []
    for job_id, start in witness.assignments:
        if not 0 <= job_id < len(inst):
            raise InputError(f"witness references unknown job {job_id}")
        job = inst[job_id]
        if job_id in seen:
            out.append(Violation("duplicate", f"job {job_id} assigned twice"))
        seen.add(job_id)
        if start < job.r:
            out.append(Violation("release", f"job {job_id} starts at {start} < r={job.r}"))
        if start > job.latest:
            out.append(Violation(
                "latest-start", f"job {job_id} starts at {start} > r+s={job.latest}"))
        placed.append((start, start + job.p, job_id))
    placed.sort()
    reach, holder = None, None  # furthest end so far and its job
    for lo, hi, job_id in placed:
        if reach is not None and lo < reach:
            out.append(Violation("overlap", f"jobs {holder} and {job_id} overlap at {lo}"))
        if reach is None or hi > reach:
            reach, holder = hi, job_id
    return out


def make_instance(triples: Iterable) -> Instance:
    """Build an instance from ``(r, p, s)`` triples, assigning ids in order."""
    return Instance(tuple(Job(i, r, p, s) for i, (r, p, s) in enumerate(triples)))
