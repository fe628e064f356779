"""Event-driven single-machine simulator.

A job source (a fixed instance or an adaptive adversary) feeds releases to
the machine, and an online policy is consulted once after every processed
event. Events sharing a timestamp are handled in the order Complete,
Release, adversary trigger, Alarm, Expire, with ascending job id inside
each class.

Expire is synthesized by the engine at a job's latest start ``r + s``.
It is handled after everything else at that instant, so the job can
still be started at exactly ``r + s``.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field, replace
from typing import Optional, Protocol

from .errors import PolicyError, SourceError
from .model import Event, EventKind, Instance, Job, Model, Time, Trace, as_time

# event classes, in tie-break order
COMPLETE, RELEASE, TRIGGER, ALARM, EXPIRE = range(5)


# -- actions ---------------------------------------------------------------

@dataclass(frozen=True)
class Continue:
    pass


@dataclass(frozen=True)
class StartJob:
    job: int


@dataclass(frozen=True)
class RevokeAndStart:
    job: int


@dataclass(frozen=True)
class RevokeAndIdle:
    pass


@dataclass(frozen=True)
class SetAlarm:
    t: Time

    def __post_init__(self):
        object.__setattr__(self, "t", as_time(self.t))


CONTINUE = Continue()
REVOKE_AND_IDLE = RevokeAndIdle()


@dataclass(frozen=True)
class Alarm:
    """Handed to the policy when one of its own alarms fires."""

    t: Time


# -- machine state ---------------------------------------------------------

@dataclass(frozen=True)
class MachineState:
    """Everything a policy is allowed to see.

    ``lost`` holds jobs that can never be started again: revoked jobs in the
    revoke model, and any job whose latest start has passed while it was
    not running.
    """

    now: Time
    model: Model = Model.REVOKE
    running: Optional[tuple] = None  # (job id, start)
    released: dict = field(default_factory=dict)  # id -> Job
    lost: frozenset = frozenset()
    completed: frozenset = frozenset()
    started: frozenset = frozenset()

    @property
    def idle(self) -> bool:
        return self.running is None

    def job(self, job_id: int) -> Job:
        return self.released[job_id]


def feasible_set(st: MachineState) -> set:
    """Ids of released jobs that could be started right now."""
    busy = st.running[0] if st.running else None
    return {
        j.id for j in st.released.values()
        if st.now <= j.latest and j.id not in st.completed
        and j.id not in st.lost and j.id != busy
    }


def _revoke(st: MachineState) -> tuple:
    job_id, _ = st.running
    job = st.released[job_id]
    lost = st.lost
    if st.model is Model.REVOKE or st.now > job.latest:
        lost = lost | {job_id}
    st = replace(st, running=None, lost=lost)
    return st, Event(st.now, EventKind.REVOKE, job_id)


def _start(st: MachineState, job_id: int) -> tuple:
    if job_id not in feasible_set(st):
        raise PolicyError(f"t={st.now}: job {job_id} is not feasible")
    st = replace(st, running=(job_id, st.now), started=st.started | {job_id})
    return st, Event(st.now, EventKind.START, job_id)


def apply_action(st: MachineState, action) -> tuple:
    """Apply a policy action; returns ``(new_state, emitted_events)``.

    Raises PolicyError for any action the machine cannot carry out.
    """
    if isinstance(action, Continue):
        return st, []
    if isinstance(action, SetAlarm):
        if action.t <= st.now:
            raise PolicyError(f"t={st.now}: alarm at {action.t} is not in the future")
        return st, []
    if isinstance(action, StartJob):
        if not st.idle:
            raise PolicyError(
                f"t={st.now}: StartJob({action.job}) while job {st.running[0]} runs")
        st, ev = _start(st, action.job)
        return st, [ev]
    if isinstance(action, (RevokeAndStart, RevokeAndIdle)):
        if st.idle:
            raise PolicyError(f"t={st.now}: {type(action).__name__} while idle")
        if isinstance(action, RevokeAndStart) and action.job not in feasible_set(st):
            raise PolicyError(f"t={st.now}: job {action.job} is not feasible")
        st, revoke = _revoke(st)
        if isinstance(action, RevokeAndIdle):
            return st, [revoke]
        st, start = _start(st, action.job)
        return st, [revoke, start]
    raise PolicyError(f"unknown action {action!r}")


# -- policies and sources --------------------------------------------------

class Policy(Protocol):
    name: str

    def decide(self, state: MachineState, event) -> object:
        ...


class Scheduler:
    """Handle through which a job source plans releases and triggers."""

    def __init__(self, sim):
        self._sim = sim

    def release(self, job: Job):
        self._sim._push(job.r, RELEASE, job.id, job)

    def trigger(self, t: Time, tag=None):
        self._sim._push(as_time(t), TRIGGER, 0, tag)


class JobSource:
    """Base job source. Adaptive sources override the observation hooks."""

    def begin(self, sched: Scheduler):
        raise NotImplementedError

    def observe(self, event: Event, sched: Scheduler):
        pass

    def fire(self, t: Time, tag, sched: Scheduler):
        pass


class StaticSource(JobSource):
    def __init__(self, instance: Instance):
        self.instance = instance

    def begin(self, sched):
        for job in self.instance:
            sched.release(job)


# -- simulation ------------------------------------------------------------

@dataclass
class SimulationResult:
    trace: Trace
    realized: Instance
    completed_count: int
    outcomes: dict  # job id -> "completed" | "revoked" | "expired"
    processed: int = 0
    consultations: int = 0


class _Run:
    def __init__(self, policy, source, model, max_events):
        self.policy = policy
        self.source = source
        self.model = Model(model)
        self.max_events = max_events
        self.queue = []
        self.seq = itertools.count()
        self.events = []
        self.jobs = []
        self.outcomes = {}
        self.processed = 0
        self.consultations = 0

    def _push(self, t, cls, job_id, payload):
        heapq.heappush(self.queue, (t, cls, job_id, next(self.seq), payload))

    def run(self) -> SimulationResult:
        sched = Scheduler(self)
        self.source.begin(sched)
        st = MachineState(now=self.queue[0][0] if self.queue else as_time(0), model=self.model)
        last_release = None

        while self.queue:
            t, cls, job_id, _, payload = heapq.heappop(self.queue)
            if t < st.now:
                raise SourceError(f"event scheduled in the past: t={t} < now={st.now}")
            st = replace(st, now=t)

            if cls == TRIGGER:
                self.source.fire(t, payload, sched)
                continue
            if cls == COMPLETE:
                if st.running != (job_id, payload):
                    continue  # revoked before finishing
                st = replace(st, running=None, completed=st.completed | {job_id})
                self.outcomes[job_id] = "completed"
                trigger = self._emit(Event(t, EventKind.COMPLETE, job_id), sched)
            elif cls == RELEASE:
                job = payload
                if last_release is not None and job.r < last_release:
                    raise SourceError(f"job {job.id} released at {job.r} after {last_release}")
                if job.id != len(self.jobs):
                    raise SourceError(f"expected job id {len(self.jobs)}, got {job.id}")
                last_release = job.r
                self.jobs.append(job)
                st = replace(st, released={**st.released, job.id: job})
                self._push(job.latest, EXPIRE, job.id, None)
                trigger = self._emit(Event(t, EventKind.RELEASE, job.id), sched)
            elif cls == ALARM:
                trigger = Alarm(t)
            else:  # EXPIRE
                if (job_id in st.completed or job_id in st.lost
                        or (st.running and st.running[0] == job_id)
                        or (self.model is Model.REVOKE and job_id in st.started)):
                    continue
                st = replace(st, lost=st.lost | {job_id})
                self.outcomes[job_id] = "expired"
                trigger = self._emit(Event(t, EventKind.EXPIRE, job_id), sched)

            self.processed += 1
            if self.processed > self.max_events:
                raise PolicyError(f"run exceeded {self.max_events} events")
            st = self._consult(st, trigger, sched)

        return SimulationResult(
            trace=Trace(tuple(self.events), self.model),
            realized=Instance(tuple(self.jobs)),
            completed_count=sum(1 for v in self.outcomes.values() if v == "completed"),
            outcomes=dict(sorted(self.outcomes.items())),
            processed=self.processed,
            consultations=self.consultations,
        )

    def _emit(self, event, sched):
        self.events.append(event)
        self.source.observe(event, sched)
        return event

    def _consult(self, st, trigger, sched):
        self.consultations += 1
        action = self.policy.decide(st, trigger)
        st, emitted = apply_action(st, action)
        if isinstance(action, SetAlarm):
            self._push(action.t, ALARM, 0, None)
        for ev in emitted:
            if ev.kind is EventKind.REVOKE:
                self.outcomes[ev.job] = "revoked"
            elif ev.kind is EventKind.START:
                self.outcomes.pop(ev.job, None)
                self._push(ev.t + st.job(ev.job).p, COMPLETE, ev.job, ev.t)
            self._emit(ev, sched)
        return st


def simulate(policy, source, model=Model.REVOKE, max_events: int = 1_000_000) -> SimulationResult:
    """Run ``policy`` against ``source`` until the machine goes quiet.

    ``source`` may be an Instance (replayed statically) or a JobSource.
    Raises PolicyError if the policy requests an infeasible action and
    SourceError if the source breaks the non-decreasing release order.
    """
    if isinstance(source, Instance):
        source = StaticSource(source)
    return _Run(policy, source, model, max_events).run()
