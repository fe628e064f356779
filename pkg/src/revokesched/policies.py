"""Reference deterministic online policies.

Every factory returns a fresh handle; handles keep per-run state and must
not be shared between simulations.
"""

from __future__ import annotations

from .engine import (CONTINUE, MachineState, RevokeAndStart, StartJob,
                     feasible_set)
from .errors import InputError
from .model import Event, EventKind

MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    """One splitmix64 step applied to ``x`` (increment then finalize)."""
    z = (x + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class GreedyCommit:
    """Starts the earliest-released feasible job whenever idle; never revokes."""

    name = "greedy-commit"

    def decide(self, state: MachineState, event):
        if not state.idle:
            return CONTINUE
        ready = feasible_set(state)
        if not ready:
            return CONTINUE
        return StartJob(min(ready, key=lambda j: (state.job(j).r, j)))


class Lazy:
    name = "lazy"

    def decide(self, state, event):
        return CONTINUE


class SRPT:
    """Shortest remaining processing time, adapted to lost-on-revoke jobs.

    Idle: start the feasible job with the least ``p``. Running: on a release,
    switch to the new job only if it would finish strictly earlier than the
    current one.
    """

    name = "srpt"

    def decide(self, state: MachineState, event):
        ready = feasible_set(state)
        if state.idle:
            if not ready:
                return CONTINUE
            return StartJob(min(ready, key=lambda j: (state.job(j).p, j)))
        if isinstance(event, Event) and event.kind is EventKind.RELEASE and event.job in ready:
            cur, started = state.running
            new = state.job(event.job)
            if state.now + new.p < started + state.job(cur).p:
                return RevokeAndStart(new.id)
        return CONTINUE


class Seeded:
    """Pseudo-random but fully deterministic choice among all legal actions.

    At each consultation the legal actions are listed canonically
    (continue, then start or revoke-and-start for each feasible id in
    ascending order) and index ``splitmix64(seed ^ counter) % len`` is taken.
    """

    def __init__(self, seed: int):
        if not 0 <= seed <= MASK64:
            raise InputError(f"seed must be an unsigned 64-bit integer, got {seed}")
        self.seed = seed
        self.counter = 0
        self.name = f"seeded:{seed}"

    def actions(self, state: MachineState) -> list:
        ids = sorted(feasible_set(state))
        make = StartJob if state.idle else RevokeAndStart
        return [CONTINUE] + [make(j) for j in ids]

    def decide(self, state, event):
        options = self.actions(state)
        pick = splitmix64(self.seed ^ self.counter) % len(options)
        self.counter += 1
        return options[pick]


def policy_greedy_commit() -> GreedyCommit:
    return GreedyCommit()


def policy_lazy() -> Lazy:
    return Lazy()


def policy_srpt() -> SRPT:
    return SRPT()


def policy_seeded(seed: int) -> Seeded:
    return Seeded(seed)


STANDARD = ("greedy-commit", "lazy", "srpt")


def make_policy(name: str):
    """Build a policy from its CLI name: greedy-commit, lazy, srpt, seeded:<u64>."""
    if name == "greedy-commit":
        return GreedyCommit()
    if name == "lazy":
        return Lazy()
    if name == "srpt":
        return SRPT()
    if name.startswith("seeded:"):
        try:
            return Seeded(int(name.split(":", 1)[1]))
        except ValueError:
            raise InputError(f"bad seed in policy name {name!r}") from None
    raise InputError(f"unknown policy {name!r}")
