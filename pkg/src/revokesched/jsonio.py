"""JSON encoding of the data model.

Times are always strings ``"num/den"`` so files diff bit-exactly.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import InputError
from .model import (Event, EventKind, Instance, Job, Model, Trace, Witness,
                    format_time, parse_time)


def job_to_dict(job: Job) -> dict:
    return {"id": job.id, "r": format_time(job.r), "p": format_time(job.p),
            "s": format_time(job.s)}


def instance_to_dict(inst: Instance) -> dict:
    return {"jobs": [job_to_dict(j) for j in inst]}


def trace_to_dict(trace: Trace) -> dict:
    return {
        "model": trace.model.value,
        "events": [{"t": format_time(e.t), "kind": e.kind.value, "job": e.job}
                   for e in trace.events],
    }


def witness_to_dict(w: Witness) -> dict:
    return {"assignments": [{"job": j, "start": format_time(t)} for j, t in w.assignments]}


def _field(obj, key, where):
    try:
        return obj[key]
    except (KeyError, TypeError, IndexError):
        raise InputError(f"{where}: missing field {key!r}") from None


def instance_from_dict(data) -> Instance:
    jobs = []
    for raw in _field(data, "jobs", "instance"):
        jobs.append(Job(int(_field(raw, "id", "job")), parse_time(_field(raw, "r", "job")),
                        parse_time(_field(raw, "p", "job")), parse_time(_field(raw, "s", "job"))))
    return Instance(tuple(jobs))


def trace_from_dict(data) -> Trace:
    try:
        model = Model(_field(data, "model", "trace"))
        events = [Event(parse_time(_field(e, "t", "event")), EventKind(_field(e, "kind", "event")),
                        int(_field(e, "job", "event")))
                  for e in _field(data, "events", "trace")]
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return Trace(tuple(events), model)


def witness_from_dict(data) -> Witness:
    pairs = [(int(_field(a, "job", "assignment")), parse_time(_field(a, "start", "assignment")))
             for a in _field(data, "assignments", "witness")]
    return Witness(tuple(pairs))


def dumps(obj: dict) -> str:
    """Deterministic JSON text; key order is the insertion order of ``obj``."""
    return json.dumps(obj, indent=2) + "\n"


def load_json(path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON ({exc})") from None
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
