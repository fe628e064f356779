"""Online throughput scheduling under preemption-revoke: simulator,
adaptive lower-bound adversary and exact offline optimum."""

from .adversary import (AdversaryConfig, BranchRecord, adversary_source,
                        nested_job, opt_witness, side_gap_start)
from .engine import (CONTINUE, REVOKE_AND_IDLE, Continue, MachineState,
                     RevokeAndIdle, RevokeAndStart, SetAlarm, SimulationResult,
                     StartJob, StaticSource, apply_action, feasible_set, simulate)
from .errors import (CapacityError, ConstructionError, InputError,
                     InvalidTimeError, PolicyError, SchedError, SourceError)
from .harness import DuelReport, SweepRow, duel, fuzz, sweep
from .model import (Event, EventKind, Instance, Interval, Job, Model, Time,
                    Trace, Violation, Witness, deadline, format_time,
                    latest_start, make_instance, normalize, parse_time,
                    validate_trace, validate_witness)
from .opt import OptResult, earliest_finish, opt_brute, opt_dp
from .policies import (make_policy, policy_greedy_commit, policy_lazy,
                       policy_seeded, policy_srpt, splitmix64)

__version__ = "0.1.0"
