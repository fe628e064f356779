# %% [markdown]
# # Three jobs, one completion
#
# The adversary opens with a single job J0 = (r=0, p=1, s=2). Whatever the
# online policy does with it decides where the next job goes. Here we play
# the three reference policies against a depth-3 adversary and look at the
# realized instances, the branch history and an offline schedule that
# finishes all three jobs.

# %%
from revokesched import AdversaryConfig, adversary_source, opt_dp, opt_witness, simulate
from revokesched import make_policy, validate_witness


def show(policy_name, model="revoke"):
    source = adversary_source(AdversaryConfig(depth=3))
    result = simulate(make_policy(policy_name), source, model)
    print(f"--- {policy_name} ({model})")
    for job in result.realized:
        print(f"  J{job.id}: r={job.r} p={job.p} s={job.s} window=[{job.r}, {job.d})")
    for rec in source.branches:
        where = f"started at {rec.a}" if rec.a is not None else "never started"
        print(f"  level {rec.level}: {rec.branch:6s} (J{rec.level} {where})")
    for ev in result.trace.events:
        print(f"    t={str(ev.t):>8s}  {ev.kind.value:8s} J{ev.job}")
    witness = opt_witness(result.realized, source.branches)
    print("  ALG completed:", result.completed_count)
    print("  OPT (dp):     ", opt_dp(result.realized).count)
    print("  witness:      ", [(j, str(t)) for j, t in witness.assignments],
          "violations:", validate_witness(result.realized, witness))


# %% [markdown]
# Greedy commits to J0 at time 0. J1 is released a tenth later, entirely
# inside J0's run. Greedy ignores it, so once J1's latest start has passed the
# adversary drops J2 into the tail of J1's window. Greedy still finishes J0,
# but nothing else.

# %%
show("greedy-commit")

# %% [markdown]
# SRPT switches to every shorter job that would finish earlier. Each switch
# throws away the job it was running, so it ends with only the innermost job.

# %%
show("srpt")

# %% [markdown]
# The lazy policy never starts anything. All three jobs expire, and OPT
# still schedules all of them.

# %%
show("lazy")
