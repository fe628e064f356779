# %% [markdown]
# # Revoke vs restart
#
# The adversary is the same in both runs. Under the revoke model a
# preempted job is gone for good. Under the restart model SRPT can come back
# to the outer jobs after finishing the innermost one, and it completes
# everything.

# %%
from revokesched import duel

for k in range(3, 9):
    revoke = duel("srpt", k, model="revoke")
    restart = duel("srpt", k, model="restart")
    print(f"k={k}:  revoke {revoke.completed}/{revoke.opt}   restart {restart.completed}/{restart.opt}")

# %% [markdown]
# The restart trace at depth 3: J2 finishes at 22/100, then J1 restarts at
# 22/100 and J0 at 52/100, both before their latest starts.

# %%
rep = duel("srpt", 3, model="restart")
for ev in rep.trace.events:
    print(f"t={str(ev.t):>7s}  {ev.kind.value:8s} J{ev.job}")
