# %% [markdown]
# # Nesting deeper: ratio 1/k
#
# Each level of the adversary nests a job inside the previous one with
# processing time shrinking by roughly 3/10. The online policy still
# completes at most one job, while the offline optimum completes all k.

# %%
from revokesched import sweep
from revokesched.harness import sweep_csv

rows = sweep(["greedy-commit", "lazy", "srpt"], range(3, 13))
print(sweep_csv(rows))

# %% [markdown]
# Processing times shrink geometrically but stay exact. Here are the
# innermost job's numbers at depth 12 for SRPT:

# %%
from revokesched import duel

rep = duel("srpt", 12)
inner = rep.instance.jobs[-1]
print("innermost p =", inner.p, "~", float(inner.p))
print("ratio =", rep.ratio)

# %% [markdown]
# A family of seeded pseudo-random policies stands in for "any deterministic
# policy". None of them beats the bound.

# %%
from revokesched import fuzz

summary = fuzz(0, 199, depth=6)
print(f"{summary.passed}/{summary.runs} seeded policies completed at most one job")
