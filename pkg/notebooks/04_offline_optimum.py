# %% [markdown]
# # The offline optimum
#
# `opt_dp` computes the earliest finishing time for every subset of jobs and
# keeps the largest feasible subset. `opt_brute` tries every order of every
# subset. On small instances the two must agree.

# %%
import random
from fractions import Fraction

from revokesched import make_instance, opt_brute, opt_dp, validate_witness

rng = random.Random(0)


def random_instance(n):
    rows = sorted(
        (Fraction(rng.randint(0, 20), 2), Fraction(rng.randint(1, 6), 2), Fraction(rng.randint(0, 8), 2))
        for _ in range(n)
    )
    return make_instance(rows)


for _ in range(5):
    inst = random_instance(rng.randint(3, 8))
    res = opt_dp(inst)
    print(f"n={len(inst)}  dp={res.count}  brute={opt_brute(inst)}  "
          f"witness ok={validate_witness(inst, res.witness) == []}")

# %% [markdown]
# Identical zero-slack jobs collide: only one of them fits.

# %%
print(opt_dp(make_instance([(0, 1, 0)] * 3)).count)
