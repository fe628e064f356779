import itertools
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from revokesched.adversary import AdversaryConfig, adversary_source
from revokesched.engine import simulate
from revokesched.errors import CapacityError
from revokesched.model import Instance, Job, make_instance, validate_witness
from revokesched.opt import earliest_finish, opt_brute, opt_brute_result, opt_dp
from revokesched.policies import make_policy

SRPT3 = make_instance([(0, 1, 2), (F(1, 10), F(3, 10), F(6, 10)),
                       (F(13, 100), F(9, 100), F(18, 100))])
GREEDY3 = make_instance([(0, 1, 2), (F(1, 10), F(3, 10), F(6, 10)),
                         (F(73, 100), F(9, 100), F(18, 100))])


def random_instance(rng, n):
    rows = []
    for _ in range(n):
        den = rng.choice([1, 2, 3, 4, 5, 10])
        rows.append((F(rng.randint(0, 10 * den), den), F(rng.randint(1, 4 * den), den),
                     F(rng.randint(0, 5 * den), den)))
    rows.sort(key=lambda t: t[0])
    return make_instance(rows)


def best_finish_by_orderings(inst, ids):
    """Least completion over every ordering of ``ids``; None if none is feasible."""
    best = None
    for order in itertools.permutations(ids):
        t, ok = None, True
        for j in order:
            job = inst[j]
            start = job.r if t is None else max(t, job.r)
            if start > job.latest:
                ok = False
                break
            t = start + job.p
        if ok and (best is None or t < best):
            best = t
    return best


def test_empty():
    assert opt_dp(Instance(())).count == 0
    assert opt_brute(Instance(())) == 0


def test_single_job():
    res = opt_dp(make_instance([(0, 1, 2)]))
    assert res.count == 1 and res.witness.assignments == ((0, F(0)),)
    assert opt_brute(make_instance([(0, 1, 2)])) == 1


def test_depth3_instances():
    assert opt_dp(SRPT3).count == 3 == opt_brute(SRPT3)
    assert opt_brute(GREEDY3) == 3 == opt_dp(GREEDY3).count


def test_colliding_zero_slack_jobs():
    assert opt_dp(make_instance([(0, 1, 0)] * 2)).count == 1
    assert opt_brute(make_instance([(0, 1, 0)] * 3)) == 1


def test_caps():
    with pytest.raises(CapacityError):
        opt_brute(make_instance([(0, 1, 0)] * 9))
    with pytest.raises(CapacityError):
        opt_dp(make_instance([(0, 1, 0)] * 5), cap=4)


def test_dp_tie_break_prefers_low_ids():
    res = opt_dp(make_instance([(0, 1, 0), (0, 1, 0)]))
    assert res.witness.assignments == ((0, F(0)),)


def test_oracle_equivalence_random():
    rng = random.Random(20240611)
    for _ in range(200):
        inst = random_instance(rng, rng.randint(0, 7))
        res = opt_dp(inst)
        assert res.count == opt_brute(inst)
        assert len(res.witness) == res.count
        assert validate_witness(inst, res.witness) == []
        brute = opt_brute_result(inst)
        assert validate_witness(inst, brute.witness) == []


def test_earliest_finish_matches_orderings():
    rng = random.Random(7)
    for _ in range(60):
        inst = random_instance(rng, rng.randint(1, 6))
        for size in range(1, len(inst) + 1):
            for ids in itertools.combinations(range(len(inst)), size):
                assert earliest_finish(inst, ids) == best_finish_by_orderings(inst, ids)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**9), st.integers(0, 6))
def test_adding_a_job_never_hurts(seed, n):
    rng = random.Random(seed)
    inst = random_instance(rng, n)
    extra = (F(rng.randint(0, 20), 2), F(rng.randint(1, 8), 2), F(rng.randint(0, 10), 2))
    rows = sorted([(j.r, j.p, j.s) for j in inst] + [extra], key=lambda t: t[0])
    assert opt_dp(make_instance(rows)).count >= opt_dp(inst).count


@pytest.mark.parametrize("name", ["greedy-commit", "lazy", "srpt", "seeded:5"])
@pytest.mark.parametrize("k", [1, 3, 6, 10])
def test_opt_on_adversary_instances_is_k(name, k):
    res = simulate(make_policy(name), adversary_source(AdversaryConfig(depth=k)))
    assert opt_dp(res.realized).count == k


def test_opt_result_json():
    # innermost job first, then each enclosing job back to back
    d = opt_dp(SRPT3).to_dict()
    assert d == {"count": 3, "method": "dp", "witness": {"assignments": [
        {"job": 2, "start": "13/100"}, {"job": 1, "start": "11/50"},
        {"job": 0, "start": "13/25"}]}}
