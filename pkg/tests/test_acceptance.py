"""Exit criteria for the build, one test per criterion.

Each test records a PASS/FAIL line shown in pytest's terminal summary.
"""

import json
import random
import time
from fractions import Fraction as F

from revokesched.adversary import side_gap_start
from revokesched.cli import main
from revokesched.harness import duel
from revokesched.model import Interval, Job, make_instance, validate_witness
from revokesched.opt import opt_brute, opt_dp


def timed(fn):
    t0 = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - t0


def cli_json(tmp_path, name, *argv):
    out = tmp_path / name
    code = main([*argv, "--out", str(out)])
    return code, json.loads(out.read_text())


def test_1_three_job_lower_bound(tmp_path, criterion):
    results = {}
    for policy in ("srpt", "greedy-commit", "lazy"):
        (code, rep), secs = timed(lambda: cli_json(
            tmp_path, f"{policy}.json", "duel", "--policy", policy, "--depth", "3",
            "--model", "revoke"))
        results[policy] = (code, rep["completed"], rep["opt"], rep["ratio"], secs)
    ok = (results["srpt"][:4] == (0, 1, 3, "1/3")
          and results["greedy-commit"][:4] == (0, 1, 3, "1/3")
          and results["lazy"][:3] == (0, 0, 3)
          and all(r[4] < 1.0 for r in results.values()))
    slowest = max(r[4] for r in results.values())
    criterion(1, ok, f"srpt/greedy 1 of 3, lazy 0 of 3; slowest duel {slowest:.3f}s (< 1s)")
    assert ok, results


def test_2_depth_k_lower_bound(criterion):
    def sweep():
        bad = []
        for k in range(3, 13):
            for policy in ("greedy-commit", "lazy", "srpt"):
                rep = duel(policy, k)
                fine = (rep.completed <= 1 and rep.opt == k and rep.ratio <= F(1, k)
                        and len(rep.witness) == k
                        and validate_witness(rep.instance, rep.witness) == [])
                if not fine:
                    bad.append((k, policy, rep.completed, rep.opt))
        return bad

    bad, secs = timed(sweep)
    ok = not bad and secs < 30
    criterion(2, ok, f"k=3..12 x 3 policies, {len(bad)} failures, {secs:.2f}s (< 30s)")
    assert ok, bad


def test_3_seeded_policy_family(tmp_path, criterion):
    details, ok = [], True
    for depth in (5, 8):
        (code, summary), secs = timed(lambda: cli_json(
            tmp_path, f"fuzz{depth}.json", "fuzz", "--seeds", "0:999", "--depth", str(depth)))
        good = (code == 0 and summary["runs"] == 1000 and summary["passed"] == 1000
                and secs < 60)
        ok &= good
        details.append(f"depth {depth}: {summary['passed']}/{summary['runs']} in {secs:.1f}s")
    criterion(3, ok, "; ".join(details) + " (< 60s each)")
    assert ok


def random_instance(rng, n):
    rows = []
    for _ in range(n):
        den = rng.choice([1, 2, 3, 4, 5, 6, 10])
        rows.append((F(rng.randint(0, 12 * den), den), F(rng.randint(1, 4 * den), den),
                     F(rng.randint(0, 6 * den), den)))
    rows.sort(key=lambda t: t[0])
    return make_instance(rows)


def test_4_oracle_equivalence(criterion):
    def check():
        rng = random.Random(4)
        bad = []
        for i in range(500):
            inst = random_instance(rng, rng.randint(0, 8))
            res = opt_dp(inst)
            if (res.count != opt_brute(inst) or len(res.witness) != res.count
                    or validate_witness(inst, res.witness)):
                bad.append(i)
        return bad

    bad, secs = timed(check)
    ok = not bad and secs < 30
    criterion(4, ok, f"500 instances n<=8, {len(bad)} mismatches, {secs:.2f}s (< 30s)")
    assert ok, bad


def test_5_restart_contrast(tmp_path, criterion):
    rows = []
    for k in range(3, 9):
        _, restart = cli_json(tmp_path, f"r{k}.json", "duel", "--policy", "srpt",
                              "--model", "restart", "--depth", str(k))
        _, revoke = cli_json(tmp_path, f"v{k}.json", "duel", "--policy", "srpt",
                             "--model", "revoke", "--depth", str(k))
        rows.append((k, restart["completed"], restart["ratio"], revoke["completed"]))
    ok = all(c == k and r == "1/1" and v == 1 for k, c, r, v in rows)
    criterion(5, ok, "srpt restart completes k of k, revoke 1 of k, for k=3..8")
    assert ok, rows


def test_6_side_gap_placement(criterion):
    def check():
        rng = random.Random(6)
        bad = 0
        for _ in range(10_000):
            den = rng.randint(1, 100)
            p = F(rng.randint(1, 50), den)
            job = Job(0, F(rng.randint(-100, 100), den), p, 2 * p + F(rng.randint(0, 100), den))
            length = p * F(rng.randint(1, 1000), 1000)
            lo = job.r + (job.p + job.s - length) * F(rng.randint(0, 1000), 1000)
            inner = Interval(lo, lo + length)
            start = side_gap_start(job, inner)
            run = Interval(start, start + job.p)
            fine = (job.r <= start <= job.latest and run.within(job.window)
                    and not run.overlaps(inner)
                    and (inner.lo - job.r) + (job.d - inner.hi) >= 2 * job.p)
            bad += not fine
        return bad

    bad, secs = timed(check)
    ok = bad == 0 and secs < 5
    criterion(6, ok, f"10000 random pairs, {bad} failures, {secs:.2f}s (< 5s)")
    assert ok


def test_7_determinism(tmp_path, criterion):
    commands = [
        ("json", ["duel", "--policy", "seeded:42", "--depth", "6"], "--out"),
        ("json", ["duel", "--policy", "srpt", "--depth", "5", "--model", "restart"], "--out"),
        ("csv", ["sweep", "--depths", "3:6"], "--csv"),
        ("json", ["fuzz", "--seeds", "0:49", "--depth", "5"], "--out"),
    ]
    same = []
    for i, (ext, argv, flag) in enumerate(commands):
        blobs = []
        for rep in range(2):
            path = tmp_path / f"c{i}_{rep}.{ext}"
            main([*argv, flag, str(path)])
            blobs.append(path.read_bytes())
        same.append(blobs[0] == blobs[1] and len(blobs[0]) > 0)
    ok = all(same)
    criterion(7, ok, f"{sum(same)}/{len(same)} commands byte-identical on rerun")
    assert ok
