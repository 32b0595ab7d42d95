"""Acceptance criteria; each test prints one PASS/FAIL line in the terminal summary.

Run alone with ``pytest tests/test_acceptance.py -v``.
"""

import contextlib
import io
import itertools
import json
import random
import time
from fractions import Fraction as F

import pytest

from valsemi.cli import main
from valsemi.exact_arith import binomial
from valsemi.obstruction import check, example1_generators
from valsemi.semigroup_engine import (
    ExplicitList,
    count_below,
    enumerate_up_to,
    realize_generators,
    sumset_union,
)
from valsemi.valuation_lab import MonomialValuation, enumerate_Sd, verify_lemma2


@pytest.fixture
def record(request):
    lines = request.config._valsemi_acceptance

    def _record(label, ok, detail=""):
        lines.append(f"[{'PASS' if ok else 'FAIL'}] {label}" + (f": {detail}" if detail else ""))
        return ok

    return _record


def _cli_json(*argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        status = main([*argv, "--format", "json"])
    return status, json.loads(buf.getvalue())


def test_1_example1_contradiction(record):
    start = time.perf_counter()
    failures = []
    for n, expected in zip(range(1, 6), [2, 6, 20, 70, 252]):
        status, doc = _cli_json("example1", "--n", str(n))
        (c,) = doc["certificates"]
        lhs, mid, rhs = int(c["lhs"]), int(c["mid"]), int(c["rhs"])
        if not (status == 0 and lhs == expected == binomial(2 * n, n) and rhs == lhs - 1 and mid >= lhs and c["chain_holds"]):
            failures.append((n, c))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 60
    record("1 Example-1 contradiction n=1..5", ok, f"{elapsed:.2f}s" + (f", bad {failures}" if failures else ""))
    assert not failures
    assert elapsed < 60


def test_2_hand_checked_count(record, hand_enumerated_u_below_3):
    spec = example1_generators(2)
    U = enumerate_up_to(spec, 3, open_bound=True)
    gens = realize_generators(spec, 3, open_bound=True)
    oracle = [q for q in sumset_union(gens, 3) if q < 3]
    ok = count_below(U, 3) == 8 and list(U.elements) == oracle == hand_enumerated_u_below_3
    record("2 |U ∩ [0,3)| = 8 against the sumset oracle", ok, f"count {count_below(U, 3)}")
    assert ok


def test_3_dimension_one_sharpness(record):
    bad = []
    for s0 in (F(1), F(2), F(7, 3)):
        spec = ExplicitList([s0])
        S = enumerate_up_to(spec, 11 * s0)
        for d in range(1, 11):
            if count_below(S, (d + 1) * s0) != d:
                bad.append(("count", s0, d))
        r = check(spec, 1, 10)
        if r.verdict.violated or r.verdict.d != 10 or len(r.rows) != 10:
            bad.append(("verdict", s0, str(r.verdict)))
        bad += [("row", s0, row.d) for row in r.rows if row.count != row.bound - 1]
    record("3 dimension-1 sharpness, count = d = bound - 1", not bad, str(bad) if bad else "")
    assert not bad


def test_4_lemma_sweeps(record):
    grid = [F(1, 3), F(1, 2), F(1), F(2), F(3), F(5, 2)]
    start = time.perf_counter()
    bad, cases = [], 0
    for n in (1, 2, 3):
        for weights in itertools.product(grid, repeat=n):
            v = MonomialValuation(weights)
            for d in range(1, 7):
                cases += 1
                bound = binomial(n + d, n)
                sd = enumerate_Sd(v, d)
                r2 = verify_lemma2(v, d)
                cut = (d + 1) * v.s0
                full = list(enumerate_up_to(ExplicitList(weights), cut, open_bound=True).elements)
                if not (len(sd) < bound and r2.count < bound and full == [q for q in sd if q < cut]):
                    bad.append((weights, d))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 30
    record("4 degree-d value count and truncation sweeps", ok, f"{cases} cases, {elapsed:.2f}s")
    assert not bad
    assert elapsed < 30


def test_5_oracle_equivalence(record):
    rng = random.Random(20261016)
    done = 0
    mismatches = []
    while done < 100:
        gens = [F(rng.randint(1, 12), rng.randint(1, 12)) for _ in range(rng.randint(1, 4))]
        bound = F(rng.randint(1, 10))
        if min(gens) > bound:
            continue
        done += 1
        if list(enumerate_up_to(ExplicitList(gens), bound).elements) != sumset_union(gens, bound):
            mismatches.append((gens, bound))
    record("5 frontier enumeration = union of r-fold sumsets (100 specs)", not mismatches)
    assert not mismatches


def test_6_invariance_suite(record):
    problems = []
    specs = [ExplicitList([1]), ExplicitList([2, 3]), ExplicitList([F(3, 2), F(5, 3), F(7, 4)]),
             example1_generators(5).to_explicit(6, open_bound=True)]
    for c in (F(1, 2), F(3), F(7, 5)):
        for spec in specs:
            for n in (1, 2, 3, 4):
                if check(spec, n, 5).verdict != check(spec.scaled(c), n, 5).verdict:
                    problems.append(("scaling", c, spec, n))
    for spec in specs[:3]:
        small = enumerate_up_to(spec, 7)
        big = enumerate_up_to(spec, 12)
        if [q for q in big.elements if q <= 7] != list(small.elements):
            problems.append(("extension", spec))
    for spec in specs:
        for n in range(2, 6):
            hi, lo = check(spec, n, 5).verdict, check(spec, n - 1, 5).verdict
            if hi.violated and not (lo.violated and lo.d <= hi.d):
                problems.append(("monotone", spec, n))
    for n in range(1, 41):
        for k in range(0, n + 1):
            if binomial(n, k) != binomial(n, n - k):
                problems.append(("symmetry", n, k))
            if k >= 1 and binomial(n, k) != binomial(n - 1, k - 1) + binomial(n - 1, k):
                problems.append(("pascal", n, k))
    record("6 invariance suite (scaling, extension, monotone verdicts, Pascal/symmetry)", not problems,
           str(problems[:3]) if problems else "")
    assert not problems
