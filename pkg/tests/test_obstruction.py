import math
from fractions import Fraction as F

import pytest

from valsemi.exact_arith import binomial
from valsemi.obstruction import (
    check,
    example1_certificate,
    example1_generators,
    min_consistent_n,
    theorem1_bound,
)
from valsemi.semigroup_engine import ExplicitList, ProfileHorizonExceeded, realize_generators, sumset_union


def oracle_rows(gens, n, d_max):
    """Counts from the r-fold sumset union, independent of the heap enumeration."""
    s0 = min(gens)
    cut = (d_max + 1) * s0
    usable = [g for g in gens if g < cut]
    elements = [q for q in sumset_union(usable, cut) if q < cut]
    return [(d, sum(1 for q in elements if q < (d + 1) * s0), binomial(n + d, n)) for d in range(1, d_max + 1)]


def test_theorem1_bound():
    assert theorem1_bound(2, 2) == 6
    assert theorem1_bound(1, 5) == 6
    assert theorem1_bound(5, 5) == math.factorial(10) // math.factorial(5) ** 2 == 252


def test_check_naturals_dimension_one():
    r = check(ExplicitList([1]), 1, 5)
    assert [(row.count, row.bound) for row in r.rows] == [(d, d + 1) for d in range(1, 6)]
    assert not r.verdict.violated and r.verdict.d == 5
    assert str(r.verdict) == "ConsistentUpTo(5)"
    assert not r.conclusive


def test_check_example1_n2():
    r = check(example1_generators(2), 2, 2)
    assert [(row.d, row.count, row.bound, row.violated) for row in r.rows] == [(1, 2, 3, False), (2, 8, 6, True)]
    assert str(r.verdict) == "ViolatedAt(2)"


def test_check_two_three():
    r = check(ExplicitList([2, 3]), 2, 4)
    assert [(row.d, row.count, row.bound) for row in r.rows] == oracle_rows([F(2), F(3)], 2, 4)
    assert [(row.count, row.bound) for row in r.rows] == [(2, 3), (4, 6), (6, 10), (8, 15)]
    assert str(r.verdict) == "ConsistentUpTo(4)"


def test_check_rows_match_sumset_oracle():
    specs = [[F(3, 2), F(5, 3)], [F(1), F(7, 6), F(4, 3)], [F(1, 2), F(2, 3), F(3, 4), F(5, 6)]]
    for gens in specs:
        for n in (1, 2, 3):
            r = check(ExplicitList(gens), n, 6, early_exit=False)
            rows = oracle_rows(gens, n, 6)
            assert [(row.d, row.count, row.bound) for row in r.rows] == rows
            first = next((d for d, c, b in rows if c >= b), None)
            assert r.verdict.violated == (first is not None)
            if first is not None:
                assert r.verdict.d == first
                early = check(ExplicitList(gens), n, 6)
                assert early.verdict == r.verdict
                assert early.rows == r.rows[: first]


def test_report_invariants():
    for n in (1, 2, 3):
        r = check(ExplicitList([F(3, 2), F(5, 3), F(7, 4)]), n, 6, early_exit=False)
        counts = [row.count for row in r.rows]
        bounds = [row.bound for row in r.rows]
        assert counts == sorted(counts)
        assert all(a < b for a, b in zip(bounds, bounds[1:]))
        violated = [row.d for row in r.rows if row.violated]
        assert r.verdict.violated == bool(violated)
        if violated:
            assert r.verdict.d == violated[0]


def test_check_horizon_error():
    with pytest.raises(ProfileHorizonExceeded):
        check(example1_generators(2), 2, 4)


def test_min_consistent_n():
    assert min_consistent_n(ExplicitList([1]), 5, 3) == 1
    assert check(ExplicitList([2, 3]), 1, 4).verdict.violated
    assert min_consistent_n(ExplicitList([2, 3]), 4, 3) == 2
    assert min_consistent_n(example1_generators(5), 5, 5) is None


def test_monotone_verdicts_in_n():
    for gens in ([F(1), F(3, 2)], [F(2), F(3)], [F(1), F(5, 4), F(4, 3)]):
        prev = None
        for n in range(6, 0, -1):
            r = check(ExplicitList(gens), n, 6)
            if prev is not None and prev.verdict.violated:
                assert r.verdict.violated and r.verdict.d <= prev.verdict.d
            prev = r
    for n in range(5, 1, -1):
        hi = check(example1_generators(5), n, 5)
        lo = check(example1_generators(5), n - 1, 5)
        assert hi.verdict.violated and lo.verdict.violated and lo.verdict.d <= hi.verdict.d


@pytest.mark.parametrize("c", [F(1, 2), F(3), F(7, 5)])
def test_scaling_invariance(c):
    specs = [ExplicitList([1]), ExplicitList([2, 3]), ExplicitList([F(3, 2), F(5, 3)]),
             example1_generators(4).to_explicit(5, open_bound=True)]
    for spec in specs:
        for n in (1, 2, 3):
            a = check(spec, n, 4)
            b = check(spec.scaled(c), n, 4)
            assert a.verdict == b.verdict
            assert [(r.d, r.count, r.bound) for r in a.rows] == [(r.d, r.count, r.bound) for r in b.rows]
            assert b.s0 == c * a.s0


def test_example1_generators():
    g = example1_generators(2)
    assert g.block(1) == [1, F(3, 2)]
    assert g.block(2) == [2, F(13, 6), F(7, 3), F(5, 2), F(8, 3), F(17, 6)]
    g6 = example1_generators(6)
    for m in range(1, 7):
        block = g6.block(m)
        assert len(block) == binomial(2 * m, m)
        assert all(m <= q < m + 1 for q in block)
    assert realize_generators(g6, 7, open_bound=True)[0] == 1


def test_example1_certificates():
    expected_mid = {1: 2, 2: 8}
    for n in range(1, 6):
        c = example1_certificate(n)
        assert c.lhs == binomial(2 * n, n)
        assert c.rhs == c.lhs - 1
        assert c.mid >= sum(binomial(2 * m, m) for m in range(1, n + 1))
        assert c.chain_holds
        if n in expected_mid:
            assert c.mid == expected_mid[n]
        # the witness d found by check is at most n
        r = check(example1_generators(n), n, n)
        assert r.verdict.violated and r.verdict.d <= n


def test_certificate_mid_against_oracle():
    for n in (1, 2, 3):
        gens = realize_generators(example1_generators(n), n + 1, open_bound=True)
        oracle = [q for q in sumset_union(gens, n + 1) if q < n + 1]
        c = example1_certificate(n)
        assert c.mid == len(oracle)
        assert c.block == sum(1 for q in oracle if q >= n)


def test_perturbed_spacing_gives_same_verdicts():
    for offset in (1, 3):
        for n in range(1, 5):
            c = example1_certificate(n, offset=offset)
            assert c.lhs == binomial(2 * n, n) and c.chain_holds
            for k in range(1, 5):
                a = check(example1_generators(5), k, 4).verdict
                b = check(example1_generators(5, offset=offset), k, 4).verdict
                # sums depend on the spacing, so only the kind and the d <= k bound carry over
                assert a.violated == b.violated
                assert b.d <= k
