"""Embedding-dimension obstructions for value semigroups.

If S is the value semigroup of a valuation dominating an equicharacteristic
local domain whose maximal ideal needs n generators, then for every d

    |S ∩ [0, (d+1)·s0)| < C(n+d, n),

with s0 the least element of S.  :func:`check` tests this row by row.  A
violation rules the pair (S, n) out; passing every row proves nothing.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from functools import partial

from valsemi.exact_arith import Rational, binomial
from valsemi.semigroup_engine import (
    DEFAULT_BUDGET,
    EmptyGenerators,
    ExplicitList,
    GeneratorSpec,
    Profile,
    enumerate_up_to,
    iter_semigroup,
    realize_generators,
)


@dataclass(frozen=True)
class Row:
    d: int
    count: int
    bound: int

    @property
    def violated(self) -> bool:
        return self.count >= self.bound


@dataclass(frozen=True)
class Verdict:
    violated: bool
    d: int

    def __str__(self):
        return f"ViolatedAt({self.d})" if self.violated else f"ConsistentUpTo({self.d})"


@dataclass(frozen=True)
class ObstructionReport:
    """Rows d = 1 .. d_max, or 1 .. witness when the check stopped at a violation."""

    n: int
    s0: Rational
    d_max: int
    rows: tuple[Row, ...]
    verdict: Verdict

    @property
    def conclusive(self) -> bool:
        return self.verdict.violated


@dataclass(frozen=True)
class Certificate:
    n: int
    lhs: int  # |T ∩ [n, n+1)|
    block: int  # |U ∩ [n, n+1)|
    mid: int  # |U ∩ [0, n+1)|
    rhs: int  # C(2n, n) - 1

    @property
    def chain_holds(self) -> bool:
        return (
            self.lhs == binomial(2 * self.n, self.n)
            and self.lhs <= self.block <= self.mid
            and self.lhs > self.rhs
        )


def theorem1_bound(n: int, d: int) -> int:
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    return binomial(n + d, n)


def minimum_generator(spec: GeneratorSpec) -> Rational:
    if isinstance(spec, ExplicitList):
        return spec.generators[0]
    for m in range(1, spec.horizon + 1):
        block = spec.block(m)
        if block:
            return block[0]
    raise EmptyGenerators("profile has no generators within its horizon")


def check(
    spec: GeneratorSpec,
    n: int,
    d_max: int,
    *,
    budget: int = DEFAULT_BUDGET,
    early_exit: bool = True,
) -> ObstructionReport:
    """Compare |S ∩ [0, (d+1)s0)| with C(n+d, n) for d = 1 .. d_max.

    Elements arrive in increasing order.  An element v lies in every row
    d >= floor(v/s0), and the smallest of those rows has the smallest bound, so
    the first time the running count reaches that bound we have the least
    violating d.  With ``early_exit`` the enumeration then only runs on until
    that row is complete.
    """
    if n < 1 or d_max < 1:
        raise ValueError("need n >= 1 and d_max >= 1")
    s0 = minimum_generator(spec)
    cut = (d_max + 1) * s0
    gens = realize_generators(spec, cut, open_bound=True)
    elements: list[Rational] = []
    witness = None
    stop_at = cut
    for v in iter_semigroup(gens, cut, open_bound=True, budget=budget):
        if v >= stop_at:
            break
        elements.append(v)
        if witness is None:
            d = max(1, math.floor(v / s0))
            if len(elements) >= theorem1_bound(n, d):
                witness = d
                if early_exit:
                    stop_at = (d + 1) * s0
    last = witness if (witness is not None and early_exit) else d_max
    rows = tuple(
        Row(d, bisect_left(elements, (d + 1) * s0), theorem1_bound(n, d)) for d in range(1, last + 1)
    )
    if witness is None:
        verdict = Verdict(False, d_max)
    else:
        verdict = Verdict(True, witness)
    return ObstructionReport(n, s0, d_max, rows, verdict)


def min_consistent_n(spec: GeneratorSpec, d_max: int, n_max: int, *, budget: int = DEFAULT_BUDGET) -> int | None:
    """Least n <= n_max passing every row up to d_max, or None.

    Bounds grow with n while the counts do not depend on it, so every smaller
    n fails whenever n does; the first passing n is a lower bound on the
    embedding dimension of any domain realizing S.
    """
    for n in range(1, n_max + 1):
        if not check(spec, n, d_max, budget=budget).verdict.violated:
            return n
    return None


def _example1_block(m: int, *, offset: int = 0) -> list[Rational]:
    size = binomial(2 * m, m)
    return [m + Fraction(j, size + offset) for j in range(size)]


def example1_generators(n_blocks: int, *, offset: int = 0) -> Profile:
    """C(2m, m) equally spaced generators in each [m, m+1), starting at m.

    ``offset`` > 0 spaces block m by 1/(C(2m, m) + offset) instead, which keeps
    the block sizes and so every count used by the certificate.
    """
    if n_blocks < 1:
        raise ValueError("n_blocks must be positive")
    if offset < 0:
        raise ValueError("offset must be nonnegative")
    return Profile(partial(_example1_block, offset=offset), n_blocks)


def example1_certificate(n: int, *, budget: int = DEFAULT_BUDGET, offset: int = 0) -> Certificate:
    """Count T and U = <T> near n for the construction with n blocks.

    A valuation with semigroup U over a domain of embedding dimension n would
    force |U ∩ [0, n+1)| <= C(2n, n) - 1, while U already contains the
    C(2n, n) generators of block n.
    """
    if n < 1:
        raise ValueError("n must be positive")
    spec = example1_generators(n, offset=offset)
    U = enumerate_up_to(spec, n + 1, open_bound=True, budget=budget)
    lhs = len(spec.block(n))
    block = len(U.elements) - bisect_left(U.elements, n)
    return Certificate(n, lhs, block, len(U.elements), binomial(2 * n, n) - 1)
