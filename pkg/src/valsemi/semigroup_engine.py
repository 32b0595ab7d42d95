"""Generator sets and sorted enumeration of the additive semigroups they generate.

Everything is exact.  Internally an enumeration rescales the generators by the
lcm of their denominators so the priority-queue frontier works on Python ints;
values are converted back to :class:`~fractions.Fraction` on the way out.
"""

from __future__ import annotations

import heapq
import math
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Sequence, Union

from valsemi.exact_arith import Rational, parse_rational

DEFAULT_BUDGET = 10**7


class SemigroupError(Exception):
    """Base class for enumeration failures (reported as computation errors)."""


class EmptyGenerators(SemigroupError):
    pass


class ProfileHorizonExceeded(SemigroupError):
    pass


class BudgetExceeded(SemigroupError):
    pass


class BoundTooSmall(SemigroupError):
    pass


@dataclass(frozen=True)
class ExplicitList:
    """A finite generator set, stored sorted and deduplicated."""

    generators: tuple[Rational, ...]

    def __init__(self, generators: Iterable):
        gens = sorted({Fraction(g) for g in generators})
        if not gens:
            raise ValueError("generator list is empty")
        if gens[0] <= 0:
            raise ValueError(f"generators must be positive, got {gens[0]}")
        object.__setattr__(self, "generators", tuple(gens))

    def scaled(self, c: Rational) -> "ExplicitList":
        if c <= 0:
            raise ValueError("scale factor must be positive")
        return ExplicitList(g * c for g in self.generators)


@dataclass(frozen=True)
class Profile:
    """Generators given block by block: ``block_rule(m)`` lists those in [m, m+1).

    Blocks exist for m = 1 .. horizon only; asking for more is an error.
    """

    block_rule: Callable[[int], Sequence[Rational]]
    horizon: int

    def __post_init__(self):
        if self.horizon < 1:
            raise ValueError("profile horizon must be positive")

    def block(self, m: int) -> list[Rational]:
        if not 1 <= m <= self.horizon:
            raise ProfileHorizonExceeded(f"block {m} is outside the profile horizon {self.horizon}")
        block = [Fraction(q) for q in self.block_rule(m)]
        for a, b in zip(block, block[1:]):
            if not a < b:
                raise ValueError(f"block {m} is not strictly increasing")
        if block and not (m <= block[0] and block[-1] < m + 1):
            raise ValueError(f"block {m} leaves the interval [{m}, {m + 1})")
        return block

    def to_explicit(self, bound: Rational, *, open_bound: bool = False) -> ExplicitList:
        return ExplicitList(realize_generators(self, bound, open_bound=open_bound))


GeneratorSpec = Union[ExplicitList, Profile]


@dataclass(frozen=True)
class BoundedSemigroup:
    """All elements of a generated semigroup in (0, bound].

    When ``closed`` is false the range is (0, bound) and ``bound`` itself was
    not examined.
    """

    bound: Rational
    elements: tuple[Rational, ...]
    s0: Rational
    closed: bool = True

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _within(q: Rational, bound: Rational, open_bound: bool) -> bool:
    return q < bound if open_bound else q <= bound


def realize_generators(spec: GeneratorSpec, bound: Rational, *, open_bound: bool = False) -> list[Rational]:
    """The generators of ``spec`` lying in (0, bound] (or (0, bound) if ``open_bound``)."""
    bound = Fraction(bound)
    if bound <= 0:
        raise ValueError("bound must be positive")
    if isinstance(spec, ExplicitList):
        gens = [g for g in spec.generators if _within(g, bound, open_bound)]
    else:
        # blocks whose interval [m, m+1) meets the requested range
        last = math.ceil(bound) - 1 if open_bound else math.floor(bound)
        if last > spec.horizon:
            raise ProfileHorizonExceeded(
                f"bound {bound} needs profile blocks up to {last}, horizon is {spec.horizon}"
            )
        gens = [g for m in range(1, last + 1) for g in spec.block(m) if _within(g, bound, open_bound)]
    if not gens:
        raise EmptyGenerators(f"no generator below the bound {bound}")
    return gens


def iter_semigroup(
    generators: Sequence[Rational],
    bound: Rational,
    *,
    open_bound: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> Iterator[Rational]:
    """Yield the elements of the semigroup generated by ``generators`` in increasing order.

    Min-heap frontier seeded with the generators; each popped value v pushes
    v + g for every generator g that stays within the bound.  A set of values
    already pushed keeps every distinct value on the heap at most once.
    """
    bound = Fraction(bound)
    gens = sorted({Fraction(g) for g in generators})
    if not gens or gens[0] <= 0:
        raise ValueError("generators must be a nonempty list of positive rationals")
    scale = math.lcm(*(g.denominator for g in gens), bound.denominator)
    steps = [int(g * scale) for g in gens]
    top = bound * scale
    limit = int(top) - 1 if open_bound else int(top)
    heap = [s for s in steps if s <= limit]
    heapq.heapify(heap)
    pushed = set(heap)
    emitted = 0
    while heap:
        v = heapq.heappop(heap)
        emitted += 1
        if emitted > budget:
            raise BudgetExceeded(f"more than {budget} semigroup elements below {bound}")
        yield Fraction(v, scale)
        for s in steps:
            w = v + s
            if w > limit:
                break
            if w not in pushed:
                pushed.add(w)
                heapq.heappush(heap, w)


def enumerate_up_to(
    spec: GeneratorSpec,
    bound: Rational,
    *,
    open_bound: bool = False,
    budget: int = DEFAULT_BUDGET,
    stop: Callable[[Rational, int], bool] | None = None,
) -> BoundedSemigroup:
    """Enumerate the semigroup generated by ``spec`` up to ``bound``.

    ``stop(value, count)`` is called after each emitted element (count includes
    it); returning true ends the enumeration early, and the result then covers
    (0, value] exactly.
    """
    bound = Fraction(bound)
    gens = realize_generators(spec, bound, open_bound=open_bound)
    elements = []
    for v in iter_semigroup(gens, bound, open_bound=open_bound, budget=budget):
        elements.append(v)
        if stop is not None and stop(v, len(elements)):
            return BoundedSemigroup(v, tuple(elements), gens[0], closed=True)
    return BoundedSemigroup(bound, tuple(elements), gens[0], closed=not open_bound)


def count_below(S: BoundedSemigroup, x: Rational) -> int:
    """|S ∩ [0, x)|."""
    if x > S.bound:
        raise BoundTooSmall(f"cannot count below {x}: enumerated only up to {S.bound}")
    return bisect_left(S.elements, x)


def contains(S: BoundedSemigroup, q: Rational) -> bool:
    if q > S.bound or (q == S.bound and not S.closed):
        raise BoundTooSmall(f"{q} lies outside the enumerated range")
    i = bisect_left(S.elements, q)
    return i < len(S.elements) and S.elements[i] == q


def _sumset_layers(values: Sequence[Rational], bound: Rational, budget: int) -> Iterator[set]:
    """Yield rT ∩ (0, bound] for r = 1, 2, ... while the layer is nonempty."""
    bound = Fraction(bound)
    usable = sorted({Fraction(v) for v in values if Fraction(v) <= bound})
    layer = set(usable)
    while layer:
        yield layer
        nxt = set()
        for a in layer:
            for t in usable:
                s = a + t
                if s > bound:
                    break
                nxt.add(s)
            if len(nxt) > budget:
                raise BudgetExceeded(f"more than {budget} sums")
        layer = nxt


def sumset_r(values: Sequence[Rational], r: int, bound: Rational, *, budget: int = DEFAULT_BUDGET) -> list[Rational]:
    """All sums of exactly r elements of ``values`` (repetition allowed) that are <= bound.

    Built as rT = (r-1)T + T, dropping partial sums past the bound (all values
    are positive).  Meant as an oracle for :func:`enumerate_up_to`.
    """
    if r < 1 or not values:
        raise ValueError("sumset_r needs r >= 1 and a nonempty value list")
    if min(values) <= 0:
        raise ValueError("sumset_r needs positive values")
    for i, layer in enumerate(_sumset_layers(values, bound, budget), 1):
        if i == r:
            return sorted(layer)
    return []


def sumset_union(values: Sequence[Rational], bound: Rational, *, budget: int = DEFAULT_BUDGET) -> list[Rational]:
    """Union of sumset_r for r = 1 .. ceil(bound / min(values))."""
    s0 = min(Fraction(v) for v in values)
    rmax = math.ceil(Fraction(bound) / s0)
    out = set()
    for i, layer in enumerate(_sumset_layers(values, bound, budget), 1):
        if i > rmax:
            break
        out |= layer
    return sorted(out)


def read_generator_file(path) -> ExplicitList:
    """One rational per line; ``#`` starts a comment; blank lines are skipped."""
    gens = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            text = line.split("#", 1)[0].strip()
            if not text:
                continue
            try:
                gens.append(parse_rational(text))
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from None
    return ExplicitList(gens)
