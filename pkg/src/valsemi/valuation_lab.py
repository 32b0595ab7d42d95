"""Monomial valuations on k[x1, ..., xn].

A monomial valuation is fixed by positive rational weights w; a polynomial
gets the minimum of w·e over the exponent vectors e in its support.  These
are the concrete valuations used to check the truncation and counting bounds
by brute force.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import total_ordering
from itertools import combinations_with_replacement
from typing import Iterable, Mapping

from valsemi.exact_arith import Rational, binomial, format_rational, parse_rational
from valsemi.semigroup_engine import ExplicitList, enumerate_up_to

ExponentVector = tuple  # of nonnegative ints, trailing zeros stripped


class DimensionMismatch(ValueError):
    pass


@total_ordering
class _Infinite:
    """Value of the zero polynomial; above every rational."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("valsemi.INFINITE")

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __repr__(self):
        return "INFINITE"


INFINITE = _Infinite()


def _normalize(exps: Iterable[int]) -> ExponentVector:
    e = list(exps)
    if any(not isinstance(a, int) or a < 0 for a in e):
        raise ValueError(f"exponents must be nonnegative integers: {e}")
    while e and e[-1] == 0:
        e.pop()
    return tuple(e)


def _add_exps(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    if len(a) < len(b):
        a, b = b, a
    return tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))


@dataclass(frozen=True)
class MonomialValuation:
    weights: tuple[Rational, ...]

    def __init__(self, weights: Iterable):
        ws = tuple(Fraction(w) for w in weights)
        if not ws:
            raise ValueError("a monomial valuation needs at least one weight")
        if any(w <= 0 for w in ws):
            raise ValueError("weights must be positive")
        object.__setattr__(self, "weights", ws)

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def s0(self) -> Rational:
        return min(self.weights)

    def monomial_value(self, e: ExponentVector) -> Rational:
        if len(e) > self.n:
            raise DimensionMismatch(f"exponent vector {e} has more than {self.n} variables")
        return sum((w * a for w, a in zip(self.weights, e)), Fraction(0))


@dataclass(frozen=True)
class SparsePolynomial:
    """Polynomial with rational coefficients; zero coefficients are never stored."""

    terms: Mapping[ExponentVector, Rational] = field(default_factory=dict)

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for e, c in items:
            e = _normalize(e)
            acc[e] = acc.get(e, Fraction(0)) + Fraction(c)
        object.__setattr__(self, "terms", {e: c for e, c in acc.items() if c != 0})

    @classmethod
    def monomial(cls, exps, coeff=1) -> "SparsePolynomial":
        return cls({tuple(exps): coeff})

    @classmethod
    def variable(cls, i: int) -> "SparsePolynomial":
        """x_i, 1-based."""
        return cls({(0,) * (i - 1) + (1,): 1})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def nvars(self) -> int:
        return max((len(e) for e in self.terms), default=0)

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def __add__(self, other):
        return SparsePolynomial(list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self):
        return SparsePolynomial({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return SparsePolynomial(
            [(_add_exps(a, b), ca * cb) for a, ca in self.terms.items() for b, cb in other.terms.items()]
        )

    def __eq__(self, other):
        return isinstance(other, SparsePolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), tuple(-a for a in e))):
            c = self.terms[e]
            mono = " ".join(f"x{i + 1}" if a == 1 else f"x{i + 1}^{a}" for i, a in enumerate(e) if a)
            if not mono:
                body = format_rational(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{format_rational(abs(c))} {mono}"
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def value_of(v: MonomialValuation, f: SparsePolynomial):
    """min over the support of f of weights·exponents; INFINITE for f = 0."""
    if f.nvars > v.n:
        raise DimensionMismatch(f"polynomial uses {f.nvars} variables, valuation has {v.n}")
    if f.is_zero():
        return INFINITE
    return min(v.monomial_value(e) for e in f.terms)


def exponent_vectors(n: int, d: int, *, min_degree: int = 1) -> Iterable[ExponentVector]:
    """All exponent vectors in n variables with min_degree <= degree <= d."""
    for k in range(min_degree, d + 1):
        for combo in combinations_with_replacement(range(n), k):
            e = [0] * n
            for i in combo:
                e[i] += 1
            yield _normalize(e)


def enumerate_Sd(v: MonomialValuation, d: int) -> list[Rational]:
    """Values of the nonzero polynomials of degree <= d without constant term, sorted."""
    if d < 1:
        raise ValueError("d must be positive")
    return sorted({v.monomial_value(e) for e in exponent_vectors(v.n, d)})


@dataclass(frozen=True)
class Lemma1Report:
    cardinality: int
    bound: int
    holds: bool


@dataclass(frozen=True)
class Lemma2Report:
    count: int
    bound: int
    holds: bool
    truncation_identity: bool


def verify_lemma1(v: MonomialValuation, d: int) -> Lemma1Report:
    card = len(enumerate_Sd(v, d))
    bound = binomial(v.n + d, v.n)
    return Lemma1Report(card, bound, card < bound)


def verify_lemma2(v: MonomialValuation, d: int, *, budget: int | None = None) -> Lemma2Report:
    """Count the value semigroup below (d+1)·s0 and compare with the degree-d values there.

    The monomial values form exactly the semigroup generated by the weights, so
    the full semigroup side is enumerated with the generic engine.
    """
    if d < 1:
        raise ValueError("d must be positive")
    cut = (d + 1) * v.s0
    kwargs = {} if budget is None else {"budget": budget}
    S = enumerate_up_to(ExplicitList(v.weights), cut, open_bound=True, **kwargs)
    low_degree = [q for q in enumerate_Sd(v, d) if q < cut]
    bound = binomial(v.n + d, v.n)
    count = len(S.elements)
    return Lemma2Report(count, bound, count < bound, list(S.elements) == low_degree)


_TOKEN_RE = re.compile(r"\s*(?:(\d+(?:/\d+)?)|(x\d+|[a-z])|([+\-*^]))")
_LETTERS = {"x": 1, "y": 2, "z": 3, "w": 4}


def _tokenize(text: str):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"unexpected character at position {pos} in {text!r}")
        num, var, op = m.groups()
        if num is not None:
            out.append(("num", num))
        elif var is not None:
            if var in _LETTERS:
                out.append(("var", _LETTERS[var]))
            elif var.startswith("x") and len(var) > 1 and int(var[1:]) >= 1:
                out.append(("var", int(var[1:])))
            else:
                raise ValueError(f"unknown variable {var!r} in {text!r}")
        else:
            out.append(("op", op))
        pos = m.end()
    return out


def parse_polynomial(text: str) -> SparsePolynomial:
    """Parse a sum of terms such as ``3/2 x^2 y - z + 1``.

    Grammar::

        poly   := [sign] term (sign term)*
        term   := [rational] ['*'] factor ('*'? factor)*  |  rational
        factor := var ['^' int]
        var    := x | y | z | w | x1 | x2 | ...

    ``x``, ``y``, ``z``, ``w`` are aliases for ``x1`` .. ``x4``.
    """
    toks = _tokenize(text)
    if not toks:
        raise ValueError("empty polynomial")
    i = 0
    terms = []

    def peek():
        return toks[i] if i < len(toks) else (None, None)

    sign = 1
    if peek() in (("op", "+"), ("op", "-")):
        sign = -1 if toks[i][1] == "-" else 1
        i += 1
    while True:
        coeff = Fraction(1)
        seen = False
        if peek()[0] == "num":
            coeff = parse_rational(toks[i][1])
            i += 1
            seen = True
        exps: dict[int, int] = {}
        while True:
            kind, val = peek()
            if kind == "op" and val == "*" and seen:
                i += 1
                kind, val = peek()
                if kind != "var":
                    raise ValueError(f"expected a variable after '*' in {text!r}")
            if kind != "var":
                break
            i += 1
            power = 1
            if peek() == ("op", "^"):
                i += 1
                kind2, val2 = peek()
                if kind2 != "num" or "/" in val2:
                    raise ValueError(f"exponent must be a nonnegative integer in {text!r}")
                power = int(val2)
                i += 1
            exps[val] = exps.get(val, 0) + power
            seen = True
        if not seen:
            raise ValueError(f"empty term in {text!r}")
        e = [0] * max(exps, default=0)
        for var, p in exps.items():
            e[var - 1] = p
        terms.append((tuple(e), sign * coeff))
        kind, val = peek()
        if kind is None:
            break
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
            continue
        raise ValueError(f"unexpected token {val!r} in {text!r}")
    return SparsePolynomial(terms)
