"""Exact integers and rationals.

Python ints are already arbitrary precision and :class:`fractions.Fraction`
keeps numerator and denominator reduced with a positive denominator, hashing
on that canonical form.  This module adds the pieces the rest of the package
needs on top: a multiplicative binomial, a three-way comparison and the
``p/q`` text form used on the command line.
"""

from __future__ import annotations

import re
from fractions import Fraction

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def binomial(n: int, k: int) -> int:
    """Exact C(n, k); zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial needs nonnegative arguments, got ({n}, {k})")
    if k > n:
        return 0
    k = min(k, n - k)
    result = 1
    for i in range(1, k + 1):
        # result * (n-k+i) is divisible by i: it equals C(n-k+i, i) * i
        result = result * (n - k + i) // i
    return result


def rational_add(a: Rational, b: Rational) -> Rational:
    return a + b


def rational_mul_nat(q: Rational, m: int) -> Rational:
    if m < 0:
        raise ValueError("multiplier must be a natural number")
    return q * m


def rational_cmp(a: Rational, b: Rational) -> int:
    """Return -1, 0 or 1 as a is less than, equal to or greater than b."""
    lhs = a.numerator * b.denominator
    rhs = b.numerator * a.denominator
    return (lhs > rhs) - (lhs < rhs)


def parse_rational(text: str) -> Rational:
    """Parse ``p`` or ``p/q``.  Decimal and float notation is rejected."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"malformed rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(q: Rational) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational_list(text: str) -> list[Rational]:
    """Comma separated rationals, e.g. ``2,3`` or ``1/2, 1/3``."""
    parts = [p for p in text.split(",")]
    if not text.strip() or any(not p.strip() for p in parts):
        raise ValueError(f"malformed rational list: {text!r}")
    return [parse_rational(p) for p in parts]
