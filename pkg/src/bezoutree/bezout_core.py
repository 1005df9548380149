"""Exact gcd, the matrix-recorded Euclidean algorithm and canonical Bezout coefficients.

The canonical map ``beta`` extends the textbook extended Euclidean algorithm
(defined for ``a > b > 0``) to every ordered integer pair:

* ``(0, a)``  -> ``(|a|, 0, sign(a))``, with ``sign(0) = 0``
* ``(a, 0)``  -> ``(|a|, sign(a), 0)``         (swap of the previous rule)
* ``(±a, a)`` -> ``(|a|, 0, sign(a))``
* ``|a| != |b|``, both nonzero: solve ``(|a|, |b|)`` (swapping when ``|b| > |a|``),
  then put the signs of ``a`` and ``b`` back on ``r`` and ``s``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

__all__ = [
    "PreconditionError",
    "XgcdTriple",
    "QuotientTrace",
    "gcd",
    "sign",
    "euclid_trace",
    "xgcd",
    "beta",
]


class PreconditionError(ValueError):
    """An input violates the documented precondition of an operation."""


class XgcdTriple(NamedTuple):
    g: int
    r: int
    s: int


def sign(x: int) -> int:
    return (x > 0) - (x < 0)


def gcd(a: int, b: int) -> int:
    """Non-negative gcd; ``gcd(0, 0) == 0``."""
    return math.gcd(a, b)


@dataclass(frozen=True)
class QuotientTrace:
    """Quotients ``q_1..q_k`` of the division chain, plus the leading swap flag.

    ``(m, n) = [U] * [[q_1,1],[1,0]] * ... * [[q_k,1],[1,0]] * (1, 0)`` where the
    swap matrix ``U = [[0,1],[1,0]]`` is present only when ``swapped``.
    """

    quotients: tuple[int, ...]
    swapped: bool = False

    def matrix(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """The recorded product as nested row tuples."""
        a, b, c, d = (0, 1, 1, 0) if self.swapped else (1, 0, 0, 1)
        for q in self.quotients:
            # right-multiply by [[q, 1], [1, 0]]
            a, b = a * q + b, a
            c, d = c * q + d, c
        return (a, b), (c, d)

    def pair(self) -> tuple[int, int]:
        (a, _), (c, _) = self.matrix()
        return a, c


def euclid_trace(m: int, n: int) -> QuotientTrace:
    """Record the division algorithm on a coprime pair of distinct positive integers."""
    if m <= 0 or n <= 0:
        raise PreconditionError(f"euclid_trace needs positive inputs, got ({m}, {n})")
    if m == n:
        raise PreconditionError(f"euclid_trace needs m != n, got ({m}, {n})")
    if math.gcd(m, n) != 1:
        raise PreconditionError(f"euclid_trace needs coprime inputs, got ({m}, {n})")
    swapped = n > m
    x, y = (n, m) if swapped else (m, n)
    quotients = []
    while y:
        q, rem = divmod(x, y)
        quotients.append(q)
        x, y = y, rem
    return QuotientTrace(tuple(quotients), swapped)


def _euclid_positive(a: int, b: int) -> tuple[int, int, int]:
    # a > b > 0; r*a + s*b == g
    r0, r1 = 1, 0
    s0, s1 = 0, 1
    while b:
        q, rem = divmod(a, b)
        a, b = b, rem
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    return a, r0, s0


def xgcd(a: int, b: int) -> XgcdTriple:
    """Canonical ``(g, r, s)`` with ``r*a + s*b == g == gcd(a, b)``.

    >>> xgcd(5, 3)
    XgcdTriple(g=1, r=-1, s=2)
    >>> xgcd(1, -2)
    XgcdTriple(g=1, r=1, s=0)
    """
    if a == 0:
        return XgcdTriple(abs(b), 0, sign(b))
    if b == 0:
        return XgcdTriple(abs(a), sign(a), 0)
    if a == b or a == -b:
        return XgcdTriple(abs(b), 0, sign(b))
    abs_a, abs_b = abs(a), abs(b)
    if abs_a > abs_b:
        g, r, s = _euclid_positive(abs_a, abs_b)
    else:
        g, s, r = _euclid_positive(abs_b, abs_a)
    triple = XgcdTriple(g, sign(a) * r, sign(b) * s)
    assert triple.r * a + triple.s * b == g, (a, b, triple)
    return triple


def beta(a: int, b: int) -> tuple[int, int]:
    """Canonical Bezout coefficients of a coprime pair."""
    g, r, s = xgcd(a, b)
    if g != 1:
        raise PreconditionError(f"beta needs a coprime pair, got ({a}, {b}) with gcd {g}")
    return r, s
