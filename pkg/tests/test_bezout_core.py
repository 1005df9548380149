import math

import pytest
from hypothesis import given, strategies as st

from bezoutree.bezout_core import (
    PreconditionError,
    QuotientTrace,
    beta,
    euclid_trace,
    gcd,
    sign,
    xgcd,
)
from bezoutree.mat2 import Mat2, mat_inv

from conftest import eea

ints = st.integers(min_value=-10**30, max_value=10**30)


@pytest.mark.parametrize("a,b,g", [(12, 8, 4), (0, -7, 7), (3, 1, 1), (0, 0, 0)])
def test_gcd(a, b, g):
    assert gcd(a, b) == g


@pytest.mark.parametrize(
    "pair,expected",
    [
        ((3, 1), (1, 0, 1)),
        ((5, 3), (1, -1, 2)),
        ((3, 2), (1, 1, -1)),
        ((0, 5), (5, 0, 1)),
        ((-7, 7), (7, 0, 1)),
        ((1, -2), (1, 1, 0)),
        ((0, 0), (0, 0, 0)),
        ((1, 0), (1, 1, 0)),
        ((-1, 0), (1, -1, 0)),
        ((7, -7), (7, 0, -1)),
    ],
)
def test_xgcd_examples(pair, expected):
    assert tuple(xgcd(*pair)) == expected


@pytest.mark.parametrize("pair,expected", [((2, 1), (0, 1)), ((12, 5), (-2, 5)), ((-3, -1), (0, -1))])
def test_beta_examples(pair, expected):
    assert beta(*pair) == expected


@pytest.mark.parametrize("pair", [(4, 2), (0, 0), (0, 3), (6, -9)])
def test_beta_rejects_non_coprime(pair):
    with pytest.raises(PreconditionError):
        beta(*pair)


def test_xgcd_supports_non_coprime():
    assert tuple(xgcd(12, 8)) == (4, 1, -1)
    assert tuple(xgcd(-12, 8)) == (4, -1, -1)


def test_bezout_identity_exhaustive():
    for a in range(-300, 301):
        for b in range(-300, 301):
            g, r, s = xgcd(a, b)
            assert r * a + s * b == g == math.gcd(a, b)


def test_matches_recursive_oracle():
    for a in range(2, 301):
        for b in range(1, a):
            if math.gcd(a, b) == 1:
                assert tuple(xgcd(a, b)) == eea(a, b)


def _rule_closure(limit):
    """All triples derivable from the five defining rules, by fixed-point iteration.

    Every rule is applied wherever its hypothesis holds, with no precedence, so a
    pair mapped to two different triples exposes an inconsistency.
    """
    derived = {}

    def add(pair, triple):
        derived.setdefault(pair, set())
        if triple in derived[pair]:
            return False
        derived[pair].add(triple)
        return True

    rng = range(-limit, limit + 1)
    for a in rng:
        for b in rng:
            if a > b > 0:
                add((a, b), eea(a, b))
            if a == 0:
                add((a, b), (abs(b), 0, sign(b)))
            if abs(a) == abs(b):
                add((a, b), (abs(b), 0, sign(b)))
    changed = True
    while changed:
        changed = False
        for (a, b), triples in list(derived.items()):
            for g, r, s in list(triples):
                if abs(a) != abs(b):
                    # swap rule
                    changed |= add((b, a), (g, s, r))
                if a >= 0 and b >= 0 and abs(a) != abs(b):
                    # sign rule, from (|x|, |y|) to every signing
                    for sa in (1, -1):
                        for sb in (1, -1):
                            x, y = sa * a, sb * b
                            changed |= add((x, y), (g, sign(x) * r, sign(y) * s))
    return derived


def test_rules_are_consistent_and_match_precedence():
    closure = _rule_closure(25)
    for (a, b), triples in closure.items():
        assert len(triples) == 1, ((a, b), triples)
        assert triples == {tuple(xgcd(a, b))}
    assert len(closure) == 51 * 51


@given(ints, ints)
def test_bezout_identity_property(a, b):
    g, r, s = xgcd(a, b)
    assert g == math.gcd(a, b)
    assert r * a + s * b == g


@given(ints, ints)
def test_negation_and_swap(a, b):
    if math.gcd(a, b) != 1 or abs(a) == abs(b):
        return
    r, s = beta(a, b)
    assert beta(-a, -b) == (-r, -s)
    assert beta(b, a) == (s, r)


@given(st.integers(1, 10**40), st.integers(1, 10**40))
def test_magnitude_bounds(a, b):
    if a < b:
        a, b = b, a
    if a == b or math.gcd(a, b) != 1:
        return
    r, s = beta(a, b)
    assert abs(r) <= b and abs(s) <= a


@pytest.mark.parametrize(
    "m,n,quotients,swapped",
    [(7, 3, (2, 3), False), (3, 7, (2, 3), True), (3, 1, (3,), False)],
)
def test_euclid_trace_examples(m, n, quotients, swapped):
    trace = euclid_trace(m, n)
    assert trace == QuotientTrace(quotients, swapped)
    assert trace.pair() == (m, n)


@pytest.mark.parametrize("pair", [(1, 1), (5, 5), (0, 3), (-3, 2), (4, 2)])
def test_euclid_trace_rejects(pair):
    with pytest.raises(PreconditionError):
        euclid_trace(*pair)


@given(st.integers(1, 10**25), st.integers(1, 10**25))
def test_trace_reconstruction(m, n):
    if m == n or math.gcd(m, n) != 1:
        return
    trace = euclid_trace(m, n)
    assert trace.pair() == (m, n)
    assert all(q >= 1 for q in trace.quotients)
    inv = mat_inv(Mat2.from_rows(trace.matrix()))
    # first row of the inverse is the canonical Bezout pair
    assert (inv.a11, inv.a12) == beta(m, n)
