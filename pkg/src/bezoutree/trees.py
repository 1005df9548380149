"""Trinary Pythagorean-pair trees and their companion Bezout trees.

Child ``i`` of a node appends digit ``i`` to its path::

    f1(m, n) = (2m - n, m)    g1(r, s) = (-s, r + 2s)
    f2(m, n) = (2m + n, m)    g2(r, s) = (s, r - 2s)
    f3(m, n) = (2n + m, n)    g3(r, s) = (r, s - 2r)

Each ``g_i`` is the inverse transpose of the matrix of ``f_i``, so a Bezout
pair of a node propagates to a Bezout pair of each child.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Mapping

from .bezout_core import PreconditionError, beta

__all__ = [
    "TreeNode",
    "ROOTS",
    "CANONICAL_OVERRIDES",
    "f_child",
    "g_child",
    "iter_pyth_tree",
    "pyth_tree",
    "iter_bezout_tree",
    "bezout_tree",
    "node_at",
    "locate",
    "first_mismatch",
]

Pair = tuple[int, int]

ROOTS: tuple[Pair, Pair] = ((3, 1), (2, 1))

# The (2,1) tree needs its depth-1 top entry replaced by beta(3, 2).
CANONICAL_OVERRIDES: Mapping[Pair, Mapping[str, Pair]] = {(2, 1): {"1": (1, -1)}}


@dataclass(frozen=True)
class TreeNode:
    path: str
    pair: Pair
    bezout: Pair | None = None
    overridden: bool = False

    @property
    def depth(self) -> int:
        return len(self.path)


def f_child(p: Pair, i: int) -> Pair:
    m, n = p
    if i == 1:
        return 2 * m - n, m
    if i == 2:
        return 2 * m + n, m
    if i == 3:
        return 2 * n + m, n
    raise ValueError(f"child index must be 1, 2 or 3, got {i!r}")


def g_child(q: Pair, i: int) -> Pair:
    r, s = q
    if i == 1:
        return -s, r + 2 * s
    if i == 2:
        return s, r - 2 * s
    if i == 3:
        return r, s - 2 * r
    raise ValueError(f"child index must be 1, 2 or 3, got {i!r}")


def _check_root(root: Pair) -> None:
    m, n = root
    if not (m > n > 0):
        raise PreconditionError(f"tree root must satisfy m > n > 0, got {root}")
    if math.gcd(m, n) != 1:
        raise PreconditionError(f"tree root must be coprime, got {root}")


def _check_depth(depth: int) -> None:
    if depth < 0:
        raise PreconditionError(f"depth must be non-negative, got {depth}")


def iter_pyth_tree(root: Pair, depth: int) -> Iterator[TreeNode]:
    """Breadth-first stream of the pair tree; one level is held at a time."""
    _check_root(root)
    _check_depth(depth)
    level = [("", tuple(root))]
    for d in range(depth + 1):
        for path, pair in level:
            yield TreeNode(path, pair)
        if d == depth:
            break
        level = [(path + str(i), f_child(pair, i)) for path, pair in level for i in (1, 2, 3)]


def pyth_tree(root: Pair, depth: int) -> list[TreeNode]:
    return list(iter_pyth_tree(root, depth))


def iter_bezout_tree(
    root: Pair,
    seed: Pair,
    depth: int,
    canonical: bool = True,
    overrides: Mapping[str, Pair] | None = None,
) -> Iterator[TreeNode]:
    """Breadth-first stream of nodes carrying both the pair and its propagated Bezout pair.

    With ``canonical`` set, the default override map for ``root`` (if any) is
    applied; an explicit ``overrides`` mapping of path -> Bezout pair replaces
    the default. An overridden node's descendants propagate from the new value.
    """
    _check_root(root)
    _check_depth(depth)
    m, n = root
    r, s = seed
    if r * m + s * n != 1:
        raise PreconditionError(f"seed {tuple(seed)} is not a Bezout pair for root {tuple(root)}")
    if overrides is None:
        overrides = CANONICAL_OVERRIDES.get(tuple(root), {}) if canonical else {}
    for path in overrides:
        if path and path.strip("123"):
            raise PreconditionError(f"override path {path!r} is not over digits 1, 2, 3")

    level = [TreeNode("", tuple(root), tuple(seed), False)]
    for d in range(depth + 1):
        yield from level
        if d == depth:
            break
        nxt = []
        for node in level:
            for i in (1, 2, 3):
                path = node.path + str(i)
                pair = f_child(node.pair, i)
                if path in overrides:
                    nxt.append(TreeNode(path, pair, tuple(overrides[path]), True))
                else:
                    nxt.append(TreeNode(path, pair, g_child(node.bezout, i), False))
        level = nxt


def bezout_tree(
    root: Pair,
    seed: Pair,
    depth: int,
    canonical: bool = True,
    overrides: Mapping[str, Pair] | None = None,
) -> list[TreeNode]:
    return list(iter_bezout_tree(root, seed, depth, canonical, overrides))


def node_at(root: Pair, path: str) -> Pair:
    pair = tuple(root)
    for digit in path:
        pair = f_child(pair, int(digit))
    return pair


def _parent(a: int, b: int) -> tuple[int, Pair]:
    # which of f1, f2, f3 produced (a, b); the ranges are disjoint for coprime a > b > 0
    if a > 3 * b:
        return 3, (a - 2 * b, b)
    if 2 * b < a < 3 * b:
        return 2, (b, a - 2 * b)
    if b < a < 2 * b:
        return 1, (b, 2 * b - a)
    raise PreconditionError(f"({a}, {b}) has no parent in either tree")


def locate(p: Pair) -> tuple[Pair, str]:
    """Find the root and path with ``node_at(root, path) == p``."""
    m, n = p
    if not (m > n > 0):
        raise PreconditionError(f"locate needs m > n > 0, got {tuple(p)}")
    if math.gcd(m, n) != 1:
        raise PreconditionError(f"locate needs a coprime pair, got {tuple(p)}")
    digits = []
    pair = (m, n)
    while pair not in ROOTS:
        digit, pair = _parent(*pair)
        digits.append(str(digit))
    return pair, "".join(reversed(digits))


def first_mismatch(nodes: Iterator[TreeNode]) -> TreeNode | None:
    """First node whose propagated Bezout pair differs from ``beta`` of its pair."""
    for node in nodes:
        if node.bezout != beta(*node.pair):
            return node
    return None
