"""Compatibility of canonical Bezout coefficients with unimodular transforms.

For a unimodular ``A`` and coprime ``p``, ``A`` is *compatible* at ``p`` when
``beta(A p) == inv_transpose(A) beta(p)``. The pairs where this fails form the
finite exceptional set of ``A``.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from . import _kernels
from .bezout_core import PreconditionError, beta
from .mat2 import Gen, Mat2, apply, inv_transpose, mat_inv, mat_mul
from .trees import f_child, g_child

__all__ = [
    "CompatReport",
    "ExceptionalSet",
    "GENERATOR_EXCEPTIONAL",
    "LEMMAS",
    "check_compat",
    "generator_exceptional",
    "candidate_exceptional",
    "scan_exceptional",
    "check_lemma",
    "tree_step_compatible",
]

Pair = tuple[int, int]


@dataclass(frozen=True)
class CompatReport:
    pair: Pair
    transformed: Pair
    expected: Pair  # beta(transformed)
    actual: Pair  # inv_transpose(A) @ beta(pair)

    @property
    def equal(self) -> bool:
        return self.expected == self.actual


@dataclass(frozen=True)
class ExceptionalSet:
    matrix: Mat2
    bound: int
    pairs: tuple[Pair, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(sorted(set(self.pairs))))

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def __contains__(self, pair):
        return tuple(pair) in self.pairs


def check_compat(A: Mat2, p: Pair) -> CompatReport:
    m, n = p
    if math.gcd(m, n) != 1:
        raise PreconditionError(f"check_compat needs a coprime pair, got {tuple(p)}")
    transformed = apply(A, (m, n))
    return CompatReport(
        pair=(m, n),
        transformed=transformed,
        expected=beta(*transformed),
        actual=apply(inv_transpose(A), beta(m, n)),
    )


_UNIT_CORNERS = ((-1, -1), (-1, 1), (1, -1), (1, 1))

GENERATOR_EXCEPTIONAL: dict[Gen, tuple[Pair, ...]] = {
    Gen.U: _UNIT_CORNERS,
    Gen.S: _UNIT_CORNERS,
    Gen.Sinv: _UNIT_CORNERS,
    Gen.T: ((-1, 0), (-1, 2), (1, -2), (1, 0)),
    Gen.Tinv: ((-1, -2), (-1, 0), (1, 0), (1, 2)),
}


def generator_exceptional(letter: Gen | str) -> ExceptionalSet:
    """Tabulated exceptional set of a single generator.

    Every pair has coordinates of size at most 2, so any bound >= 2 covers it.
    """
    letter = Gen(letter)
    return ExceptionalSet(letter.matrix, 2, GENERATOR_EXCEPTIONAL[letter])


def candidate_exceptional(word: Sequence[Gen | str]) -> set[Pair]:
    """Union over the letters of the word of their exceptional sets, pulled back to the input.

    The last letter acts first. A pair can only fail compatibility for the
    whole word if it fails at some intermediate step.
    """
    letters = [Gen(x) for x in word]
    candidates: set[Pair] = set()
    done = Mat2(1, 0, 0, 1)  # product of the letters already applied
    for letter in reversed(letters):
        pull_back = mat_inv(done)
        for p in GENERATOR_EXCEPTIONAL[letter]:
            q = apply(pull_back, p)
            assert math.gcd(*q) == 1, q
            candidates.add(q)
        done = mat_mul(letter.matrix, done)
    return candidates


def _row_blocks(bound: int, workers: int) -> list[tuple[int, int]]:
    rows = range(-bound, bound + 1)
    size = max(1, -(-len(rows) // workers))
    return [(rows[i], rows[min(i + size, len(rows)) - 1]) for i in range(0, len(rows), size)]


def scan_exceptional(
    A: Mat2,
    bound: int = 100,
    workers: int = 1,
    backend: str | None = None,
) -> ExceptionalSet:
    """All coprime ``(m, n)`` with ``max(|m|, |n|) <= bound`` at which ``A`` is incompatible.

    ``workers > 1`` splits the rows of the grid over processes; the merged result
    is sorted, so it does not depend on the worker count. The compiled kernel is
    used only while the scan stays inside 64-bit range.
    """
    if bound < 1:
        raise PreconditionError(f"bound must be >= 1, got {bound}")
    if not isinstance(A, Mat2):
        A = Mat2.from_rows(A)
    entries = (A.a11, A.a12, A.a21, A.a22)
    if backend is None:
        backend = _kernels.default_backend()
        if backend == "cython" and not _kernels.fits_int64(entries, bound):
            backend = "python"
    elif backend == "cython" and not _kernels.fits_int64(entries, bound):
        raise PreconditionError("matrix entries too large for the compiled kernel at this bound")
    kernel = _kernels.get(backend)

    blocks = _row_blocks(bound, workers)
    if workers <= 1:
        found = [p for lo, hi in blocks for p in kernel.scan_block(*entries, lo, hi, bound)]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_scan_job, backend, entries, lo, hi, bound) for lo, hi in blocks]
            found = [p for fut in futures for p in fut.result()]
    return ExceptionalSet(A, bound, tuple(found))


def _scan_job(backend, entries, lo, hi, bound):
    return _kernels.get(backend).scan_block(*entries, lo, hi, bound)


# -- lemma-level identities -------------------------------------------------------


def _lemma_22(m, n):
    r, s = beta(m, n)
    return beta(2 * m + n, m) == (s, r - 2 * s)


def _lemma_23(m, n):
    r, s = beta(m, m - n)
    return beta(2 * m - n, m) == (s, r - s)


def _lemma_25(m, n):
    r, s = beta(m, n)
    return beta(m, m - n) == (r + s, -s)


def _lemma_27(m, n):
    r, s = beta(m, n)
    return beta(2 * m - n, m) == (-s, r + 2 * s)


def _f3_step(m, n):
    r, s = beta(m, n)
    return beta(2 * n + m, n) == (r, s - 2 * r)


LEMMAS = {
    "L22": _lemma_22,
    "L23": _lemma_23,
    "L25": _lemma_25,
    "L27": _lemma_27,
    "T15f3": _f3_step,
}

_EXCLUDES_2_1 = {"L25", "L27"}


def check_lemma(tag: str, p: Pair) -> bool:
    """Evaluate one of the step identities in ``LEMMAS`` at a coprime ``m > n > 0``.

    L22: f2 step, L23: the ``(m, m-n) -> (2m-n, m)`` step, L25: ``(m, n) -> (m, m-n)``,
    L27: f1 step, T15f3: f3 step. L25 and L27 are false at ``(2, 1)`` and reject it.
    """
    if tag not in LEMMAS:
        raise ValueError(f"unknown lemma tag {tag!r}; expected one of {sorted(LEMMAS)}")
    m, n = p
    if not (m > n > 0) or math.gcd(m, n) != 1:
        raise PreconditionError(f"{tag} needs coprime m > n > 0, got {tuple(p)}")
    if tag in _EXCLUDES_2_1 and (m, n) == (2, 1):
        raise PreconditionError(f"{tag} does not hold at (2, 1)")
    return LEMMAS[tag](m, n)


def tree_step_compatible(p: Pair, i: int) -> bool:
    """Whether ``beta(f_i(p)) == g_i(beta(p))``."""
    return beta(*f_child(p, i)) == g_child(beta(*p), i)

