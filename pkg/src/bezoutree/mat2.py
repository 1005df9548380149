"""Unimodular 2x2 integer matrices and words over the generators U, S, T of GL2(Z).

Words are written left to right as matrix products, so the last letter acts
first on a column vector: ``"TTS"`` is ``T @ T @ S``. Lowercase ``s`` and ``t``
stand for the inverses of ``S`` and ``T``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .bezout_core import PreconditionError

__all__ = [
    "Mat2",
    "Gen",
    "IDENTITY",
    "mat_mul",
    "mat_inv",
    "inv_transpose",
    "apply",
    "eval_word",
    "factor",
    "parse_matrix",
    "parse_word",
    "format_word",
    "format_matrix",
]


@dataclass(frozen=True)
class Mat2:
    a11: int
    a12: int
    a21: int
    a22: int

    def __post_init__(self):
        if self.det not in (1, -1):
            raise PreconditionError(f"matrix {self.rows()} is not unimodular (det {self.det})")

    @property
    def det(self) -> int:
        return self.a11 * self.a22 - self.a12 * self.a21

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.a11, self.a12), (self.a21, self.a22)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Mat2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return mat_mul(self, other)

    def __repr__(self):
        return f"Mat2([[{self.a11}, {self.a12}], [{self.a21}, {self.a22}]])"


IDENTITY = Mat2(1, 0, 0, 1)


class Gen(str, enum.Enum):
    U = "U"
    S = "S"
    Sinv = "s"
    T = "T"
    Tinv = "t"

    @property
    def matrix(self) -> Mat2:
        return _GEN_MATRICES[self]

    @property
    def inverse(self) -> "Gen":
        return _GEN_INVERSES[self]

    def __str__(self):
        return self.value


_GEN_MATRICES = {
    Gen.U: Mat2(0, 1, 1, 0),
    Gen.S: Mat2(0, -1, 1, 0),
    Gen.Sinv: Mat2(0, 1, -1, 0),
    Gen.T: Mat2(1, 1, 0, 1),
    Gen.Tinv: Mat2(1, -1, 0, 1),
}
_GEN_INVERSES = {
    Gen.U: Gen.U,
    Gen.S: Gen.Sinv,
    Gen.Sinv: Gen.S,
    Gen.T: Gen.Tinv,
    Gen.Tinv: Gen.T,
}


def mat_mul(A: Mat2, B: Mat2) -> Mat2:
    return Mat2(
        A.a11 * B.a11 + A.a12 * B.a21,
        A.a11 * B.a12 + A.a12 * B.a22,
        A.a21 * B.a11 + A.a22 * B.a21,
        A.a21 * B.a12 + A.a22 * B.a22,
    )


def mat_inv(A: Mat2) -> Mat2:
    d = A.det  # +-1, so dividing is multiplying
    return Mat2(d * A.a22, -d * A.a12, -d * A.a21, d * A.a11)


def inv_transpose(A: Mat2) -> Mat2:
    """``(A^-1)^T``, the action carried by Bezout coefficient pairs."""
    d = A.det
    return Mat2(d * A.a22, -d * A.a21, -d * A.a12, d * A.a11)


def apply(A: Mat2, p: tuple[int, int]) -> tuple[int, int]:
    m, n = p
    return A.a11 * m + A.a12 * n, A.a21 * m + A.a22 * n


def eval_word(word: Iterable[Gen | str]) -> Mat2:
    result = IDENTITY
    for letter in word:
        result = mat_mul(result, Gen(letter).matrix)
    return result


def _t_power(k: int) -> list[Gen]:
    return [Gen.T] * k if k >= 0 else [Gen.Tinv] * (-k)


def factor(A: Mat2) -> list[Gen]:
    """A word over {U, S, s, T, t} whose product is exactly ``A``.

    Euclidean descent on the first column: left-multiply by ``T^-q`` then ``S``
    until the lower-left entry vanishes, leaving ``[[±1, b], [0, ±1]]``. The
    word length is the number of descent rounds plus the sum of the absolute
    quotients plus ``|b|``, since the alphabet has no power letters.
    """
    if not isinstance(A, Mat2):
        A = Mat2.from_rows(A)
    a, b, c, d = A.a11, A.a12, A.a21, A.a22
    prefix: list[Gen] = []
    while c != 0:
        q = a // c
        # T^-q then S: (a, c) -> (-c, a - q*c); undo with T^q S^-1 on the left
        a, b = a - q * c, b - q * d
        a, b, c, d = -c, -d, a, b
        prefix += _t_power(q)
        prefix.append(Gen.Sinv)
    # now [[a, b], [0, d]] with a, d in {1, -1}
    if a == 1 and d == 1:
        tail = _t_power(b)
    elif a == -1 and d == -1:
        tail = [Gen.S, Gen.S] + _t_power(-b)
    elif a == 1:
        tail = [Gen.U, Gen.S] + _t_power(b)
    else:
        tail = [Gen.S, Gen.U] + _t_power(-b)
    word = prefix + tail
    assert eval_word(word) == A
    return word


def parse_matrix(text: str) -> Mat2:
    """Parse ``"a11,a12;a21,a22"``."""
    rows = [row.split(",") for row in text.strip().split(";")]
    if len(rows) != 2 or any(len(row) != 2 for row in rows):
        raise ValueError(f"matrix literal must look like 'a,b;c,d', got {text!r}")
    return Mat2.from_rows([[int(x) for x in row] for row in rows])


def parse_word(text: str) -> list[Gen]:
    try:
        return [Gen(ch) for ch in text.strip()]
    except ValueError:
        raise ValueError(f"word literal may only use letters U, S, s, T, t; got {text!r}") from None


def format_word(word: Iterable[Gen]) -> str:
    return "".join(Gen(x).value for x in word)


def format_matrix(A: Mat2) -> str:
    return f"{A.a11},{A.a12};{A.a21},{A.a22}"
