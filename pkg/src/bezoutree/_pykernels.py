"""Pure-Python scan kernel; reference behaviour for the compiled ``_ckernels``."""
from __future__ import annotations

from .bezout_core import xgcd

BACKEND = "python"


def canonical_xgcd(a, b):
    return tuple(xgcd(a, b))


def scan_block(a11, a12, a21, a22, m_lo, m_hi, bound):
    """Coprime ``(m, n)`` with ``m_lo <= m <= m_hi`` and ``|n| <= bound`` failing compatibility.

    Returned in lexicographic order.
    """
    det = a11 * a22 - a12 * a21
    # inverse transpose of the matrix, det is +-1
    b11, b12, b21, b22 = det * a22, -det * a21, -det * a12, det * a11
    failures = []
    for m in range(m_lo, m_hi + 1):
        for n in range(-bound, bound + 1):
            g, r, s = xgcd(m, n)
            if g != 1:
                continue
            _, er, es = xgcd(a11 * m + a12 * n, a21 * m + a22 * n)
            if er != b11 * r + b12 * s or es != b21 * r + b22 * s:
                failures.append((m, n))
    return failures
