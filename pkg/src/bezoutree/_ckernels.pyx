# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernel on 64-bit integers.

Callers must keep every intermediate within int64; ``fits_int64`` checks the
scan box before ``scan_block`` is used.
"""

BACKEND = "cython"

ctypedef long long i64


cdef inline i64 _sign(i64 x) nogil:
    return (x > 0) - (x < 0)


cdef inline i64 _abs(i64 x) nogil:
    return -x if x < 0 else x


cdef inline void _euclid(i64 a, i64 b, i64* g, i64* r, i64* s) nogil:
    # a > b > 0
    cdef i64 r0 = 1, r1 = 0, s0 = 0, s1 = 1, q, t
    while b != 0:
        q = a / b
        t = a - q * b
        a = b
        b = t
        t = r0 - q * r1
        r0 = r1
        r1 = t
        t = s0 - q * s1
        s0 = s1
        s1 = t
    g[0] = a
    r[0] = r0
    s[0] = s0


cdef inline void _xgcd(i64 a, i64 b, i64* g, i64* r, i64* s) nogil:
    cdef i64 aa, ab
    if a == 0:
        g[0] = _abs(b); r[0] = 0; s[0] = _sign(b)
        return
    if b == 0:
        g[0] = _abs(a); r[0] = _sign(a); s[0] = 0
        return
    if a == b or a == -b:
        g[0] = _abs(b); r[0] = 0; s[0] = _sign(b)
        return
    aa = _abs(a)
    ab = _abs(b)
    if aa > ab:
        _euclid(aa, ab, g, r, s)
    else:
        _euclid(ab, aa, g, s, r)
    r[0] = _sign(a) * r[0]
    s[0] = _sign(b) * s[0]


def canonical_xgcd(i64 a, i64 b):
    cdef i64 g, r, s
    _xgcd(a, b, &g, &r, &s)
    return g, r, s


def scan_block(i64 a11, i64 a12, i64 a21, i64 a22, i64 m_lo, i64 m_hi, i64 bound):
    cdef i64 det = a11 * a22 - a12 * a21
    cdef i64 b11 = det * a22, b12 = -det * a21, b21 = -det * a12, b22 = det * a11
    cdef i64 m, n, g, r, s, eg, er, es
    failures = []
    for m in range(m_lo, m_hi + 1):
        for n in range(-bound, bound + 1):
            _xgcd(m, n, &g, &r, &s)
            if g != 1:
                continue
            _xgcd(a11 * m + a12 * n, a21 * m + a22 * n, &eg, &er, &es)
            if er != b11 * r + b12 * s or es != b21 * r + b22 * s:
                failures.append((m, n))
    return failures
