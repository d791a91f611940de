# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the exhaustive scan of UT_2(Z_m).

A residue triple ``(a, b, c)`` is encoded as ``(a*m + b)*m + c``.
"""
ctypedef long long i64

from array import array


cdef i64 MAX_MODULUS = 1 << 20


def square_codes(i64 m):
    """Sorted codes of the distinct squares ``M**2`` for ``M`` in UT_2(Z_m)."""
    if m < 1 or m > MAX_MODULUS:
        raise OverflowError(f"modulus {m} outside kernel range")
    cdef i64 m3 = m * m * m
    cdef bytearray seen_buf = bytearray(m3)
    cdef unsigned char[::1] seen = seen_buf
    cdef i64 a, b, c, code, count = 0
    with nogil:
        for a in range(m):
            for c in range(m):
                for b in range(m):
                    code = ((a * a % m) * m + b * ((a + c) % m) % m) * m + c * c % m
                    if not seen[code]:
                        seen[code] = 1
                        count += 1
    out = array("q", bytes(8 * count))
    cdef i64[::1] res = out
    cdef i64 i = 0
    for code in range(m3):
        if seen[code]:
            res[i] = code
            i += 1
    return out


def difference_mask(codes, i64 m, Py_ssize_t start=0, Py_ssize_t stop=-1):
    """Mark every ``S1 - S2`` with ``S1 = codes[start:stop]`` and ``S2`` any code.

    Returns a bytearray of length ``m**3`` indexed by triple code.
    """
    if m < 1 or m > MAX_MODULUS:
        raise OverflowError(f"modulus {m} outside kernel range")
    cdef const i64[::1] sq = codes
    cdef Py_ssize_t ns = sq.shape[0]
    if stop < 0 or stop > ns:
        stop = ns
    cdef i64 m2 = m * m
    cdef bytearray mask_buf = bytearray(m2 * m)
    cdef unsigned char[::1] mask = mask_buf
    cdef i64[::1] ca = array("q", bytes(8 * ns))
    cdef i64[::1] cb = array("q", bytes(8 * ns))
    cdef i64[::1] cc = array("q", bytes(8 * ns))
    cdef Py_ssize_t i, j
    cdef i64 a1, b1, c1, da, db, dc
    with nogil:
        for j in range(ns):
            ca[j] = sq[j] // m2
            cb[j] = (sq[j] // m) % m
            cc[j] = sq[j] % m
        for i in range(start, stop):
            a1 = ca[i] + m
            b1 = cb[i] + m
            c1 = cc[i] + m
            for j in range(ns):
                # operands lie in [1, 2m), so one conditional subtraction reduces
                da = a1 - ca[j]
                if da >= m:
                    da -= m
                db = b1 - cb[j]
                if db >= m:
                    db -= m
                dc = c1 - cc[j]
                if dc >= m:
                    dc -= m
                mask[(da * m + db) * m + dc] = 1
    return mask_buf
