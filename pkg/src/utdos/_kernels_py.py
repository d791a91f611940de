"""Pure-Python versions of the kernels in ``_kernels.pyx``; same results."""
from array import array


def square_codes(m):
    if m < 1:
        raise OverflowError(f"modulus {m} outside kernel range")
    seen = set()
    for a in range(m):
        for c in range(m):
            a2, c2, s = a * a % m, c * c % m, (a + c) % m
            for b in range(m):
                seen.add((a2 * m + b * s % m) * m + c2)
    return array("q", sorted(seen))


def difference_mask(codes, m, start=0, stop=-1):
    if m < 1:
        raise OverflowError(f"modulus {m} outside kernel range")
    ns = len(codes)
    if stop < 0 or stop > ns:
        stop = ns
    m2 = m * m
    mask = bytearray(m2 * m)
    decoded = [(s // m2, s // m % m, s % m) for s in codes]
    for a1, b1, c1 in decoded[start:stop]:
        for a2, b2, c2 in decoded:
            mask[(((a1 - a2) % m) * m + (b1 - b2) % m) * m + (c1 - c2) % m] = 1
    return mask
