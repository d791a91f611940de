"""Integers as differences of two squares, and the corner equation solver."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

from .errors import NotRepresentable

DEFAULT_ZERO_BOUND = 8


@dataclass(frozen=True, slots=True, order=True)
class DosRep:
    """``x**2 - y**2 == n``."""

    x: int
    y: int
    n: int

    def __post_init__(self):
        if self.x * self.x - self.y * self.y != self.n:
            raise ValueError(f"{self.x}^2 - {self.y}^2 != {self.n}")

    def as_pair(self) -> tuple[int, int]:
        return (self.x, self.y)


@dataclass(frozen=True, slots=True)
class LinearSolution:
    """``b*s - y*t == r``."""

    b: int
    y: int


def is_dos(n: int) -> bool:
    # Python's % already gives the canonical residue for negative n.
    return n % 4 != 2


def _require_dos(n: int) -> None:
    if not is_dos(n):
        raise NotRepresentable(f"{n} = 2 (mod 4) is not a difference of two squares")


def canonical_dos(n: int) -> DosRep:
    _require_dos(n)
    if n == 0:
        return DosRep(0, 0, 0)
    if n % 2:
        return DosRep((n + 1) // 2, (n - 1) // 2, n)
    return DosRep(n // 4 + 1, n // 4 - 1, n)


def divisors(n: int) -> list[int]:
    """Positive divisors of ``|n|`` by trial division, ascending."""
    n = abs(n)
    if n == 0:
        raise ValueError("0 has infinitely many divisors")
    small, large = [], []
    for i in range(1, isqrt(n) + 1):
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
    return small + large[::-1]


@lru_cache(maxsize=4096)
def _enumerate(n: int, zero_bound: int) -> tuple[tuple[int, int], ...]:
    if n == 0:
        reps = set()
        for t in range(-zero_bound, zero_bound + 1):
            reps.add((t, t))
            reps.add((t, -t))
        return tuple(sorted(reps))
    reps = set()
    for dv in divisors(n):
        for s in (dv, -dv):
            t = n // s
            if (s - t) % 2 == 0:
                reps.add(((s + t) // 2, (t - s) // 2))
    return tuple(sorted(reps))


def enumerate_dos(n: int, zero_bound: int = DEFAULT_ZERO_BOUND) -> list[DosRep]:
    """All ``(x, y)`` with ``x**2 - y**2 == n``, sorted lexicographically.

    Every representation comes from a factorization ``n = s*t`` with ``s``
    and ``t`` of equal parity, via ``x = (s+t)/2``, ``y = (t-s)/2``. For
    ``n == 0`` the family ``(t, +-t)`` is infinite and is cut at
    ``|t| <= zero_bound``.
    """
    _require_dos(n)
    if zero_bound < 0:
        raise ValueError("zero_bound must be nonnegative")
    return [DosRep(x, y, n) for x, y in _enumerate(n, zero_bound)]


def gcd_nonneg(s: int, t: int) -> int:
    return gcd(s, t)


def ext_gcd(s: int, t: int) -> tuple[int, int, int]:
    """Return ``(g, u, v)`` with ``s*u + t*v == g == gcd(s, t) >= 0``."""
    r0, r1 = s, t
    u0, u1 = 1, 0
    v0, v1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if r0 < 0:
        r0, u0, v0 = -r0, -u0, -v0
    return r0, u0, v0


def solve_linear(s: int, t: int, r: int) -> LinearSolution | None:
    """Solve ``b*s - y*t == r`` in integers, or return None.

    Among all solutions the one with the smallest ``|b|`` is returned
    (positive ``b`` on ties). When ``t == 0`` the value of ``y`` is free
    and is set to 0.
    """
    if s == 0 and t == 0:
        return LinearSolution(0, 0) if r == 0 else None
    g, u, v = ext_gcd(s, t)
    if r % g:
        return None
    if t == 0:
        return LinearSolution(r // s, 0)
    period = abs(t) // g
    b = (u * (r // g)) % period
    if 2 * b > period:
        b -= period
    y, rem = divmod(b * s - r, t)
    if rem:
        raise AssertionError("Bezout step produced a non-integral y")
    return LinearSolution(b, y)
