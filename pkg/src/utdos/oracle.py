"""Brute-force search over diagonal representations.

Deliberately independent of :mod:`utdos.classify` and :mod:`utdos.witness`:
it only enumerates ``p = a^2 - x^2``, ``q = d^2 - u^2`` and tries to solve
the corner equation for each quadruple.
"""
from __future__ import annotations

from typing import Optional

from .errors import NotRepresentable
from .intdos import DEFAULT_ZERO_BOUND, enumerate_dos, gcd_nonneg, is_dos, solve_linear
from .matrix import Target, UTMat, Witness


def brute_decide(T: Target, zero_bound: int = DEFAULT_ZERO_BOUND) -> Optional[Witness]:
    """First witness found by exhaustive search, or None.

    Exact when both diagonal entries are nonzero; a zero diagonal entry has
    infinitely many representations, of which only ``|t| <= zero_bound`` are
    tried.
    """
    p, r, q = T.a, T.b, T.c
    if not (is_dos(p) and is_dos(q)):
        return None
    reps_q = enumerate_dos(q, zero_bound)
    for rp in enumerate_dos(p, zero_bound):
        a, x = rp.x, rp.y
        for rq in reps_q:
            d, u = rq.x, rq.y
            sol = solve_linear(a + d, x + u, r)
            if sol is not None:
                return Witness(UTMat(a, sol.b, d), UTMat(x, sol.y, u), T)
    return None


def brute_g(p: int, q: int, zero_bound: int = DEFAULT_ZERO_BOUND) -> int:
    """Smallest positive ``gcd(a+d, x+u)`` over all representation quadruples."""
    if not (is_dos(p) and is_dos(q)):
        raise NotRepresentable(f"diagonal ({p}, {q}) has an entry = 2 (mod 4)")
    best = 0
    reps_q = enumerate_dos(q, zero_bound)
    for rp in enumerate_dos(p, zero_bound):
        for rq in reps_q:
            g = gcd_nonneg(rp.x + rq.x, rp.y + rq.y)
            if g and (best == 0 or g < best):
                best = g
                if best == 1:
                    return 1
    if best == 0:
        raise AssertionError(f"no quadruple with nonzero corner sums for ({p}, {q})")
    return best
