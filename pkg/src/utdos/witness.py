"""Explicit witnesses ``(A, B)`` for representable targets.

Each diagonal shape has a fixed choice of diagonals ``(a, x, d, u)`` with
``p = a^2 - x^2`` and ``q = d^2 - u^2`` whose corner gcd ``gcd(a+d, x+u)``
equals ``m_of(p, q)``; the corners ``(b, y)`` then come from the linear
solver.
"""
from __future__ import annotations

from .classify import CaseTag, Kind, Representable, case_of, decide
from .errors import InternalError, NotRepresentable
from .intdos import solve_linear
from .matrix import Target, UTMat, Witness


def _four_four_00(k: int, n: int) -> tuple[int, int, int, int]:
    K, N = k // 4, n // 4
    return 2 * (K + 1), 2 * (K - 1), -(4 * N + 1), -(4 * N - 1)


def _four_four_02(k: int, n: int) -> tuple[int, int, int, int]:
    # u = -(4N+1) makes the corner sums 2K-4N-1 and 2K-4N-3, two odd
    # numbers two apart; with u = +(4N+1) the gcd can be 3, 5, 7, ...
    K, N = k // 4, (n - 2) // 4
    return 2 * (K + 1), 2 * (K - 1), -(4 * N + 3), -(4 * N + 1)


def diagonals(case: CaseTag) -> tuple[int, int, int, int]:
    """Return ``(a, x, d, u)`` for the given diagonal shape."""
    k, n = case.k, case.n
    if case.kind is Kind.BOTH_ODD:
        return k + 1, k, n + 1, n
    if case.kind is Kind.ODD_TIMES_FOUR:
        return k + 1, k, -(n + 1), -(n - 1)
    if case.kind is Kind.FOUR_TIMES_ODD:
        return -(k + 1), -(k - 1), n + 1, n
    ij = case.ij
    if ij == (0, 0):
        return _four_four_00(k, n)
    if ij == (0, 2):
        return _four_four_02(k, n)
    if ij == (2, 0):
        # mirror of (0, 2): build for (q, p), then swap the diagonal slots
        d, u, a, x = _four_four_02(n, k)
        return a, x, d, u
    return k + 1, k - 1, n + 1, n - 1


def build(T: Target) -> Witness:
    v = decide(T)
    if not isinstance(v, Representable):
        raise NotRepresentable(f"{T} is not a difference of squares ({v.obstruction.value})")
    a, x, d, u = diagonals(case_of(T.a, T.c))
    sol = solve_linear(a + d, x + u, T.b)
    if sol is None:
        raise InternalError(
            f"corner equation b*{a + d} - y*{x + u} = {T.b} unsolvable for {T}"
        )
    try:
        return Witness(UTMat(a, sol.b, d), UTMat(x, sol.y, u), T)
    except ValueError as exc:
        raise InternalError(str(exc)) from exc
