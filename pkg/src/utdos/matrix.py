"""Exact arithmetic on upper-triangular 2x2 integer matrices.

A matrix ``[[a, b], [0, c]]`` is stored as the triple ``(a, b, c)``; the zero
below the diagonal is never stored. Entries are Python ints, so nothing can
wrap around.
"""
from __future__ import annotations

from dataclasses import dataclass


def _check_int(name: str, v) -> None:
    if isinstance(v, bool) or not isinstance(v, int):
        raise TypeError(f"{name} must be an int, got {type(v).__name__}")


@dataclass(frozen=True, slots=True)
class UTMat:
    a: int
    b: int
    c: int

    def __post_init__(self):
        _check_int("a", self.a)
        _check_int("b", self.b)
        _check_int("c", self.c)

    @classmethod
    def zero(cls) -> UTMat:
        return cls(0, 0, 0)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [0, self.c]]

    def reduce(self, m: int) -> UTMat:
        return UTMat(self.a % m, self.b % m, self.c % m)

    def __sub__(self, other: UTMat) -> UTMat:
        return UTMat(self.a - other.a, self.b - other.b, self.c - other.c)

    def __matmul__(self, other: UTMat) -> UTMat:
        return UTMat(self.a * other.a,
                     self.a * other.b + self.b * other.c,
                     self.c * other.c)

    def __str__(self) -> str:
        return f"[[{self.a}, {self.b}], [0, {self.c}]]"


# The matrix being decided, [[p, r], [0, q]]; same type, different role.
Target = UTMat


def target(p: int, r: int, q: int) -> Target:
    return UTMat(p, r, q)


def square(m: UTMat) -> UTMat:
    return UTMat(m.a * m.a, m.b * (m.a + m.c), m.c * m.c)


def diff_of_squares(A: UTMat, B: UTMat) -> UTMat:
    """Return ``A**2 - B**2`` via the closed form.

    With ``A = [[a, b], [0, d]]`` and ``B = [[x, y], [0, u]]`` this is
    ``[[a^2 - x^2, b(a+d) - y(x+u)], [0, d^2 - u^2]]``.
    """
    a, b, d = A.a, A.b, A.c
    x, y, u = B.a, B.b, B.c
    return UTMat(a * a - x * x, b * (a + d) - y * (x + u), d * d - u * u)


def verify_witness(A: UTMat, B: UTMat, T: Target) -> bool:
    return diff_of_squares(A, B) == T


@dataclass(frozen=True, slots=True)
class Witness:
    """A pair ``(A, B)`` with ``A**2 - B**2 == target``, checked on creation."""

    A: UTMat
    B: UTMat
    target: Target

    def __post_init__(self):
        if not verify_witness(self.A, self.B, self.target):
            got = diff_of_squares(self.A, self.B)
            raise ValueError(f"A^2 - B^2 = {got}, expected {self.target}")

    def to_json(self) -> dict:
        return {"A": list(self.A.as_tuple()), "B": list(self.B.as_tuple())}
