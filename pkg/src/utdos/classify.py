"""Closed-form decision procedure for ``[[p, r], [0, q]] = A**2 - B**2``.

The answer depends only on residues: the diagonal must avoid 2 (mod 4), and
then the corner must be divisible by ``m_of(p, q)``, which is 1, 2 or 4.
No search happens here; the search-based check lives in :mod:`utdos.oracle`.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Union

from .errors import NotRepresentable
from .intdos import is_dos
from .matrix import Target, UTMat, Witness

_G4_MOD16 = frozenset({(4, 4), (12, 12)})
_G2_MOD16 = frozenset({(4, 12), (8, 8), (12, 4)})


class Kind(enum.Enum):
    BOTH_ODD = "BothOdd"
    ODD_TIMES_FOUR = "OddTimesFour"
    FOUR_TIMES_ODD = "FourTimesOdd"
    BOTH_FOUR = "BothFour"


class Obstruction(enum.Enum):
    DIAGONAL_MOD4 = "DiagonalMod4"
    CORNER_PARITY = "CornerParity"
    CORNER_MOD4 = "CornerMod4"


@dataclass(frozen=True, slots=True)
class CaseTag:
    """Diagonal shape of a representable target.

    ``k`` and ``n`` parametrize ``p`` and ``q``: ``2k+1`` for an odd entry and
    ``4k`` (resp. ``4n``) for an entry divisible by 4.
    """

    kind: Kind
    k: int
    n: int

    @property
    def p(self) -> int:
        return 2 * self.k + 1 if self.kind in (Kind.BOTH_ODD, Kind.ODD_TIMES_FOUR) else 4 * self.k

    @property
    def q(self) -> int:
        return 2 * self.n + 1 if self.kind in (Kind.BOTH_ODD, Kind.FOUR_TIMES_ODD) else 4 * self.n

    @property
    def ij(self) -> tuple[int, int] | None:
        if self.kind is Kind.BOTH_FOUR:
            return (self.k % 4, self.n % 4)
        return None

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "k": self.k, "n": self.n}

    @classmethod
    def from_json(cls, d: dict) -> CaseTag:
        return cls(Kind(d["kind"]), d["k"], d["n"])


def case_of(p: int, q: int) -> CaseTag:
    if not (is_dos(p) and is_dos(q)):
        raise NotRepresentable(f"diagonal ({p}, {q}) has an entry = 2 (mod 4)")
    # Floor division is exact here, so negative entries parametrize correctly.
    if p % 2 and q % 2:
        return CaseTag(Kind.BOTH_ODD, (p - 1) // 2, (q - 1) // 2)
    if p % 2:
        return CaseTag(Kind.ODD_TIMES_FOUR, (p - 1) // 2, q // 4)
    if q % 2:
        return CaseTag(Kind.FOUR_TIMES_ODD, p // 4, (q - 1) // 2)
    return CaseTag(Kind.BOTH_FOUR, p // 4, q // 4)


def m_of(p: int, q: int) -> int:
    """The modulus ``m`` with ``[[p, r], [0, q]]`` representable iff ``m | r``."""
    if not (is_dos(p) and is_dos(q)):
        raise NotRepresentable(f"diagonal ({p}, {q}) has an entry = 2 (mod 4)")
    if p % 2 and q % 2:
        return 2 if p % 4 == q % 4 else 1
    if p % 2 or q % 2:
        return 1
    res = (p % 16, q % 16)
    if res in _G4_MOD16:
        return 4
    if res in _G2_MOD16:
        return 2
    return 1


@dataclass(frozen=True, slots=True)
class Representable:
    target: Target
    case: CaseTag
    g: int
    witness: Optional[Witness] = None

    representable = True


@dataclass(frozen=True, slots=True)
class NotRepresentableVerdict:
    target: Target
    obstruction: Obstruction

    representable = False


Verdict = Union[Representable, NotRepresentableVerdict]


def decide(T: Target, witness: bool = False) -> Verdict:
    p, r, q = T.a, T.b, T.c
    if not (is_dos(p) and is_dos(q)):
        return NotRepresentableVerdict(T, Obstruction.DIAGONAL_MOD4)
    g = m_of(p, q)
    if r % g:
        obs = Obstruction.CORNER_PARITY if g == 2 else Obstruction.CORNER_MOD4
        return NotRepresentableVerdict(T, obs)
    w = None
    if witness:
        from .witness import build

        w = build(T)
    return Representable(T, case_of(p, q), g, w)


def verdict_to_json(v: Verdict) -> dict:
    T = v.target
    out = {"p": T.a, "r": T.b, "q": T.c, "representable": v.representable}
    if isinstance(v, Representable):
        out["g"] = v.g
        out["case"] = v.case.to_json()
        if v.witness is not None:
            out["witness"] = v.witness.to_json()
    else:
        out["obstruction"] = v.obstruction.value
    return out


def verdict_from_json(d: dict) -> Verdict:
    T = UTMat(d["p"], d["r"], d["q"])
    if not d["representable"]:
        return NotRepresentableVerdict(T, Obstruction(d["obstruction"]))
    w = None
    if "witness" in d:
        w = Witness(UTMat(*d["witness"]["A"]), UTMat(*d["witness"]["B"]), T)
    return Representable(T, CaseTag.from_json(d["case"]), d["g"], w)
