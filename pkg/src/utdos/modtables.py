"""Exhaustive tables of ``{A**2 - B**2}`` in UT_2(Z_m)."""
from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from . import _backend
from .errors import ResourceError
from .matrix import Target

DEFAULT_MODULUS_CAP = 64
CAP_ENV = "UTDOS_MODULUS_CAP"

Triple = tuple[int, int, int]


def modulus_cap() -> int:
    return int(os.environ.get(CAP_ENV, DEFAULT_MODULUS_CAP))


@dataclass(frozen=True)
class ModTable:
    modulus: int
    representable: tuple[Triple, ...]
    _members: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        m = self.modulus
        for t in self.representable:
            if not all(0 <= v < m for v in t):
                raise ValueError(f"{t} is not reduced mod {m}")
        object.__setattr__(self, "_members", frozenset(self.representable))

    def __contains__(self, t) -> bool:
        return tuple(t) in self._members

    def __len__(self) -> int:
        return len(self.representable)

    def all_triples(self) -> Iterator[Triple]:
        m = self.modulus
        for a in range(m):
            for b in range(m):
                for c in range(m):
                    yield (a, b, c)

    def complement(self) -> tuple[Triple, ...]:
        members = self._members
        return tuple(t for t in self.all_triples() if t not in members)

    def filtered(self, diag_multiple: int | None) -> ModTable:
        """Restrict to triples whose diagonal entries are multiples of ``diag_multiple``."""
        if not diag_multiple:
            return self
        keep = tuple(t for t in self.representable if _diag_ok(t, diag_multiple))
        return _FilteredTable(self.modulus, keep, diag_multiple)

    def to_json(self) -> dict:
        return {"modulus": self.modulus, "representable": [list(t) for t in self.representable]}

    @classmethod
    def from_json(cls, d: dict) -> ModTable:
        return cls(d["modulus"], tuple(sorted(tuple(t) for t in d["representable"])))


@dataclass(frozen=True)
class _FilteredTable(ModTable):
    diag_multiple: int = 1

    def all_triples(self) -> Iterator[Triple]:
        return (t for t in super().all_triples() if _diag_ok(t, self.diag_multiple))


def _diag_ok(t: Triple, d: int) -> bool:
    return t[0] % d == 0 and t[2] % d == 0


def _mask_chunk(args):
    codes, m, start, stop = args
    return _backend.difference_mask(codes, m, start, stop)


def _check_modulus(m: int, cap: int | None) -> None:
    if m < 1:
        raise ValueError("modulus must be positive")
    cap = modulus_cap() if cap is None else cap
    if m > cap:
        raise ResourceError(f"modulus {m} exceeds exhaustive cap {cap} (set {CAP_ENV} to raise it)")


def representable_mod(m: int, workers: int = 1, cap: int | None = None) -> ModTable:
    """Every ``A**2 - B**2`` with ``A, B`` in UT_2(Z_m), as sorted triples.

    Squares are computed and deduplicated first; the pairwise difference pass
    then runs over distinct squares only. With ``workers > 1`` the outer
    square index is split across processes and the results are OR-ed, so the
    table does not depend on the partitioning.
    """
    _check_modulus(m, cap)
    return _representable_mod(m, max(1, workers))


@lru_cache(maxsize=None)
def _representable_mod(m: int, workers: int) -> ModTable:
    codes = _backend.square_codes(m)
    n = len(codes)
    if workers == 1 or n < 2 * workers:
        mask = _backend.difference_mask(codes, m, 0, n)
    else:
        bounds = [n * i // workers for i in range(workers + 1)]
        jobs = [(codes, m, lo, hi) for lo, hi in zip(bounds, bounds[1:])]
        acc = 0
        with ProcessPoolExecutor(workers) as ex:
            for part in ex.map(_mask_chunk, jobs):
                acc |= int.from_bytes(part, "little")
        mask = acc.to_bytes(m ** 3, "little")
    m2 = m * m
    triples = tuple((i // m2, i // m % m, i % m) for i, hit in enumerate(mask) if hit)
    return ModTable(m, triples)


def square_set(m: int, cap: int | None = None) -> tuple[Triple, ...]:
    """Distinct squares ``M**2`` in UT_2(Z_m)."""
    _check_modulus(m, cap)
    m2 = m * m
    return tuple((s // m2, s // m % m, s % m) for s in _backend.square_codes(m))


def is_representable_mod(T: Target, m: int, cap: int | None = None) -> bool:
    return T.reduce(m).as_tuple() in representable_mod(m, cap=cap)


def nonrep_diag4_mod16() -> tuple[Triple, ...]:
    return representable_mod(16).filtered(4).complement()


def emit_table(table: ModTable, fmt: str = "text", diag_multiple: int | None = None) -> bytes:
    table = table.filtered(diag_multiple)
    rows = sorted(table.representable)
    if fmt == "text":
        body = " ".join(f"({a},{b},{c})" for a, b, c in rows)
        return (body + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        return buf.getvalue().encode()
    if fmt == "json":
        return (json.dumps(ModTable(table.modulus, tuple(rows)).to_json()) + "\n").encode()
    raise ValueError(f"unknown format {fmt!r}")


def parse_table(data: bytes, fmt: str, modulus: int | None = None) -> ModTable:
    text = data.decode()
    if fmt == "json":
        return ModTable.from_json(json.loads(text))
    if modulus is None:
        raise ValueError("modulus required for text and csv input")
    if fmt == "csv":
        rows = [tuple(int(v) for v in row) for row in csv.reader(io.StringIO(text)) if row]
    elif fmt == "text":
        rows = [tuple(int(v) for v in tok.strip("()").split(",")) for tok in text.split()]
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return ModTable(modulus, tuple(sorted(rows)))
