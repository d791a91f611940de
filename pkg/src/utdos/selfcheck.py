"""Cross-validation of the closed-form classifier against the brute-force oracle."""
from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from . import classify, modtables, oracle, witness
from .intdos import is_dos
from .matrix import UTMat, verify_witness

BRANCHES = (
    "odd_same_residue",
    "odd_distinct_residue",
    "odd_and_four",
    "four_four_g4",
    "four_four_g2",
    "four_four_g1",
    "diagonal_mod4",
)
COVERAGE_BOUND = 16


def branch_of(p: int, q: int) -> str:
    if not (is_dos(p) and is_dos(q)):
        return "diagonal_mod4"
    if p % 2 and q % 2:
        return "odd_same_residue" if p % 4 == q % 4 else "odd_distinct_residue"
    if p % 2 or q % 2:
        return "odd_and_four"
    return f"four_four_g{classify.m_of(p, q)}"


@dataclass
class Report:
    bound: int
    cases: int = 0
    branches: Counter = field(default_factory=Counter)
    failures: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _check_row(p: int, bound: int, zero_bound: int) -> tuple[int, Counter, Optional[str]]:
    counts = Counter()
    cases = 0
    for q in range(-bound, bound + 1):
        br = branch_of(p, q)
        if br != "diagonal_mod4":
            mq = classify.m_of(p, q)
            g = oracle.brute_g(p, q, zero_bound)
            if g != mq:
                return cases, counts, f"g({p}, {q}): m_of={mq} brute_g={g}"
        for r in range(-bound, bound + 1):
            cases += 1
            T = UTMat(p, r, q)
            v = classify.decide(T)
            w = oracle.brute_decide(T, zero_bound)
            if v.representable != (w is not None):
                return cases, counts, (
                    f"{T}: decide={'rep' if v.representable else 'not rep'}, "
                    f"oracle={'rep' if w is not None else 'not rep'}"
                )
            if v.representable:
                counts[br] += 1
                built = witness.build(T)
                if not verify_witness(built.A, built.B, T):
                    return cases, counts, f"{T}: built witness fails verification"
                for m in (4, 16):
                    if not modtables.is_representable_mod(T, m):
                        return cases, counts, f"{T}: representable but not mod {m}"
            else:
                counts["not_representable"] += 1
                if br == "diagonal_mod4":
                    counts[br] += 1
    return cases, counts, None


def _row_job(args):
    return _check_row(*args)


def _check_tables(report: Report) -> None:
    t4 = modtables.representable_mod(4)
    s = {(a, b, c) for a in range(4) for b in range(4) for c in range(4) if a == 2 or c == 2}
    s |= {(1, 1, 1), (1, 3, 1), (3, 1, 3), (3, 3, 3)}
    if len(t4) != 32 or set(t4.complement()) != s:
        report.failures.append("mod-4 table does not match the expected non-representable set")
    t16 = modtables.representable_mod(16)
    need = {(1, 1): 4, (3, 3): 4, (1, 3): 2, (2, 2): 2, (3, 1): 2}
    for i in range(4):
        for j in range(4):
            step = need.get((i, j), 1)
            for b in range(16):
                if ((4 * i, b, 4 * j) in t16) != (b % step == 0):
                    report.failures.append(f"mod-16 rule fails at (i, j, b) = ({i}, {j}, {b})")
                    return


def run(bound: int, workers: int = 1, zero_bound: int = 8) -> Report:
    report = Report(bound)
    rows = [(p, bound, zero_bound) for p in range(-bound, bound + 1)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            results = list(ex.map(_row_job, rows))
    else:
        results = []
        for args in rows:
            results.append(_check_row(*args))
            if results[-1][2]:
                break
    for cases, counts, failure in results:
        report.cases += cases
        report.branches.update(counts)
        if failure:
            report.failures.append(failure)
    _check_tables(report)
    if bound >= COVERAGE_BOUND:
        missing = [b for b in BRANCHES if not report.branches[b]]
        if missing:
            report.warnings.append("branches never exercised: " + ", ".join(missing))
    return report
