"""Acceptance gate: each criterion runs its suite at default bounds within its time limit.

Run alone with ``pytest tests/test_acceptance.py`` (one summary line per
criterion at the end) or as a script: ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import sys
import time

import pytest

from decat.suites import run_suite

# (criterion number, suite, time limit in seconds, what it covers)
CRITERIA = [
    (1, "sym", 60, "symmetric-function kernel: LR vs oracle, Newton, straightening"),
    (2, "zzz", 60, "rectangle relations: commutativity, trivial thickness, binomial"),
    (3, "ja", 120, "rectangle change of basis unitriangular, round trip"),
    (4, "qqq", 300, "two-path composition vs current-algebra transport"),
    (5, "r7", 60, "EF commutator table and alternating h-e identity"),
    (6, "ap2", 60, "power-sum bubble commutator with E"),
    (7, "current", 300, "Garland integrality and associativity"),
    (8, "k0", 60, "q=1 BLM products vs degree-zero trace products"),
    (9, "dims", 30, "plus-part graded dimensions, negative degrees empty"),
    (10, "cor34", 60, "minimal degrees at least delta^2, unique degree-0 identity"),
    (11, "vpres", 120, "normal-form counts vs basis, confluent termination"),
    (12, "hh", 120, "HH of strongly upper-triangular posets, decomposition, dd = 0"),
]

RESULTS: list[str] = []


def _evaluate(number: int, suite: str, limit: int) -> tuple[bool, str]:
    start = time.perf_counter()
    report = run_suite(suite)
    elapsed = time.perf_counter() - start
    in_time = elapsed < limit
    ok = report.passed and in_time
    why = "" if ok else (" [checks failed]" if not report.passed else " [over time limit]")
    line = f"criterion {number:>2} ({suite}): {'PASS' if ok else 'FAIL'} {elapsed:7.2f}s / {limit}s{why}"
    if not report.passed:
        line += "\n" + report.text()
    return ok, line


@pytest.mark.acceptance
@pytest.mark.parametrize("number,suite,limit,what", CRITERIA, ids=[f"{n:02d}-{s}" for n, s, _, _ in CRITERIA])
def test_criterion(number, suite, limit, what):
    ok, line = _evaluate(number, suite, limit)
    RESULTS.append(line)
    print(line)
    assert ok, line


if __name__ == "__main__":
    failures = 0
    for number, suite, limit, _ in CRITERIA:
        ok, line = _evaluate(number, suite, limit)
        failures += not ok
        print(line, flush=True)
    sys.exit(1 if failures else 0)
