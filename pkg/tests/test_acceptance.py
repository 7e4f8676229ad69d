"""Acceptance gate: one PASS/FAIL line per criterion.

Runs the same suite as ``ffrt selftest`` at full sample sizes and adds the
runtime bounds.  Run directly (``python tests/test_acceptance.py``) or under
pytest; the lines are printed either way.
"""

import sys

import pytest

from ffrt import selftest

RUNTIME_LIMITS = {1: 10.0, 4: 30.0}


@pytest.mark.parametrize("number", [n for n, _, _ in selftest.CRITERIA])
def test_criterion(number, capsys):
    result = selftest.run_criterion(number)
    limit = RUNTIME_LIMITS.get(number)
    in_time = limit is None or result.seconds < limit
    line = result.line() if in_time else result.line() + f" [over {limit:.0f}s limit]"
    with capsys.disabled():
        print("\n" + (line if in_time else line.replace("PASS", "FAIL", 1)))
    assert result.ok, result.detail
    assert in_time, f"criterion {number} took {result.seconds:.1f}s"


if __name__ == "__main__":
    results = selftest.run_all()
    for r in results:
        print(r.line())
    sys.exit(0 if all(r.ok for r in results) else 1)
