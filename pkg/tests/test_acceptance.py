"""Runs every acceptance criterion at its stated scale, one test per criterion.

A one-line pass/fail summary per criterion is printed at the end of the
pytest session (and immediately, when run with ``-s``).
"""

import time

import pytest

from dualform.acceptance import CRITERIA, RUNNERS, Settings, render

TIME_LIMITS = {1: 60.0, 3: 120.0, 9: 600.0}


@pytest.mark.parametrize("number", CRITERIA)
def test_criterion(number, acceptance_log):
    start = time.perf_counter()
    result = RUNNERS[number](Settings())
    elapsed = time.perf_counter() - start
    line = f"{result.line()} [{elapsed:.1f}s]"
    acceptance_log.append(line)
    print(render(result, "text"), f"[{elapsed:.1f}s]")
    assert result.passed, render(result, "text")
    assert result.checked > 0
    if number in TIME_LIMITS:
        assert elapsed <= TIME_LIMITS[number], f"took {elapsed:.1f}s, limit {TIME_LIMITS[number]:.0f}s"
