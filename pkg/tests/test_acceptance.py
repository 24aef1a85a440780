"""Acceptance suite: one printed pass/fail line per criterion.

Every check is exact over Q(q); there is no numerical tolerance.  Run with
``pytest -s tests/test_acceptance.py`` to see the lines, or execute the file
directly.
"""

import pytest

from reacalc.verify import CHECKS

from conftest import ACCEPTANCE_LINES


@pytest.mark.parametrize("number", range(1, len(CHECKS) + 1))
def test_criterion(number):
    res = CHECKS[number - 1](n=2, degree=4)
    line = res.line().replace(f" [{res.seconds:.1f}s]", "")
    print("\n" + line)
    for label, ok, detail in res.items:
        print(f"    {'ok  ' if ok else 'FAIL'} {label}{(': ' + detail) if detail else ''}")
    ACCEPTANCE_LINES.append(line)
    assert res.passed, line


if __name__ == "__main__":
    from reacalc.verify import run_all

    results = run_all(2, 4)
    for r in results:
        print(r.line())
    raise SystemExit(0 if all(r.passed for r in results) else 1)
