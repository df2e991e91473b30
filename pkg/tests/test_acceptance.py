"""The thirteen acceptance criteria, exact integers throughout.

Run directly (`python tests/test_acceptance.py`) for one line per criterion,
or through pytest, where the same lines are repeated in the terminal summary.
"""
import sys

import pytest

from serredepth.verify import CRITERIA, PASS, VerifyConfig, run_check

CONFIG = VerifyConfig()
LINES: list[str] = []


@pytest.mark.parametrize("name,fn", CRITERIA, ids=[name for name, _ in CRITERIA])
def test_criterion(name, fn):
    chk = run_check(name, fn, CONFIG)
    line = f"{chk.line()} ({chk.elapsed:.1f}s)"
    LINES.append(line)
    print(line)
    assert chk.status == PASS, chk.detail


if __name__ == "__main__":
    ok = True
    for name, fn in CRITERIA:
        chk = run_check(name, fn, CONFIG)
        print(f"{chk.line()} ({chk.elapsed:.1f}s)", flush=True)
        ok &= chk.status == PASS
    sys.exit(0 if ok else 2)
