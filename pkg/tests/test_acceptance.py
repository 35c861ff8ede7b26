"""One line per acceptance criterion, at the documented tolerances.

Run with ``pytest -s tests/test_acceptance.py`` to see the notes behind each line.
"""

import pytest

from conftest import ACCEPTANCE_LINES
from qshear.suites import CRITERIA, criterion


@pytest.mark.parametrize("key", [str(k) for k in range(1, 13)])
def test_criterion(key):
    assert key in CRITERIA
    item = criterion(key, seed=42, points=10)
    ACCEPTANCE_LINES[key] = item.line()
    print()
    print(item.line())
    for note in item.notes:
        print("    " + note)
    assert item.ok, "\n".join(item.notes)
