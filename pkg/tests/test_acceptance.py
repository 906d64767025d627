"""One pass/fail line per acceptance criterion (run with ``pytest -s`` to see them)."""

import pytest

from monogen.acceptance import CRITERIA


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda c: c.__name__)
def test_criterion(criterion):
    result = criterion()
    print(result.line())
    assert result.passed, result.line()
