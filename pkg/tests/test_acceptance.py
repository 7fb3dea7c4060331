"""The nine acceptance criteria, each within its time limit.

Every test records a one-line verdict; ``conftest.py`` prints them together
at the end of the run.
"""

import pytest

from lapinterp.acceptance import CRITERIA, run
from lapinterp.config import AcceptanceConfig

CONFIG = AcceptanceConfig()
VERDICTS: dict[int, str] = {}


@pytest.mark.acceptance
@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    outcome = run(number, CONFIG)
    VERDICTS[number] = outcome.line()
    print(outcome.line())
    assert not outcome.failures, "\n".join(outcome.failures[:5])
    assert outcome.in_time, f"took {outcome.seconds:.2f}s, limit {outcome.limit}s"
