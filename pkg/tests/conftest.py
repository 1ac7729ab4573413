import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from toughkit.harness import SUITES, EnumerationSource, run_suites


@pytest.fixture(scope="session")
def sweep7():
    """All suites over the full n <= 7 enumeration, classified once.

    Shared by the acceptance criteria; labeled below 7 vertices, one
    representative per isomorphism class at 7.
    """
    reports = run_suites(list(SUITES), EnumerationSource(range(1, 8)))
    return {rep.suite: rep for rep in reports}
