import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from pergolay import dataset  # noqa: E402
from pergolay.pairs import sds_to_pair  # noqa: E402

GOLAY_PAIRS = {
    1: ((1,), (1,)),
    2: ((-1, 1), (1, 1)),
    4: ((1, 1, 1, -1), (1, 1, -1, 1)),
}


@pytest.fixture(scope="session")
def sds34():
    return dataset.get("34")


@pytest.fixture(scope="session")
def pair34(sds34):
    return sds_to_pair(sds34)


@pytest.fixture(scope="session")
def sols72():
    return [dataset.get(k) for k in dataset.SOLUTIONS_72]


@pytest.fixture
def rng():
    return np.random.default_rng(20261015)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def acceptance_report():
    def emit(line: str) -> None:
        ACCEPTANCE_LINES.append(line)
        print(line)

    return emit


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
