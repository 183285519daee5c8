import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from opcalc.algebra import dual_numbers, group_algebra_z2, matrix_algebra_2  # noqa: E402
from opcalc.coefficients import PrimeField  # noqa: E402
from opcalc.hochschild import HochschildInstance  # noqa: E402

# acceptance outcomes, printed at the end of the session
CRITERIA: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        status, detail = CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {detail}")


@pytest.fixture(scope="session")
def D():
    return HochschildInstance(dual_numbers(), max_arity=7, max_degree=7)


@pytest.fixture(scope="session")
def G():
    return HochschildInstance(group_algebra_z2(), max_arity=7, max_degree=7)


@pytest.fixture(scope="session")
def D7():
    return HochschildInstance(dual_numbers(PrimeField(7)), max_arity=7, max_degree=7)


@pytest.fixture(scope="session")
def G7():
    return HochschildInstance(group_algebra_z2(PrimeField(7)), max_arity=7, max_degree=7)


@pytest.fixture(scope="session")
def M2():
    return HochschildInstance(matrix_algebra_2(), max_arity=5, max_degree=5)
