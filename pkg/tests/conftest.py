import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ntcodes.constructions import binary_code_autgroup, even_subcode_ph12, punctured_hadamard_12  # noqa: E402


@pytest.fixture(scope="session")
def frozen():
    return json.loads(Path(__file__).with_name("frozen_values.json").read_text())


@pytest.fixture(scope="session")
def code_p():
    return punctured_hadamard_12()


@pytest.fixture(scope="session")
def code_e():
    return even_subcode_ph12()


@pytest.fixture(scope="session")
def aut_e(code_e):
    return binary_code_autgroup(code_e)


@pytest.fixture(scope="session")
def aut_p(code_p):
    return binary_code_autgroup(code_p)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
