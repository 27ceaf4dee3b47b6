import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from fusionlim.fusion import FusionSystem
from fusionlim.library import subgroup_of
from fusionlim.permgroup import alternating_group, dihedral_group, symmetric_group


@pytest.fixture(scope="session")
def s4():
    return symmetric_group(4)


@pytest.fixture(scope="session")
def a6():
    return alternating_group(6)


@pytest.fixture(scope="session")
def d8():
    return dihedral_group(4)


@pytest.fixture(scope="session")
def v4a():
    return subgroup_of(6, "(1,2)(3,4)", "(1,3)(2,4)")


@pytest.fixture(scope="session")
def v4b():
    return subgroup_of(6, "(1,2)(3,4)", "(1,2)(5,6)")


@pytest.fixture(scope="session")
def a6_fusion(a6):
    return FusionSystem.from_group(a6, 2)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
