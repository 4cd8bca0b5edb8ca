import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from geoknot import fixtures as fx  # noqa: E402


@pytest.fixture
def trefoil():
    return fx.TREFOIL_HEXAGON.copy()


@pytest.fixture
def unknot():
    return fx.UNKNOT_HEXAGON.copy()


@pytest.fixture
def pentagon():
    return fx.PENTAGON_Q.copy()


@pytest.fixture(scope="session")
def figure_eights():
    return fx.figure_eight_heptagons()


def regular(n, radius=1.0):
    t = 2 * np.pi * np.arange(n) / n
    return np.stack([radius * np.cos(t), radius * np.sin(t), np.zeros(n)], axis=1)


def pytest_terminal_summary(terminalreporter):
    """One pass/fail line per acceptance criterion."""
    lines = []
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid or report.when != "call" and outcome != "error":
                continue
            name = nodeid.split("::")[-1]
            number = int(name.split("_")[2])
            lines.append((number, name, "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for number, name, verdict in sorted(set(lines)):
            terminalreporter.write_line(f"criterion {number:2d}: {verdict}  ({name})")
