from __future__ import annotations

from pathlib import Path
from typing import Dict, List, Tuple

import pytest
from hypothesis import settings

from gpstab.graphs import Graph

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

FIXTURES = Path(__file__).parent / "fixtures"


def load_corpus() -> Dict[str, Graph]:
    return {p.stem: Graph.from_text(p.read_text()) for p in sorted(FIXTURES.glob("*.graph"))}


def valid_pairs(n_min: int, n_max: int) -> List[Tuple[int, int]]:
    return [(n, k) for n in range(n_min, n_max + 1) for k in range(1, n) if 2 * k < n]


@pytest.fixture(scope="session")
def corpus() -> Dict[str, Graph]:
    return load_corpus()


# one PASS/FAIL line per acceptance criterion, collected by test_acceptance
ACCEPTANCE_LINES: List[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
