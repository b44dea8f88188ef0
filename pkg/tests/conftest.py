import random

import pytest
from scipy.stats import chi2

from dynnmc import DynamicNmc


def chi2_limit(bins: int, alpha: float = 1e-3) -> float:
    return float(chi2.ppf(1 - alpha, bins - 1))


def chi2_stat(counts, expected: float) -> float:
    return sum((c - expected) ** 2 / expected for c in counts)


def two_k4s() -> list[tuple[int, int]]:
    """Two K4 blocks joined by two disjoint edges."""
    a = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    b = [(i + 4, j + 4) for i, j in a]
    return a + b + [(0, 4), (1, 5)]


def cycle(n: int) -> list[tuple[int, int]]:
    return [(i, (i + 1) % n) for i in range(n)]


def complete(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def two_triangles_bridge() -> list[tuple[int, int]]:
    return [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture
def make_engine():
    def build(n, edges):
        return DynamicNmc(n, edges)
    return build


# -- acceptance reporting ------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def report(num: int, ok: bool, detail: str) -> None:
    line = f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line, flush=True)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
