import pytest

from koszulkit import families
from koszulkit.poset import Poset

ACCEPTANCE_LINES = []


def random_corpus(count=50, max_size=12, seed0=1000):
    """Seeded random graded posets with at least one interval of length 2."""
    out = []
    seed = seed0
    while len(out) < count:
        size = 3 + seed % (max_size - 2)
        density = (0.35, 0.5, 0.7)[seed % 3]
        p = families.random_graded(seed, size, density)
        seed += 1
        if p.max_length >= 2:
            out.append(p)
    return out


def builtin_corpus():
    return [
        families.tile(),
        families.hexagon(),
        families.vdiamond(2),
        families.vdiamond(3),
        families.vdiamond(4),
        families.vdiamond(5),
        families.hdiamond(1, 1),
        families.hdiamond(2, 2),
        families.hdiamond(3, 2),
        families.chain(1),
        families.chain(4),
        families.antichain(3),
        families.tiling([(0, 0), (1, 1), (2, 0)]),
        families.tiling([(0, 0), (2, 0), (1, 1), (1, -1)]),
    ]


def plain(p: Poset):
    """(elements, covers) lists for the oracle."""
    return list(p.elements), sorted(p.covers)


@pytest.fixture
def tile():
    return families.tile()


@pytest.fixture
def hexagon():
    return families.hexagon()


@pytest.fixture
def p22():
    return families.hdiamond(2, 2)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
