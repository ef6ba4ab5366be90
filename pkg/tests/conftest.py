import random

import pytest
from hypothesis import strategies as st

from isogenous import AbelianGroup, validate_system
from isogenous.search import abelian_groups

SMALL_GROUPS = [G for n in range(2, 17) for G in abelian_groups(n)]

# filled by tests/test_acceptance.py, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


def random_system(rng: random.Random, group: AbelianGroup, extra_max: int = 5):
    """A random valid spherical system: random entries, the generators, then a closing entry."""
    while True:
        nontrivial = group.elements[1:]
        entries = [rng.choice(nontrivial) for _ in range(rng.randint(1, extra_max))]
        entries += list(group.generators)
        total = group.identity
        for g in entries:
            total = total + g
        if not total.is_identity:
            entries.append(-total)
        if len(entries) < 3:
            continue
        rng.shuffle(entries)
        return validate_system(group, entries)


@st.composite
def systems(draw, groups=SMALL_GROUPS, extra_max=5):
    group = draw(st.sampled_from(groups))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_system(random.Random(seed), group, extra_max)


@pytest.fixture
def z23():
    G = AbelianGroup((2, 2, 2))
    e1, e2, e3 = G.generators
    return G, e1, e2, e3, e1 + e2 + e3


@pytest.fixture
def z24():
    G = AbelianGroup((2, 2, 2, 2))
    return (G, *G.generators, sum(G.generators[1:], G.generators[0]))
