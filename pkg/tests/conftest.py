import pytest
from hypothesis import assume, strategies as st

from hbgcat.d3core import D3Spec

ACCEPTANCE_LINES = []


def divisors(m):
    return [d for d in range(1, m + 1) if m % d == 0]


@st.composite
def valid_specs(draw, min_order=8, max_order=80):
    """Random D3 specs whose chords form a perfect matching.

    Chords are built from a random bijection between odd residue classes and
    even target classes mod 2b, so validity holds by construction.
    """
    order = draw(st.integers(min_order // 2, max_order // 2).map(lambda k: 2 * k))
    m = order // 2
    b = draw(st.sampled_from(divisors(m)))
    perm = draw(st.permutations(range(b)))
    period = 2 * b
    chords = []
    for k in range(b):
        base = (2 * perm[k] - 2 * k - 1) % period
        options = [c for c in range(base, order - 2, period) if c >= 3]
        assume(options)
        chords.append(draw(st.sampled_from(options)))
    return D3Spec(order, b, tuple(chords))


@pytest.fixture(scope="session")
def acceptance_lines():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
