import pytest
from hypothesis import settings
from hypothesis import strategies as st

from relorder.relation import ElementSet, Relation

settings.register_profile("default", deadline=None, max_examples=200)
settings.load_profile("default")


def rel(labels, pairs):
    return Relation.from_pairs(labels, [tuple(p) for p in pairs])


F_CYC3 = rel("abc", ["ab", "bc", "ca"])
F_PO = rel("abc", ["ab", "ac"])
F_SYM2 = rel("ab", ["ab", "ba"])
F_MIX = rel("abc", ["ab", "ba", "cb"])
F_EMPTY2 = rel("ab", [])

FIXTURES = {
    "F_CYC3": F_CYC3,
    "F_PO": F_PO,
    "F_SYM2": F_SYM2,
    "F_MIX": F_MIX,
    "F_EMPTY2": F_EMPTY2,
}


def ix(r, labels):
    """Label string -> frozenset of indices, e.g. ix(F_MIX, "ac")."""
    return frozenset(r.universe.index(c) for c in labels)


@st.composite
def relations(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    rows = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=n, max_size=n))
    return Relation(ElementSet(tuple(f"x{i}" for i in range(n))), tuple(rows))


@pytest.fixture(params=sorted(FIXTURES))
def any_fixture(request):
    return FIXTURES[request.param]


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
