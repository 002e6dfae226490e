from __future__ import annotations

import hypothesis.strategies as st
import pytest
from hypothesis import assume, settings

from crndecomp import catalog
from crndecomp.model import Complex, build_network
from crndecomp.parser import parse_kinetic_system, parse_network

settings.register_profile("default", deadline=None, derandomize=True)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


def record(criterion: int, ok: bool, detail: str) -> None:
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  criterion {criterion}: {detail}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def cycles():
    return parse_network(catalog.CYCLES_M1_M5)


@pytest.fixture
def abc():
    return parse_network(catalog.BRANCHING_ABC)


@pytest.fixture
def abc_kinetic():
    return parse_kinetic_system(catalog.BRANCHING_ABC)


@pytest.fixture
def single_species_kinetic():
    return parse_kinetic_system(catalog.SINGLE_SPECIES_NDK)


def ids(net, js):
    return [net.reactions[j].id for j in js]


@st.composite
def networks(draw, max_species=6, max_reactions=8, max_coef=3):
    m = draw(st.integers(1, max_species))
    complex_st = st.dictionaries(st.integers(0, m - 1), st.integers(1, max_coef),
                                 max_size=min(m, 2)).map(Complex.from_mapping)
    pool = draw(st.lists(complex_st, min_size=2, max_size=6, unique=True))
    picks = draw(st.lists(st.tuples(st.integers(0, len(pool) - 1),
                                    st.integers(0, len(pool) - 1), st.booleans()),
                          min_size=1, max_size=max_reactions))
    edges: list[tuple[Complex, Complex]] = []
    for a, b, rev in picks:
        cand = [(pool[a], pool[b])] + ([(pool[b], pool[a])] if rev else [])
        for y, yp in cand:
            if y != yp and (y, yp) not in edges and len(edges) < max_reactions:
                edges.append((y, yp))
    assume(edges)
    return build_network([f"X{i + 1}" for i in range(m)],
                         [(f"R{j + 1}", y, yp) for j, (y, yp) in enumerate(edges)])
