import functools
from itertools import combinations

import pytest

from weylgroupoid import catalog
from weylgroupoid.arrangement import enumerate_chambers
from weylgroupoid.cartan_scheme import build_scheme
from weylgroupoid.exact_geometry import rank

WEYL = [name for name, *_ in catalog.WEYL_ENTRIES]
CRYSTALLOGRAPHIC = WEYL + [e.name for e in catalog.groupoid_entries()]


@functools.lru_cache(maxsize=None)
def roots(name):
    return catalog.get(name).positive_roots


@functools.lru_cache(maxsize=None)
def graph(name):
    return enumerate_chambers(roots(name))


@functools.lru_cache(maxsize=None)
def scheme(name, chamber=0, ordering=None):
    return build_scheme(roots(name), chamber, ordering, graph(name))


def zaslavsky_count(vectors):
    """Chamber count of a central arrangement from the rank function alone:
    sum over all subsets S of (-1)^(|S| - rank S)."""
    total = 0
    for k in range(len(vectors) + 1):
        for sub in combinations(vectors, k):
            total += (-1) ** (k - rank(sub))
    return total


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep
