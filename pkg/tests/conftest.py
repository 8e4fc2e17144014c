"""Brute-force oracles and hypothesis strategies shared by the test modules."""
import itertools

import pytest
from hypothesis import strategies as st

from oddcolour.graph import Graph

ACCEPTANCE = {}


def set_partitions(n):
    """Every partition of range(n) as a list of class lists (restricted growth strings)."""
    if n == 0:
        yield []
        return

    def grow(i, labels, top):
        if i == n:
            classes = [[] for _ in range(top + 1)]
            for v, lab in enumerate(labels):
                classes[lab].append(v)
            yield classes
            return
        for lab in range(top + 2):
            labels.append(lab)
            yield from grow(i + 1, labels, max(top, lab))
            labels.pop()

    labels = [0]
    yield from grow(1, labels, 0)


def induced_degrees(g, cls):
    s = set(cls)
    return [sum(1 for u in s if g.has_edge(u, v)) for v in cls]


def brute_chi_odd(g):
    """Smallest odd colouring by enumeration, or None; only for n <= 9."""
    best = None
    for classes in set_partitions(g.n):
        if best is not None and len(classes) >= best:
            continue
        if all(d % 2 for cls in classes for d in induced_degrees(g, cls)):
            best = len(classes)
    return best if g.n else 0


def brute_chromatic(g):
    for k in range(1, g.n + 1):
        for colours in itertools.product(range(k), repeat=g.n):
            if all(colours[u] != colours[v] for u, v in g.edges()):
                return k
    return 0


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'} - {detail}")


@pytest.fixture
def record():
    def _record(key, ok, detail):
        ACCEPTANCE[key] = (ok, detail)
        print(f"criterion {key}: {'PASS' if ok else 'FAIL'} - {detail}")
        return ok
    return _record
