"""Generators for the graph families used throughout the package and its tests.

All randomness comes from ``numpy.random.default_rng(seed)``.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .errors import PreconditionError
from .graph import Graph, bits


def _check_n(n, least=1):
    if not isinstance(n, (int, np.integer)) or n < least:
        raise ValueError(f"n must be an integer >= {least}, got {n!r}")
    return int(n)


def cycle(n: int) -> Graph:
    n = _check_n(n, 3)
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    n = _check_n(n)
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    n = _check_n(n)
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    leaves = _check_n(leaves)
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def subdivided_complete(n: int) -> Graph:
    return complete(n).subdivide()


def family_b(base: Graph) -> Graph:
    """Add a private common neighbour ``w_uv`` for every pair ``u < v`` of ``base``.

    The new vertex for the i-th pair in lexicographic order is ``base.n + i``.
    """
    n = base.n
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    total = n + len(pairs)
    if total % 2:
        raise PreconditionError(f"family_b of a {n}-vertex base has odd order {total}")
    edges = list(base.edges())
    for i, (u, v) in enumerate(pairs):
        edges.append((u, n + i))
        edges.append((v, n + i))
    return Graph.from_edges(total, edges)


def k4_two_pendants():
    """K4 on 0..3 with pendant 4 on vertex 0 and pendant 5 on vertex 3.

    Returns the graph and a containment-free interval representation.
    """
    from .interval import IntervalRepresentation

    g = Graph.from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 0), (5, 3)])
    spans = [(1, 4), (2, 5), (3, 6), (4, 7), (0, 1), (7, 8)]
    rep = IntervalRepresentation.from_pairs(spans)
    return g, rep


def random_gnp(n: int, p: float, seed: int | None = None) -> Graph:
    """G(n, p) with odd components joined pairwise until every component is even.

    Repair joins the two lowest-indexed odd components by an edge between their
    lowest-indexed vertices, repeatedly.
    """
    n = _check_n(n)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p!r}")
    if n % 2:
        raise PreconditionError("random_gnp needs even n to repair every component to even order")
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.random((n, n)) < p, k=1)
    us, vs = np.nonzero(upper)
    g = Graph.from_edges(n, zip(us.tolist(), vs.tolist()))
    return repair_odd_components(g)


def repair_odd_components(g: Graph) -> Graph:
    adj = list(g.adj)
    while True:
        current = Graph(g.n, tuple(adj))
        odd = [c for c in current.component_masks() if c.bit_count() % 2]
        if len(odd) < 2:
            break
        a = (odd[0] & -odd[0]).bit_length() - 1
        b = (odd[1] & -odd[1]).bit_length() - 1
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return Graph(g.n, tuple(adj))


def random_interval(n: int, max_coord: int | None = None, seed: int | None = None):
    """Random interval graph with every component of even order.

    Endpoints are distinct integers. Odd components are merged left to right:
    the interval reaching furthest right in one odd component is stretched to
    just past the left end of the next odd component. Returns ``(graph, rep)``.
    """
    from .interval import IntervalRepresentation

    n = _check_n(n, 2)
    if n % 2:
        raise PreconditionError("random_interval needs even n")
    if max_coord is None:
        max_coord = 4 * n
    max_coord = _check_n(max_coord)
    rng = np.random.default_rng(seed)
    max_len = max(1, (3 * max_coord) // n)
    starts = rng.integers(0, max_coord, size=n)
    lengths = rng.integers(0, max_len + 1, size=n)
    scale = 4 * n
    lo = [int(scale * s + 2 * v) for v, s in enumerate(starts)]
    hi = [int(scale * (s + d) + 2 * v + 1) for v, (s, d) in enumerate(zip(starts, lengths))]

    while True:
        g = _interval_graph(lo, hi)
        comps = sorted(g.component_masks(), key=lambda c: min(lo[v] for v in bits(c)))
        odd = [c for c in comps if c.bit_count() % 2]
        if not odd:
            break
        first, second = odd[0], odd[1]
        reach = max(bits(first), key=lambda v: (hi[v], -v))
        target = min(lo[v] for v in bits(second))
        hi[reach] = max(hi[reach], target + 1)

    rep = IntervalRepresentation(tuple(Fraction(x) for x in lo), tuple(Fraction(x) for x in hi))
    return g, rep


def random_proper_interval(n: int, length: int = 3, seed: int | None = None):
    """Random proper interval graph: ``n`` equal-length intervals on distinct integer starts.

    Each odd component gets a twin of its rightmost interval, shifted by a quarter
    unit, so the result has ``n`` plus the number of odd components vertices.
    Returns ``(graph, rep)``; the representation is containment-free.
    """
    from .interval import IntervalRepresentation

    n = _check_n(n, 1)
    rng = np.random.default_rng(seed)
    starts = sorted(int(x) for x in rng.choice(2 * n, size=n, replace=False))
    lo = [4 * s for s in starts]
    hi = [4 * (s + length) + 2 for s in starts]
    g = _interval_graph(lo, hi)
    for comp in g.component_masks():
        if comp.bit_count() % 2:
            v = max(bits(comp), key=lambda u: lo[u])
            lo.append(lo[v] + 1)
            hi.append(hi[v] + 1)
    g = _interval_graph(lo, hi)
    rep = IntervalRepresentation(tuple(Fraction(x, 4) for x in lo), tuple(Fraction(x, 4) for x in hi))
    return g, rep


def _interval_graph(lo, hi) -> Graph:
    n = len(lo)
    order = sorted(range(n), key=lambda v: lo[v])
    edges = []
    for a, u in enumerate(order):
        for v in order[a + 1:]:
            if lo[v] > hi[u]:
                break
            edges.append((u, v))
    return Graph.from_edges(n, edges)


FAMILIES = {
    "cycle": cycle,
    "path": path,
    "complete": complete,
    "star": star,
    "petersen": petersen,
    "subdivided_complete": subdivided_complete,
    "family_b": family_b,
    "k4_two_pendants": k4_two_pendants,
    "random_gnp": random_gnp,
    "random_interval": random_interval,
    "random_proper_interval": random_proper_interval,
    "random_modular": lambda *a, seed=None: random_modular(*a, seed=seed),
}

_SEEDED = {"random_gnp", "random_interval", "random_proper_interval", "random_modular"}


def generate(family: str, *params, seed: int | None = None):
    """Dispatch by family name (hyphens or underscores).

    ``k4_two_pendants`` and the interval generators return ``(graph, representation)``,
    ``random_modular`` returns ``(graph, parts)`` and every other family returns a graph.
    """
    key = family.replace("-", "_").lower()
    try:
        fn = FAMILIES[key]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    if key in _SEEDED:
        return fn(*params, seed=seed)
    return fn(*params)


def random_modular(k: int, max_size: int = 4, p: float = 0.4, seed: int | None = None):
    """Random connected graph built from a connected quotient on ``k`` modules.

    Each module is a random graph on 1..max_size vertices; quotient edges become
    complete bipartite joins. One module is grown by a vertex if needed so the
    order is even. Returns ``(graph, parts)`` with parts as sorted vertex lists.
    """
    k = _check_n(k, 2)
    rng = np.random.default_rng(seed)
    quotient = set()
    for i in range(1, k):
        quotient.add((int(rng.integers(0, i)), i))
    for i in range(k):
        for j in range(i + 1, k):
            if rng.random() < p:
                quotient.add((i, j))
    sizes = [int(rng.integers(1, max_size + 1)) for _ in range(k)]
    if sum(sizes) % 2:
        sizes[int(rng.integers(0, k))] += 1
    starts = np.cumsum([0] + sizes).tolist()
    parts = [list(range(starts[i], starts[i + 1])) for i in range(k)]
    edges = []
    for part in parts:
        for a in range(len(part)):
            for b in range(a + 1, len(part)):
                if rng.random() < p:
                    edges.append((part[a], part[b]))
    for i, j in sorted(quotient):
        edges.extend((u, v) for u in parts[i] for v in parts[j])
    return Graph.from_edges(starts[-1], edges), parts
