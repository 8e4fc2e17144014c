"""Simple undirected graphs over dense vertex ids with bitset adjacency rows.

Vertex sets are Python ints used as bitsets (bit ``v`` set means vertex ``v``
is a member); the public API converts them to ``frozenset`` where a caller is
likely to inspect them.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def as_set(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbour bitset of ``v``. Construction validates symmetry
    and the absence of loops.
    """

    n: int
    adj: tuple[int, ...]
    m: int = field(init=False, compare=False)

    def __post_init__(self):
        adj = tuple(int(a) for a in self.adj)
        object.__setattr__(self, "adj", adj)
        if len(adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(adj)}")
        full = (1 << self.n) - 1
        total = 0
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if (row >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(row):
                if not (adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
            total += row.bit_count()
        object.__setattr__(self, "m", total // 2)

    # construction -------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    # queries ------------------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int, within: int | None = None) -> int:
        row = self.adj[v]
        if within is not None:
            row &= within
        return row.bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)

    def neighbours(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, row in enumerate(self.adj):
            for v in bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def neighbourhood(self, mask: int) -> int:
        """Open neighbourhood of a vertex set: neighbours of ``mask`` outside it."""
        out = 0
        for v in bits(mask):
            out |= self.adj[v]
        return out & ~mask

    # structure ----------------------------------------------------------

    def component_masks(self, within: int | None = None) -> list[int]:
        """Connected components of ``G[within]`` as bitsets, ordered by smallest vertex."""
        rest = self.vertex_mask if within is None else within
        comps = []
        while rest:
            frontier = rest & -rest
            comp = frontier
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                nxt &= rest & ~comp
                comp |= nxt
                frontier = nxt
            comps.append(comp)
            rest &= ~comp
        return comps

    def components(self) -> list[frozenset[int]]:
        return [as_set(c) for c in self.component_masks()]

    def is_connected(self, within: int | None = None) -> bool:
        return len(self.component_masks(within)) <= 1

    def induced(self, vertices: Sequence[int] | int) -> tuple[Graph, tuple[int, ...]]:
        """Induced subgraph relabelled to ``0..k-1``; also returns the old ids in order."""
        if isinstance(vertices, int):
            order = tuple(bits(vertices))
        else:
            order = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(order)}
        sub = []
        for v in order:
            row = 0
            for u in bits(self.adj[v]):
                j = index.get(u)
                if j is not None:
                    row |= 1 << j
            sub.append(row)
        return Graph(len(order), tuple(sub)), order

    def girth(self) -> int | None:
        """Length of a shortest cycle, or ``None`` for a forest (BFS from every vertex)."""
        nbrs = [self.neighbours(v) for v in range(self.n)]
        best = None
        for root in range(self.n):
            dist = [-1] * self.n
            parent = [-1] * self.n
            dist[root] = 0
            queue = deque([root])
            while queue:
                x = queue.popleft()
                if best is not None and 2 * dist[x] + 1 >= best:
                    break
                for y in nbrs[x]:
                    if dist[y] < 0:
                        dist[y] = dist[x] + 1
                        parent[y] = x
                        queue.append(y)
                    elif y != parent[x]:
                        length = dist[x] + dist[y] + 1
                        if best is None or length < best:
                            best = length
        return best

    def subdivide(self) -> Graph:
        """Subdivide every edge once; the i-th edge in lexicographic order gets vertex ``n + i``."""
        edges = self.edges()
        out = []
        for i, (u, v) in enumerate(edges):
            w = self.n + i
            out.append((u, w))
            out.append((v, w))
        return Graph.from_edges(self.n + len(edges), out)

    def disjoint_union(self, other: Graph) -> Graph:
        shift = self.n
        adj = self.adj + tuple(row << shift for row in other.adj)
        return Graph(self.n + other.n, adj)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Colouring:
    """Ordered colour classes over the vertices ``0..n-1`` of a host graph.

    Nothing is checked here; see :func:`oddcolour.verify.verify_colouring`.
    """

    n: int
    classes: tuple[frozenset[int], ...]

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int], keep_empty: bool = False) -> Colouring:
        return cls(n, tuple(as_set(m) for m in masks if m or keep_empty))

    @classmethod
    def from_lists(cls, n: int, classes: Iterable[Iterable[int]]) -> Colouring:
        return cls(n, tuple(frozenset(c) for c in classes))

    @property
    def masks(self) -> list[int]:
        return [mask_of(c) for c in self.classes]

    def __len__(self):
        return len(self.classes)

    def class_of(self, v: int) -> int:
        for i, c in enumerate(self.classes):
            if v in c:
                return i
        raise KeyError(v)

    def as_lists(self) -> list[list[int]]:
        return [sorted(c) for c in self.classes]


def merge_by_index(n: int, colourings: Iterable[Sequence[int]]) -> Colouring:
    """Union class ``i`` of every colouring into class ``i``; empty classes are dropped.

    Valid for colourings of distinct components, since no edge crosses them.
    """
    slots: list[int] = []
    for masks in colourings:
        for i, m in enumerate(masks):
            if i == len(slots):
                slots.append(0)
            slots[i] |= m
    return Colouring.from_masks(n, slots)


def components(g: Graph) -> list[frozenset[int]]:
    return g.components()


def girth(g: Graph) -> int | None:
    return g.girth()


def subdivide(g: Graph) -> Graph:
    return g.subdivide()


# edge-list text format -------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``; ``#`` starts a comment line."""
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(line.split())
    if not rows:
        raise ValueError("empty edge list")
    header = rows[0]
    if len(header) != 2:
        raise ValueError(f"bad header line: {' '.join(header)!r}")
    n, m = int(header[0]), int(header[1])
    body = rows[1:]
    if len(body) != m:
        raise ValueError(f"header announces {m} edges, found {len(body)}")
    edges = []
    for row in body:
        if len(row) != 2:
            raise ValueError(f"bad edge line: {' '.join(row)!r}")
        edges.append((int(row[0]), int(row[1])))
    g = Graph.from_edges(n, edges)
    if g.m != m:
        raise ValueError("duplicate edges in edge list")
    return g


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))


def induces_odd(g: Graph, mask: int) -> bool:
    """True iff every vertex of ``mask`` has odd degree in ``G[mask]`` (vacuous when empty)."""
    return all((g.adj[v] & mask).bit_count() & 1 for v in bits(mask))


def induces_even(g: Graph, mask: int) -> bool:
    return not any((g.adj[v] & mask).bit_count() & 1 for v in bits(mask))
