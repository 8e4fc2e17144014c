"""A recursive odd-colouring engine for graph classes with small reductions.

If every connected induced subgraph met during the recursion has two pendant
vertices with a common neighbour, or an edge ``uv`` with
``deg(u) + deg(v) <= k``, the engine colours a connected even-order graph with
at most ``k - 1`` classes. Three instantiations fix ``k`` from the input:
bounded degree, girth at least 7, and planar graphs of girth at least 11.

Internally a colouring of a vertex set is a list of exactly ``k - 1`` bitsets,
some possibly empty, so the slot arithmetic of the inductive argument can be
applied verbatim.
"""
from __future__ import annotations

import sys
from collections import Counter
from dataclasses import dataclass, field
from math import isqrt

from .errors import (
    ClassError,
    InfeasibleError,
    InternalError,
    PreconditionError,
    ReductionNotFoundError,
)
from .exact import first_odd_component
from .graph import Colouring, Graph, bits, induces_odd, lowest, merge_by_index


@dataclass(frozen=True)
class PendantTwins:
    u: int
    v: int
    w: int


@dataclass(frozen=True)
class LightEdge:
    u: int
    v: int


ReductionWitness = PendantTwins | LightEdge


@dataclass
class EngineTrace:
    """Bookkeeping for instrumented runs.

    ``checks`` counts the disjointness conditions tested at merge time and
    ``violations`` lists the ones that failed (always empty for a correct engine).
    """

    checks: int = 0
    violations: list[str] = field(default_factory=list)
    branches: Counter = field(default_factory=Counter)

    def expect(self, ok: bool, what: str):
        self.checks += 1
        if not ok:
            self.violations.append(what)


# reductions ------------------------------------------------------------------

def _find(g: Graph, s: int, k: int) -> ReductionWitness | None:
    support: dict[int, int] = {}
    best = None
    for u in bits(s):
        row = g.adj[u] & s
        if row.bit_count() == 1:
            w = lowest(row)
            if w in support:
                cand = (support[w], u, w)
                if best is None or cand < best:
                    best = cand
            else:
                support[w] = u
    if best is not None:
        return PendantTwins(*best)
    for u in bits(s):
        du = (g.adj[u] & s).bit_count()
        for v in bits(g.adj[u] & s & ~((2 << u) - 1)):
            if du + (g.adj[v] & s).bit_count() <= k:
                return LightEdge(u, v)
    return None


def find_reduction(g: Graph, k: int) -> ReductionWitness | None:
    """Lowest pendant-twin pair, else the lexicographically first edge with degree sum <= k."""
    if k < 2:
        raise PreconditionError("budget k must be at least 2")
    return _find(g, g.vertex_mask, k)


# engine ----------------------------------------------------------------------

def _swap(cols: list[int], a: int, b: int):
    cols[a], cols[b] = cols[b], cols[a]


def _slot_of(cols: list[int], v: int) -> int:
    for i, c in enumerate(cols):
        if (c >> v) & 1:
            return i
    raise InternalError(f"vertex {v} is uncoloured")


class _Engine:
    def __init__(self, g: Graph, k: int, trace: EngineTrace | None):
        self.g = g
        self.k = k
        self.slots = k - 1
        self.trace = trace

    def nbhd(self, mask: int) -> int:
        out = 0
        for v in bits(mask):
            out |= self.g.adj[v]
        return out

    def expect(self, ok: bool, what: str):
        if self.trace is not None:
            self.trace.expect(ok, what)

    def branch(self, name: str):
        if self.trace is not None:
            self.trace.branches[name] += 1

    def colour(self, s: int) -> list[int]:
        g, K = self.g, self.slots
        if s.bit_count() == 2:
            self.branch("base")
            return [s] + [0] * (K - 1)
        red = _find(g, s, self.k)
        if red is None:
            raise ReductionNotFoundError(
                f"no pendant twins and no edge of degree sum <= {self.k} "
                f"in a {s.bit_count()}-vertex subgraph",
                vertices=tuple(bits(s)),
            )
        if isinstance(red, PendantTwins):
            return self._twins(s, red)
        return self._light(s, red.u, red.v)

    def _twins(self, s: int, red: PendantTwins) -> list[int]:
        self.branch("twins")
        pair = (1 << red.u) | (1 << red.v)
        cols = self.colour(s & ~pair)
        i = _slot_of(cols, red.w)
        self.expect(not (self.nbhd(pair) & cols[i] & ~(1 << red.w)),
                    f"twins {red.u},{red.v}: class of {red.w} meets their neighbourhood")
        cols[i] |= pair
        return cols

    def _light(self, s: int, u: int, v: int) -> list[int]:
        g, K = self.g, self.slots
        pair = (1 << u) | (1 << v)
        rest = s & ~pair
        near = self.nbhd(pair) & rest
        comps = g.component_masks(rest)

        if len(comps) == 1:
            # (a) some class avoids N({u, v}) entirely
            self.branch("a")
            cols = self.colour(rest)
            ell = next((i for i, c in enumerate(cols) if not c & near), None)
            self.expect(ell is not None, f"edge {u}{v}: every class meets N(u,v)")
            if ell is None:
                raise InternalError("no class avoids the neighbourhood of a light edge")
            cols[ell] |= pair
            return cols

        even = [c for c in comps if c.bit_count() % 2 == 0]
        if even:
            return self._even_component(s, u, v, even[0], near)

        touches_u = [bool(c & g.adj[u]) for c in comps]
        touches_v = [bool(c & g.adj[v]) for c in comps]
        if all(a != b for a, b in zip(touches_u, touches_v)):
            return self._one_sided(u, v, comps, touches_v)
        return self._two_sided(u, v, comps, touches_u, touches_v)

    def _even_component(self, s, u, v, comp, near) -> list[int]:
        # (b) colour an even component and the rest separately, then align
        self.branch("b")
        K = self.slots
        outer = self.colour(s & ~comp)
        inner = self.colour(comp)
        iv = _slot_of(outer, v)
        _swap(outer, iv, K - 2)
        iu = _slot_of(outer, u)
        if iu != K - 2:
            _swap(outer, iu, K - 1)
        else:
            _swap(outer, K - 2, K - 1)
        free = [i for i, c in enumerate(inner) if not c & near]
        if len(free) < 2:
            self.expect(False, f"edge {u}{v}: fewer than two classes of U avoid N(u,v)")
            raise InternalError("even component leaves fewer than two free classes")
        a, b = free[0], free[1]
        # move a to K-2 and b to K-1 without disturbing each other
        _swap(inner, a, K - 2)
        if b == K - 2:
            b = a
        _swap(inner, b, K - 1)
        for i in range(K):
            self.expect(not (self.nbhd(outer[i]) & inner[i]),
                        f"edge {u}{v}: N(V_{i}) meets U_{i}")
        return [outer[i] | inner[i] for i in range(K)]

    def _one_sided(self, u, v, comps, touches_v) -> list[int]:
        # (c) every component hangs off exactly one of u, v
        g, K = self.g, self.slots
        parts_i, parts_j = [], []
        for c, at_v in zip(comps, touches_v):
            w = v if at_v else u
            cols = self.colour(c | (1 << w))
            if at_v:
                _swap(cols, _slot_of(cols, v), K - 2)
                parts_i.append(cols)
            else:
                _swap(cols, _slot_of(cols, u), K - 1)
                parts_j.append(cols)
        shared = (1 << u) | (1 << v)
        if len(parts_i) % 2:
            self.branch("c-odd")
            pieces = parts_i + parts_j
        else:
            self.branch("c-even")
            flip = []
            for cols in parts_i:
                cols = list(cols)
                _swap(cols, K - 2, K - 1)
                flip.append(cols)
            pieces = flip + parts_j
        out = [0] * K
        for i in range(K):
            blocks = [p[i] & ~shared for p in pieces]
            for x in range(len(blocks)):
                for y in range(x + 1, len(blocks)):
                    self.expect(not (self.nbhd(blocks[x]) & blocks[y]),
                                f"edge {u}{v}: components share class {i} across an edge")
            for p in pieces:
                out[i] |= p[i]
        # with one side empty its endpoint is a pendant and joins its partner in the last slot
        for w in (u, v):
            if not any((c >> w) & 1 for c in out):
                out[K - 1] |= 1 << w
        for w in (u, v):
            i = _slot_of(out, w)
            self.expect((g.adj[w] & out[i]).bit_count() % 2 == 1,
                        f"edge {u}{v}: {w} has even degree in its class")
        return out

    def _two_sided(self, u, v, comps, touches_u, touches_v) -> list[int]:
        # (d) some component sees both u and v
        self.branch("d")
        g, K = self.g, self.slots
        side_i = [n for n, (a, b) in enumerate(zip(touches_u, touches_v)) if b and not a]
        side_j = [n for n, (a, b) in enumerate(zip(touches_u, touches_v)) if a and not b]
        both = [n for n, (a, b) in enumerate(zip(touches_u, touches_v)) if a and b]
        if len(side_i) % 2 == 0:
            side_i.append(both[0])
            side_j.extend(both[1:])
        else:
            side_j.extend(both)
        vi = sum(comps[n] for n in side_i)
        vj = sum(comps[n] for n in side_j)
        if vi.bit_count() % 2 == 0 or vj.bit_count() % 2 == 0:
            raise InternalError("split of the two-sided components has the wrong parity")
        ci = self.colour(vi | (1 << v))
        cj = self.colour(vj | (1 << u))
        _swap(ci, _slot_of(ci, v), 0)
        _swap(cj, _slot_of(cj, u), K - 1)
        i0 = next((i for i in range(K - 1) if not g.adj[v] & cj[i]), None)
        j0 = next((j for j in range(1, K) if not g.adj[u] & ci[j]), None)
        self.expect(i0 is not None, f"edge {u}{v}: no J-class free of N(v)")
        self.expect(j0 is not None, f"edge {u}{v}: no I-class free of N(u)")
        if i0 is None or j0 is None:
            raise InternalError("no admissible reordering in the two-sided case")
        _swap(cj, i0, 0)
        _swap(ci, j0, K - 1)
        for i in range(K):
            self.expect(not (self.nbhd(ci[i]) & cj[i]), f"edge {u}{v}: N(V^I_{i}) meets V^J_{i}")
        return [ci[i] | cj[i] for i in range(K)]


def _run(g: Graph, s: int, k: int, trace: EngineTrace | None) -> list[int]:
    need = 4 * s.bit_count() + 200
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)
    cols = _Engine(g, k, trace).colour(s)
    for c in cols:
        if not induces_odd(g, c):
            raise InternalError("engine produced a class that is not odd")
    return cols


def colour_with_budget(g: Graph, k: int, trace: EngineTrace | None = None) -> Colouring:
    """Colour a connected even-order graph with at most ``k - 1`` classes.

    Raises :class:`ReductionNotFoundError` when some subgraph met on the way has
    no reduction under ``k``.
    """
    if k < 2:
        raise PreconditionError("budget k must be at least 2")
    if g.n == 0:
        return Colouring(0, ())
    if not g.is_connected():
        raise PreconditionError("colour_with_budget needs a connected graph")
    if g.n % 2:
        raise InfeasibleError(f"graph has odd order {g.n}", component=frozenset(range(g.n)))
    return Colouring.from_masks(g.n, _run(g, g.vertex_mask, k, trace))


def colour_components(g: Graph, k: int, trace: EngineTrace | None = None) -> Colouring:
    """Run the engine on every component with the same budget and merge the classes by slot."""
    odd = first_odd_component(g)
    if odd is not None:
        raise InfeasibleError(
            f"component {sorted(bits(odd))} has odd order", component=frozenset(bits(odd)))
    return merge_by_index(g.n, [_run(g, c, k, trace) for c in g.component_masks()])


# instantiations -------------------------------------------------------------------

def bounded_degree_bound(g: Graph) -> int:
    return max(1, 2 * g.max_degree() - 1)


def bounded_degree_colouring(g: Graph, trace: EngineTrace | None = None) -> Colouring:
    """At most ``2 * max_degree - 1`` classes; works on every graph with even components."""
    return colour_components(g, max(2, 2 * g.max_degree()), trace)


def girth7_bound(n: int) -> int:
    """``floor(3 * sqrt(n) / 2) + 1`` in exact integer arithmetic."""
    return isqrt(9 * n) // 2 + 1


def girth7_colouring(g: Graph, trace: EngineTrace | None = None) -> Colouring:
    """At most ``floor(3 sqrt(n) / 2) + 1`` classes for graphs of girth at least 7."""
    gi = g.girth()
    if gi is not None and gi < 7:
        raise ClassError(f"girth {gi} is below 7")
    return colour_components(g, girth7_bound(g.n) + 1, trace)


def planar_girth11_check(g: Graph) -> None:
    """Girth at least 11 and, per component, the edge bound a planar graph of that girth obeys."""
    gi = g.girth()
    if gi is not None and gi < 11:
        raise ClassError(f"girth {gi} is below 11")
    for c in g.component_masks():
        n = c.bit_count()
        m = sum((g.adj[v] & c).bit_count() for v in bits(c)) // 2
        if m > n - 1 and 9 * m > 11 * (n - 2):
            raise ClassError(f"component with {n} vertices has {m} edges, too many for planar girth 11")


def planar_girth11_colouring(g: Graph, trace: EngineTrace | None = None) -> Colouring:
    """At most 3 classes for planar graphs of girth at least 11 (planarity itself is not tested)."""
    planar_girth11_check(g)
    return colour_components(g, 4, trace)
