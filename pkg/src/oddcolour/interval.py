"""Interval graphs: representations, the leftmost dominating path, and odd colourings."""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import InfeasibleError, InternalError, NotProperError, PreconditionError, RepresentationError
from .exact import first_odd_component
from .gallai import odd_even_split
from .graph import Colouring, Graph, bits, induces_odd, merge_by_index

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntervalRepresentation:
    """Closed intervals ``[lo[v], hi[v]]`` with exact rational endpoints."""

    lo: tuple[Fraction, ...]
    hi: tuple[Fraction, ...]

    def __post_init__(self):
        lo = tuple(Fraction(x) for x in self.lo)
        hi = tuple(Fraction(x) for x in self.hi)
        if len(lo) != len(hi):
            raise RepresentationError("endpoint lists differ in length")
        for v, (a, b) in enumerate(zip(lo, hi)):
            if a > b:
                raise RepresentationError(f"interval of vertex {v} has left end {a} > right end {b}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def from_pairs(cls, pairs: Sequence[tuple]) -> IntervalRepresentation:
        return cls(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))

    @property
    def n(self) -> int:
        return len(self.lo)

    def intersects(self, u: int, v: int) -> bool:
        return self.lo[u] <= self.hi[v] and self.lo[v] <= self.hi[u]

    def graph(self) -> Graph:
        """The intersection graph of the intervals."""
        order = sorted(range(self.n), key=lambda v: (self.lo[v], v))
        edges = []
        for a, u in enumerate(order):
            for v in order[a + 1:]:
                if self.lo[v] > self.hi[u]:
                    break
                edges.append((u, v))
        return Graph.from_edges(self.n, edges)

    def check(self, g: Graph) -> None:
        """Raise :class:`RepresentationError` unless the intervals represent ``g`` exactly."""
        if self.n != g.n:
            raise RepresentationError(f"{self.n} intervals for a graph on {g.n} vertices")
        h = self.graph()
        for v in range(g.n):
            diff = h.adj[v] ^ g.adj[v]
            if diff:
                u = (diff & -diff).bit_length() - 1
                kind = "intersect but are not adjacent" if h.has_edge(u, v) else "are adjacent but disjoint"
                raise RepresentationError(f"intervals of {min(u, v)} and {max(u, v)} {kind}")

    def nested_pair(self) -> tuple[int, int] | None:
        """Some ``(outer, inner)`` with the inner interval strictly inside the outer one."""
        order = sorted(range(self.n), key=lambda v: (self.lo[v], -self.hi[v], v))
        for i, u in enumerate(order):
            for v in order[i + 1:]:
                if self.lo[v] > self.hi[u]:
                    break
                if self.hi[v] <= self.hi[u] and (self.lo[v], self.hi[v]) != (self.lo[u], self.hi[u]):
                    return u, v
        return None

    def is_proper(self) -> bool:
        return self.nested_pair() is None

    def require_proper(self) -> None:
        pair = self.nested_pair()
        if pair is not None:
            u, v = pair
            raise NotProperError(f"interval of {u} contains the interval of {v}", pair=pair)


def parse_intervals(text: str, n: int | None = None) -> IntervalRepresentation:
    """Parse lines ``v lo_num lo_den hi_num hi_den``; ``#`` starts a comment line."""
    spans = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 5:
            raise RepresentationError(f"bad interval line: {line!r}")
        v, a, b, c, d = (int(x) for x in fields)
        if b == 0 or d == 0:
            raise RepresentationError(f"zero denominator on line {line!r}")
        if v in spans:
            raise RepresentationError(f"vertex {v} listed twice")
        spans[v] = (Fraction(a, b), Fraction(c, d))
    count = len(spans) if n is None else n
    if sorted(spans) != list(range(count)):
        raise RepresentationError(f"intervals must be given for exactly the vertices 0..{count - 1}")
    return IntervalRepresentation.from_pairs([spans[v] for v in range(count)])


def format_intervals(rep: IntervalRepresentation) -> str:
    lines = []
    for v in range(rep.n):
        a, b = rep.lo[v], rep.hi[v]
        lines.append(f"{v} {a.numerator} {a.denominator} {b.numerator} {b.denominator}")
    return "\n".join(lines) + "\n"


def read_intervals(path, n: int | None = None) -> IntervalRepresentation:
    with open(path, encoding="utf-8") as fh:
        return parse_intervals(fh.read(), n)


def write_intervals(rep: IntervalRepresentation, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_intervals(rep))


# the dominating path -----------------------------------------------------------

@dataclass(frozen=True)
class StarPath:
    """Induced path starting at a leftmost interval whose successors reach furthest right.

    ``fallback`` names the invariant the greedy construction broke when the
    path had to come from the exhaustive search instead, else ``None``.
    """

    vertices: tuple[int, ...]
    fallback: str | None = None

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]


def path_problems(g: Graph, rep: IntervalRepresentation, path: Sequence[int],
                  within: int | None = None) -> list[str]:
    """Names of the path invariants that ``path`` violates inside ``G[within]``."""
    within = g.vertex_mask if within is None else within
    out = []
    on = 0
    for p in path:
        on |= 1 << p
    if not path or on & ~within or on.bit_count() != len(path):
        return ["not a path"]
    for a in range(len(path)):
        for b in range(a + 1, len(path)):
            if g.has_edge(path[a], path[b]) != (b == a + 1):
                out.append("induced")
                break
        else:
            continue
        break
    if rep.lo[path[0]] != min(rep.lo[v] for v in bits(within)):
        out.append("leftmost start")
    for a in range(len(path) - 1):
        reach = max(rep.hi[v] for v in bits(g.adj[path[a]] & within))
        if rep.hi[path[a + 1]] < reach:
            out.append("furthest reach")
            break
    covered = on
    for p in path:
        covered |= g.adj[p]
    if within & ~covered:
        out.append("coverage")
    return out


def _greedy_path(g, rep, within) -> list[int]:
    first = min(bits(within), key=lambda v: (rep.lo[v], rep.hi[v], v))
    path = [first]
    on = 1 << first
    while True:
        cand = g.adj[path[-1]] & within & ~on
        if len(path) > 1:
            cand &= ~g.adj[path[-2]]
        if not cand:
            return path
        nxt = max(bits(cand), key=lambda v: (rep.hi[v], -v))
        path.append(nxt)
        on |= 1 << nxt


def _search_path(g, rep, within, budget=200_000) -> list[int] | None:
    left = min(rep.lo[v] for v in bits(within))
    level = [[v] for v in bits(within) if rep.lo[v] == left]
    seen = 0
    while level:
        for path in level:
            if not path_problems(g, rep, path, within):
                return path
        nxt = []
        for path in level:
            last = path[-1]
            reach = max(rep.hi[v] for v in bits(g.adj[last] & within))
            inner = 0
            for p in path[:-1]:
                inner |= g.adj[p] | (1 << p)
            for v in bits(g.adj[last] & within & ~inner & ~(1 << last)):
                if rep.hi[v] >= reach:
                    nxt.append(path + [v])
            seen += len(nxt)
            if seen > budget:
                return None
        level = nxt
    return None


def _star_path(g: Graph, rep: IntervalRepresentation, within: int) -> StarPath:
    path = _greedy_path(g, rep, within)
    problems = path_problems(g, rep, path, within)
    if not problems:
        return StarPath(tuple(path))
    log.info("greedy path %s breaks %s; searching", path, ", ".join(problems))
    found = _search_path(g, rep, within)
    if found is None:
        raise RepresentationError(
            f"no induced path with the required properties exists in component "
            f"{sorted(bits(within))}; the intervals do not behave like an interval model")
    return StarPath(tuple(found), fallback=problems[0])


def build_star_path(g: Graph, rep: IntervalRepresentation) -> StarPath:
    """Greedy leftmost-then-furthest-right path, validated, with an exhaustive fallback."""
    rep.check(g)
    if g.n == 0 or not g.is_connected():
        raise PreconditionError("build_star_path needs a connected non-empty graph")
    return _star_path(g, rep, g.vertex_mask)


# instrumentation -----------------------------------------------------------------

@dataclass
class IntervalTrace:
    """Invariant checks made while colouring; ``violations`` stays empty on correct runs.

    ``steps`` records the class indices chosen for each path position and
    ``events`` counts fallbacks, repairs and which case of the step rule fired.
    """

    checks: int = 0
    violations: list[str] = field(default_factory=list)
    steps: list[tuple] = field(default_factory=list)
    events: Counter = field(default_factory=Counter)

    def expect(self, ok: bool, what: str):
        self.checks += 1
        if not ok:
            self.violations.append(what)


class _Layout:
    """Per-component data shared by both colourings: the path and first path neighbours."""

    def __init__(self, g, rep, within, trace):
        self.g, self.rep, self.within = g, rep, within
        sp = _star_path(g, rep, within)
        if trace is not None and sp.fallback:
            trace.events["path fallback"] += 1
        self.path = list(sp.vertices)
        self.k = len(self.path)
        self.on = 0
        for p in self.path:
            self.on |= 1 << p
        self.first = {}
        for v in bits(within & ~self.on):
            self.first[v] = next(i for i, p in enumerate(self.path) if g.has_edge(v, p))
        if trace is not None:
            self._window(trace)

    def _window(self, trace):
        rep = self.rep
        for v, i in self.first.items():
            far = [j for j, p in enumerate(self.path)
                   if j not in (i, i + 1, i + 2) and rep.intersects(v, p)]
            trace.expect(not far, f"vertex {v} meets path intervals {far} outside its window")

    def nbhd(self, mask):
        out = 0
        for v in bits(mask):
            out |= self.g.adj[v]
        return out & ~mask

    def upto(self, i):
        """Off-path vertices whose first path neighbour has index at most ``i``."""
        out = 0
        for v, j in self.first.items():
            if j <= i:
                out |= 1 << v
        return out


def _per_component(g, rep, trace, colour_one) -> Colouring:
    rep.check(g)
    odd = first_odd_component(g)
    if odd is not None:
        raise InfeasibleError(
            f"component {sorted(bits(odd))} has odd order", component=frozenset(bits(odd)))
    out = [colour_one(g, rep, c, trace) for c in g.component_masks()]
    for masks in out:
        for m in masks:
            if not induces_odd(g, m):
                raise InternalError(f"class {sorted(bits(m))} is not odd")
    return merge_by_index(g.n, out)


# proper interval graphs -------------------------------------------------------------

def _proper_component(g, rep, within, trace) -> list[int]:
    lay = _Layout(g, rep, within, trace)
    path, first, k = lay.path, lay.first, lay.k
    count = Counter(first.values())
    ys = []
    before = 0
    for i in range(k):
        y = 0
        for v, j in first.items():
            if j == i:
                y |= 1 << v
        if before % 2 == 0:
            y |= 1 << path[i]
        through = before + 1 + count[i]
        if through % 2 and i + 1 < k:
            y |= 1 << path[i + 1]
        ys.append(y)
        before = through
    if trace is not None:
        total = 0
        for i, y in enumerate(ys):
            trace.expect(not total & y, f"Y_{i} overlaps an earlier set")
            total |= y
            trace.expect(y.bit_count() % 2 == 0, f"Y_{i} has odd size")
            trace.expect(all((g.adj[v] | (1 << v)) & y == y for v in bits(y)), f"Y_{i} is not a clique")
            far = 0
            for y2 in ys[i + 3:]:
                far |= y2
            trace.expect(not lay.nbhd(y) & far, f"N(Y_{i}) meets a set three or more steps later")
        trace.expect(total == within, "the sets Y_i do not partition the component")
    cols = [0, 0, 0]
    for i, y in enumerate(ys):
        cols[i % 3] |= y
    return cols


def proper_interval_colouring(g: Graph, rep: IntervalRepresentation,
                              trace: IntervalTrace | None = None) -> Colouring:
    """At most 3 classes for a proper interval graph whose components have even order."""
    rep.require_proper()
    return _per_component(g, rep, trace, _proper_component)


# general interval graphs ------------------------------------------------------------

_SLOTS = 6


def _partition_y(lay, trace) -> list[int]:
    """Split the off-path vertices into Y_1..Y_k, deferring one vertex when the prefix is odd."""
    g, path, first, k = lay.g, lay.path, lay.first, lay.k
    ys = []
    pending = 0
    for i in range(k):
        y = pending
        for v, j in first.items():
            if j == i:
                y |= 1 << v
        through = i + 1 + lay.upto(i).bit_count()
        pending = 0
        if through % 2 and i + 1 < k and y & g.adj[path[i + 1]]:
            cand = list(bits(y & g.adj[path[i + 1]]))
            w = max(cand, key=lambda v: (first[v], -v))
            pending = 1 << w
            y &= ~pending
        ys.append(y)
        if trace is not None:
            _check_p_rules(lay, ys, i, pending, through, trace)
    return ys


def _check_p_rules(lay, ys, i, pending, through, trace):
    g, path, first = lay.g, lay.path, lay.first
    y = ys[i]
    trace.expect(all(g.has_edge(v, path[i]) for v in bits(y)), f"a vertex of Y_{i} misses p_{i}")
    placed = 0
    for m in ys:
        placed |= m
    missing = lay.upto(i) & ~placed
    if through % 2 == 0:
        trace.expect(not missing, f"prefix {i} is even but some vertex is deferred")
    else:
        nxt = g.adj[path[i + 1]] if i + 1 < lay.k else 0
        trace.expect(missing.bit_count() == 1 or (not missing and not y & nxt),
                     f"prefix {i} is odd and the deferral rule fails")
    if missing:
        w = missing.bit_length() - 1
        nxt = g.adj[path[i + 1]]
        top = max(first[v] for v in bits(nxt & lay.upto(i) & ~lay.on))
        trace.expect((nxt >> w) & 1 and first[w] == top, f"deferred vertex {w} is not a latest neighbour of p_{i + 1}")


def _classes_meeting(cols, mask):
    return [j for j, c in enumerate(cols) if c & mask]


def _lowest_free(cols, avoid, exclude=()):
    for j, c in enumerate(cols):
        if j not in exclude and not c & avoid:
            return j
    raise InternalError("no colour class is free of the nearby blocks")


def _general_component(g, rep, within, trace) -> list[int]:
    lay = _Layout(g, rep, within, trace)
    path, first, k = lay.path, lay.first, lay.k
    ys = _partition_y(lay, trace)
    blocks = [ys[i] | (1 << path[i]) for i in range(k)]

    def block(i):
        return blocks[i] if i >= 0 else 0

    if trace is not None:
        for i, y in enumerate(ys):
            if y:
                lowest_first = min(first[v] for v in bits(y))
                early = 0
                for j in range(lowest_first - 1):
                    early |= blocks[j]
                trace.expect(not lay.nbhd(y) & early, f"N(Y_{i}) reaches a block before the window")
            early = 0
            for j in range(i - 2):
                early |= blocks[j]
            trace.expect(not g.adj[path[i]] & early, f"N(p_{i}) reaches a block three steps back")

    cols = [0] * _SLOTS
    done = 0
    for i in range(k):
        y = ys[i]
        if y:
            w1, w2 = odd_even_split(g, y)
        else:
            w1 = w2 = 0
        w2 |= 1 << path[i]
        odd_prefix = done.bit_count() % 2 == 1
        late = [v for v in bits(y) if first[v] < i - 1]
        if late:
            w = late[0]
            if trace is not None:
                trace.expect(not odd_prefix, f"step {i}: late vertex after an odd prefix")
                trace.expect(first[w] == i - 2, f"step {i}: late vertex {w} starts before i-2")
            a, b = (w1, w2) if not (w1 >> w) & 1 else (w2, w1)
            jb = _lowest_free(cols, block(i - 3) | block(i - 2))
            moved = cols[jb] & block(i - 1)
            if moved:
                other = [j for j in _classes_meeting(cols, block(i - 1)) if j != jb]
                jp = _lowest_free(cols, block(i - 2), exclude=(jb, *other))
                cols[jb] &= ~moved
                cols[jp] |= moved
                if trace is not None:
                    trace.events["repair"] += 1
                    trace.steps.append((i, "repair", jb, jp))
                    _check_prefix(lay, cols, blocks, i - 1, done, trace)
            ja = _lowest_free(cols, block(i - 2) | block(i - 1), exclude=(jb,))
            pairs = [(ja, a), (jb, b)]
            case = "late"
        else:
            j1 = _lowest_free(cols, block(i - 2) | block(i - 1))
            if odd_prefix:
                j2 = next(j for j, c in enumerate(cols) if (c >> path[i - 1]) & 1)
                case = "odd prefix"
            else:
                j2 = _lowest_free(cols, block(i - 2) | block(i - 1), exclude=(j1,))
                case = "even prefix"
            pairs = [(j1, w1), (j2, w2)]
        if trace is not None:
            trace.events[case] += 1
            trace.steps.append((i, case, pairs[0][0], pairs[1][0]))
            for j, part in pairs:
                if case == "odd prefix" and part == w2:
                    continue
                trace.expect(not lay.nbhd(part) & cols[j], f"step {i}: class {j} touches its new part")
        for j, part in pairs:
            cols[j] |= part
        done |= blocks[i]
        if trace is not None:
            _check_prefix(lay, cols, blocks, i, done, trace)
    return cols


def _check_prefix(lay, cols, blocks, i, done, trace):
    """The four colouring invariants after step ``i`` on the prefix ``done``."""
    g, path = lay.g, lay.path
    trace.expect(sum(c.bit_count() for c in cols) == done.bit_count()
                 and all(not (c & ~done) for c in cols), f"step {i}: classes do not partition the prefix")
    bad = [(j, v) for j, c in enumerate(cols) for v in bits(c) if not (g.adj[v] & c).bit_count() & 1]
    if done.bit_count() % 2 == 0:
        trace.expect(not bad, f"step {i}: even prefix but {bad} have even degree")
    else:
        trace.expect(len(bad) == 1 and bad[0][1] == path[i], f"step {i}: odd prefix with even-degree set {bad}")
    trace.expect(len(_classes_meeting(cols, blocks[i])) <= 2, f"step {i}: block spread over three classes")
    owner = {}
    for b, m in enumerate(blocks[: i + 1]):
        for v in bits(m):
            owner[v] = b
    path_edges = {(min(a, b), max(a, b)) for a, b in zip(path, path[1:])}
    for j, c in enumerate(cols):
        rest = c
        while rest:
            comp = rest & -rest
            frontier = comp
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    for u in bits(g.adj[v] & c & ~comp):
                        if (min(u, v), max(u, v)) not in path_edges:
                            nxt |= 1 << u
                comp |= nxt
                frontier = nxt
            trace.expect(len({owner[v] for v in bits(comp)}) == 1,
                         f"step {i}: class {j} joins two blocks off the path")
            rest &= ~comp


def interval_colouring(g: Graph, rep: IntervalRepresentation,
                       trace: IntervalTrace | None = None) -> Colouring:
    """At most 6 classes for an interval graph whose components have even order."""
    return _per_component(g, rep, trace, _general_component)
