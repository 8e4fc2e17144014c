"""Odd colourings from module partitions.

A module partition whose quotient is a star gives 3 classes, one whose quotient
is a colour-propagating tree gives 2, and any module partition with ``k`` parts
can be refined and coarsened into at most ``k`` even pieces of those two kinds.
That yields at most ``3k`` classes.

Internally parts are bitsets over the host graph's vertices and quotient graphs
are bitsets over part indices.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InfeasibleError, InternalError, NotAModulePartitionError, PreconditionError
from .gallai import odd_even_even_split, odd_even_split
from .graph import Colouring, Graph, as_set, bits, lowest, mask_of, merge_by_index


# types ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ModulePartition:
    """Disjoint non-empty parts covering ``0..n-1``; module checks happen in :func:`build_module_graph`."""

    n: int
    parts: tuple[frozenset[int], ...]

    def __post_init__(self):
        parts = tuple(frozenset(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        seen: set[int] = set()
        for i, p in enumerate(parts):
            if not p:
                raise NotAModulePartitionError(f"part {i} is empty", parts=(i,))
            bad = [v for v in p if not 0 <= v < self.n]
            if bad:
                raise NotAModulePartitionError(f"part {i} has vertices outside 0..{self.n - 1}: {bad}")
            if seen & p:
                raise NotAModulePartitionError(f"vertices {sorted(seen & p)} lie in two parts")
            seen |= p
        if len(seen) != self.n:
            missing = sorted(set(range(self.n)) - seen)
            raise NotAModulePartitionError(f"vertices {missing} are in no part")

    @classmethod
    def from_lists(cls, n: int, parts: Iterable[Iterable[int]]) -> ModulePartition:
        return cls(n, tuple(frozenset(p) for p in parts))

    @property
    def masks(self) -> list[int]:
        return [mask_of(p) for p in self.parts]

    def __len__(self):
        return len(self.parts)


@dataclass(frozen=True)
class ModuleGraph:
    """Quotient graph: ``adj[i]`` is the bitset of part indices complete to part ``i``."""

    adj: tuple[int, ...]
    sizes: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.adj)

    def degree(self, i: int) -> int:
        return self.adj[i].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.k) for j in bits(self.adj[i]) if i < j]


@dataclass(frozen=True)
class DecompositionResult:
    """``blocks[t]`` lists the refined parts inside coarse part ``t``."""

    blocks: tuple[tuple[frozenset[int], ...], ...]

    @property
    def refined(self) -> tuple[frozenset[int], ...]:
        return tuple(p for block in self.blocks for p in block)

    @property
    def coarse(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset().union(*block) for block in self.blocks)


@dataclass
class DecompositionTrace:
    steps: list[str] = field(default_factory=list)
    fallbacks: int = 0


# quotient structure -------------------------------------------------------------

def _quotient(g: Graph, parts: Sequence[int], within: int) -> tuple[int, ...]:
    """Quotient adjacency of ``parts`` inside ``G[within]``; raises if some pair is mixed."""
    k = len(parts)
    outside = []
    for i, p in enumerate(parts):
        rows = {g.adj[v] & within & ~p for v in bits(p)}
        if len(rows) > 1:
            a, b = sorted(rows)[:2]
            j = next(j for j, q in enumerate(parts) if (a ^ b) & q)
            raise NotAModulePartitionError(
                f"part {i} is not a module: its vertices see part {j} differently", parts=(i, j))
        outside.append(rows.pop())
    adj = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            hit = outside[i] & parts[j]
            if hit == parts[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            elif hit:
                raise NotAModulePartitionError(
                    f"parts {i} and {j} are neither complete nor anticomplete", parts=(i, j))
    return tuple(adj)


def build_module_graph(g: Graph, m: ModulePartition) -> ModuleGraph:
    """Quotient graph of ``m``; fails with :class:`NotAModulePartitionError` if ``m`` is not a module partition."""
    if m.n != g.n:
        raise NotAModulePartitionError(f"partition is over {m.n} vertices, graph has {g.n}")
    if len(m) < 2:
        raise NotAModulePartitionError("a module partition needs at least two parts")
    masks = m.masks
    return ModuleGraph(_quotient(g, masks, g.vertex_mask), tuple(len(p) for p in m.parts))


def _connected(adj: Sequence[int], nodes: int) -> bool:
    if not nodes:
        return True
    seen = nodes & -nodes
    frontier = seen
    while frontier:
        nxt = 0
        for i in bits(frontier):
            nxt |= adj[i]
        nxt &= nodes & ~seen
        seen |= nxt
        frontier = nxt
    return seen == nodes


def _is_tree(adj: Sequence[int]) -> bool:
    k = len(adj)
    edges = sum(a.bit_count() for a in adj) // 2
    return edges == k - 1 and _connected(adj, (1 << k) - 1)


def _star_centre(adj: Sequence[int], sizes: Sequence[int]) -> int | None:
    k = len(adj)
    if k < 2 or not _is_tree(adj):
        return None
    if k == 2:
        odd = [i for i in range(2) if sizes[i] % 2]
        return odd[0] if len(odd) == 1 else 0
    full = (1 << k) - 1
    for i in range(k):
        if adj[i] == full & ~(1 << i):
            return i
    return None


def _side(adj: Sequence[int], start: int, blocked: int | None = None) -> int:
    """Nodes reachable from ``start`` without entering ``blocked``."""
    seen = 1 << start
    stop = 0 if blocked is None else 1 << blocked
    frontier = seen
    while frontier:
        nxt = 0
        for i in bits(frontier):
            nxt |= adj[i]
        nxt &= ~seen & ~stop
        seen |= nxt
        frontier = nxt
    return seen


def _cp_ok(adj: Sequence[int], sizes: Sequence[int]) -> bool:
    k = len(adj)
    leaf = [a.bit_count() == 1 for a in adj]
    inner = [i for i in range(k) if not leaf[i]]
    if not inner or any(sizes[i] != 1 for i in inner):
        return False
    for i in inner:
        for j in bits(adj[i]):
            if j > i and not leaf[j]:
                side = _side(adj, i, j)
                if sum(sizes[t] for t in bits(side)) % 2 == 0:
                    return False
    return True


def is_colour_propagating(mg: ModuleGraph, sizes: Sequence[int] | None = None) -> bool:
    """Tree quotient with a non-leaf, singleton non-leaves, and odd weight across every inner edge."""
    sizes = mg.sizes if sizes is None else tuple(sizes)
    if len(sizes) != mg.k:
        raise PreconditionError("one size per module is required")
    if not _is_tree(mg.adj):
        raise PreconditionError("module graph is not a tree")
    return _cp_ok(mg.adj, sizes)


def _shape(adj, sizes) -> str | None:
    if _star_centre(adj, sizes) is not None:
        return "star"
    if _is_tree(adj) and _cp_ok(adj, sizes):
        return "cp"
    return None


# colouring the two base shapes -------------------------------------------------

def _colour_star(g: Graph, parts: Sequence[int], centre: int) -> list[int]:
    sizes = [p.bit_count() for p in parts]
    leaves = [i for i in range(len(parts)) if i != centre]
    v1 = v2 = v3 = 0
    if sizes[centre] % 2:
        for p in parts:
            a, b = odd_even_split(g, p)
            v1 |= a
            v2 |= b
        return [v1, v2, 0]
    odd_leaves = [i for i in leaves if sizes[i] % 2]
    if not odd_leaves:
        second = leaves[0]
        for i, p in enumerate(parts):
            if i in (centre, second):
                a, b, c = odd_even_even_split(g, p)
                v3 |= c
            else:
                a, b = odd_even_split(g, p)
            v1 |= a
            v2 |= b
        return [v1, v2, v3]
    second = odd_leaves[0]
    for i, p in enumerate(parts):
        if i == centre:
            a, b, c = odd_even_even_split(g, p)
            v1 |= a
            v2 |= b
            v3 |= c
        else:
            a, b = odd_even_split(g, p)
            v1 |= a
            if i == second:
                v3 |= b
            else:
                v2 |= b
    return [v1, v2, v3]


def _colour_cp(g: Graph, parts: Sequence[int]) -> list[int]:
    v1 = v2 = 0
    for p in parts:
        a, b = odd_even_split(g, p)
        v1 |= a
        v2 |= b
    return [v1, v2]


def _whole(g: Graph, m: ModulePartition) -> tuple[list[int], ModuleGraph]:
    mg = build_module_graph(g, m)
    if not g.is_connected():
        raise PreconditionError("graph must be connected")
    if g.n % 2:
        raise PreconditionError(f"graph has odd order {g.n}")
    return m.masks, mg


def colour_star(g: Graph, m: ModulePartition) -> Colouring:
    """At most 3 classes when the quotient of ``m`` is a star."""
    parts, mg = _whole(g, m)
    centre = _star_centre(mg.adj, mg.sizes)
    if centre is None:
        raise PreconditionError("module graph is not a star")
    return Colouring.from_masks(g.n, _colour_star(g, parts, centre))


def colour_cp_tree(g: Graph, m: ModulePartition) -> Colouring:
    """At most 2 classes when the quotient of ``m`` is a colour-propagating tree."""
    parts, mg = _whole(g, m)
    if not is_colour_propagating(mg):
        raise PreconditionError("module graph is not a colour-propagating tree")
    return Colouring.from_masks(g.n, _colour_cp(g, parts))


# decomposition -------------------------------------------------------------------

def _prefix(mask: int, size: int) -> int:
    out = 0
    for v in bits(mask):
        if size == 0:
            break
        out |= 1 << v
        size -= 1
    return out


class _Step:
    """One split of the current piece into ``q1`` (kept) and ``q2`` (emitted)."""

    def __init__(self, g: Graph, parts: list[int]):
        self.g = g
        self.parts = parts
        self.whole = sum(parts)
        self.adj = _quotient(g, parts, self.whole)
        self.sizes = [p.bit_count() for p in parts]

    def weight(self, nodes: int) -> int:
        return sum(self.sizes[i] for i in bits(nodes))

    def split(self, q2_nodes: int, cut: dict[int, int] | None = None):
        """Parts of ``q1`` and ``q2``; ``cut[i]`` is the piece of part ``i`` that goes to ``q2``."""
        cut = cut or {}
        q1, q2 = [], []
        for i, p in enumerate(self.parts):
            if i in cut:
                q2.append(cut[i])
                if p & ~cut[i]:
                    q1.append(p & ~cut[i])
            elif (q2_nodes >> i) & 1:
                q2.append(p)
            else:
                q1.append(p)
        return q1, [q2]

    # tree case -------------------------------------------------------------

    def tree(self, nodes: int, fixed: int):
        """Split a sub-tree of the quotient (``nodes``), keeping part of ``fixed`` on the ``q1`` side."""
        adj = [self.adj[i] & nodes for i in range(len(self.parts))]
        leaf = {i: adj[i].bit_count() == 1 for i in bits(nodes)}
        parent = {fixed: -1}
        order = [fixed]
        for x in order:
            for y in bits(adj[x]):
                if y not in parent:
                    parent[y] = x
                    order.append(y)
        sub = {}
        for x in reversed(order):
            s = 1 << x
            for y in bits(adj[x]):
                if parent.get(y) == x:
                    s |= sub[y]
            sub[x] = s
        zed = [
            x for x in order[1:]
            if not leaf[x] and (self.sizes[x] > 1
                                or (not leaf[parent[x]] and self.weight(sub[x]) % 2 == 0))
        ]
        if zed:
            n = min(zed, key=lambda x: (sub[x].bit_count(), x))
            xn = sub[n]
        else:
            inner = [y for y in bits(adj[fixed]) if not leaf[y]]
            if not inner:
                return None
            n = fixed
            xn = nodes & ~sub[min(inner)]
        near = [y for y in bits(adj[n] & xn)]
        if self.sizes[n] == 1:
            return self.split(xn)
        if all(leaf[y] for y in near):
            rest = self.weight(xn & ~(1 << n))
            take = 1 if rest % 2 else 2
            if take >= self.sizes[n] and n == fixed:
                return None
            return self.split(xn & ~(1 << n), {n: _prefix(self.parts[n], take)})
        other = min(y for y in near if not leaf[y])
        return self.split(sub[other], {n: _prefix(self.parts[n], 1)})

    # cycle case -------------------------------------------------------------

    def spanning_tree(self) -> list[tuple[int, int]]:
        seen = 1
        edges = []
        queue = [0]
        for x in queue:
            for y in bits(self.adj[x] & ~seen):
                seen |= 1 << y
                edges.append((x, y))
                queue.append(y)
        return edges

    def _cycle_piece(self):
        k = len(self.parts)
        tree = self.spanning_tree()
        tset = set(tree)
        non_tree = [(a, b) for a in range(k) for b in bits(self.adj[a]) if a < b
                    and (a, b) not in tset and (b, a) not in tset]
        best = None
        for a, b in non_tree:
            at_a = [e for e in tree if a in e]
            at_b = [e for e in tree if b in e]
            for e1 in at_a:
                for e2 in at_b:
                    if e1 == e2:
                        continue
                    tadj = [0] * k
                    for x, y in tree:
                        if (x, y) in (e1, e2):
                            continue
                        tadj[x] |= 1 << y
                        tadj[y] |= 1 << x
                    tadj[a] |= 1 << b
                    tadj[b] |= 1 << a
                    comp = _side(tadj, a)
                    if not (comp >> b) & 1:
                        continue
                    if not _connected(tadj, ((1 << k) - 1) & ~comp):
                        continue
                    inside = sum((self.adj[i] & comp).bit_count() for i in bits(comp)) // 2
                    if inside != comp.bit_count() - 1:
                        continue
                    key = (comp.bit_count(), a, b, e1, e2)
                    if best is None or key < best[0]:
                        best = (key, comp)
        return best

    def cycle(self):
        found = self._cycle_piece()
        if found is None:
            return None
        (_, a, b, _, _), comp = found
        sub_adj = [self.adj[i] & comp if (comp >> i) & 1 else 0 for i in range(len(self.parts))]
        edges = sum(x.bit_count() for x in sub_adj) // 2
        if edges != comp.bit_count() - 1:
            return None
        k = len(self.parts)
        if self.weight(comp) % 2 == 0:
            if self._good(comp):
                rest = ((1 << k) - 1) & ~comp
                if rest.bit_count() >= 2:
                    return self.split(comp)
                n = lowest(rest)
                piece = _prefix(self.parts[n], 1)
                for side in self._sides(sub_adj, a, b):
                    if self.weight(side) % 2:
                        step = self.split(side, {n: piece})
                        if _valid_step(self.g, self.parts, *step):
                            return step
                return self.triangle()
            return self.tree(comp, a)
        for side, anchor in zip(self._sides(sub_adj, a, b), (a, b)):
            if self.weight(side) % 2 == 0:
                if side.bit_count() >= 2:
                    if self._good(side):
                        return self.split(side)
                    return self.tree(side, anchor)
                # a lone even module: one of its vertices joins the odd side instead
                other = comp & ~side
                return self.split(other, {anchor: _prefix(self.parts[anchor], 1)})
        return None

    def triangle(self):
        """Three pairwise complete modules of even size: pair single vertices across them."""
        if len(self.parts) != 3 or any(s % 2 for s in self.sizes):
            return None
        a, b, c = self.parts
        a1, b1, c1 = (_prefix(p, 1) for p in self.parts)
        return [], [[a1, b1], [a & ~a1, c1], [b & ~b1, c & ~c1]]

    @staticmethod
    def _sides(sub_adj, a, b):
        cut = list(sub_adj)
        cut[a] &= ~(1 << b)
        cut[b] &= ~(1 << a)
        return _side(cut, a), _side(cut, b)

    def _good(self, nodes: int) -> bool:
        idx = list(bits(nodes))
        adj = [0] * len(idx)
        pos = {x: t for t, x in enumerate(idx)}
        for x in idx:
            for y in bits(self.adj[x] & nodes):
                adj[pos[x]] |= 1 << pos[y]
        return _shape(adj, [self.sizes[x] for x in idx]) is not None

    # exhaustive fallback --------------------------------------------------------

    def search(self, budget: int = 50000):
        k = len(self.parts)
        seen = set()
        layer = [1 << i for i in range(k)]
        tried = 0
        while layer:
            nxt = []
            for s in layer:
                cands = [(s, None)]
                for i in bits(s):
                    if self.sizes[i] > 1:
                        for take in (1, 2):
                            if take < self.sizes[i]:
                                cands.append((s & ~(1 << i), {i: _prefix(self.parts[i], take)}))
                for nodes, cut in cands:
                    tried += 1
                    if tried > budget:
                        return None
                    step = self.split(nodes, cut)
                    if _valid_step(self.g, self.parts, *step):
                        return step
                grow = 0
                for i in bits(s):
                    grow |= self.adj[i]
                for j in bits(grow & ~s):
                    t = s | (1 << j)
                    if t not in seen and t.bit_count() < k:
                        seen.add(t)
                        nxt.append(t)
            layer = nxt
        return None


def _valid_step(g: Graph, parts, q1, blocks) -> bool:
    """``blocks`` are emitted pieces; ``q1`` is the remainder (possibly empty)."""
    # blocks + remaining parts <= current parts keeps the totals within 2k refined, k coarse
    if (q1 and len(q1) < 2) or len(blocks) + len(q1) > len(parts):
        return False
    pieces = list(q1) + [p for b in blocks for p in b]
    if any(not p for p in pieces):
        return False
    union = 0
    for p in pieces:
        if union & p or not any(p & ~orig == 0 for orig in parts):
            return False
        union |= p
    if union != sum(parts):
        return False
    if len(pieces) > len(parts) + len(blocks):
        return False
    if q1:
        w1 = sum(q1)
        if w1.bit_count() % 2 or not g.is_connected(w1):
            return False
        try:
            _quotient(g, q1, w1)
        except NotAModulePartitionError:
            return False
    return all(_good_block(g, b) for b in blocks)


def _good_block(g: Graph, block) -> bool:
    w = sum(block)
    if len(block) < 2 or w.bit_count() % 2:
        return False
    try:
        adj = _quotient(g, block, w)
    except NotAModulePartitionError:
        return False
    return _shape(adj, [p.bit_count() for p in block]) is not None


def _decompose(g: Graph, parts: list[int], trace: DecompositionTrace | None) -> list[list[int]]:
    blocks = []
    current = list(parts)
    while True:
        step = _Step(g, current)
        if _shape(step.adj, step.sizes) is not None:
            blocks.append(current)
            break
        if _is_tree(step.adj):
            how, result = "tree", step.tree((1 << len(current)) - 1, 0)
        else:
            how, result = "cycle", step.cycle()
        if result is None or not _valid_step(g, current, *result):
            result = step.search()
            how += "+search"
            if trace is not None:
                trace.fallbacks += 1
            if result is None:
                raise InternalError(f"no decomposition step found for {len(current)} modules")
        if trace is not None:
            trace.steps.append(how)
        current, emitted = result
        blocks.extend(emitted)
        if not current:
            break
    return blocks


def _check_blocks(g: Graph, k: int, blocks: list[list[int]]) -> None:
    refined = sum(len(b) for b in blocks)
    if refined > 2 * k or len(blocks) > k:
        raise InternalError(f"{refined} refined parts in {len(blocks)} pieces from {k} modules")
    for b in blocks:
        w = sum(b)
        if w.bit_count() % 2 or len(b) < 2:
            raise InternalError("decomposition piece is odd or has a single part")
        adj = _quotient(g, b, w)
        if _shape(adj, [p.bit_count() for p in b]) is None:
            raise InternalError("decomposition piece is neither a star nor colour-propagating")


def decompose(g: Graph, m: ModulePartition, trace: DecompositionTrace | None = None) -> DecompositionResult:
    """Refine ``m`` and group it into even pieces whose quotients are stars or colour-propagating trees."""
    build_module_graph(g, m)
    if not g.is_connected():
        raise PreconditionError("decompose needs a connected graph")
    if g.n % 2:
        raise PreconditionError(f"graph has odd order {g.n}")
    blocks = _decompose(g, m.masks, trace)
    _check_blocks(g, len(m), blocks)
    return DecompositionResult(tuple(tuple(as_set(p) for p in b) for b in blocks))


def _colour_piece(g: Graph, parts: list[int]) -> list[int]:
    w = sum(parts)
    adj = _quotient(g, parts, w)
    sizes = [p.bit_count() for p in parts]
    centre = _star_centre(adj, sizes)
    if centre is not None:
        return _colour_star(g, parts, centre)
    return _colour_cp(g, parts)


def _restrict(parts: Sequence[int], within: int) -> list[int]:
    return [p & within for p in parts if p & within]


def colour_modular(
    g: Graph, m: ModulePartition, trace: DecompositionTrace | None = None
) -> tuple[Colouring, int]:
    """Colour every component from the restriction of ``m``; returns the colouring and its bound.

    The bound is ``3 * w`` where ``w`` is the largest number of parts used in
    a component. A component lying inside a single part of ``m`` falls back to
    :func:`naive_module_partition` of that component.
    """
    if m.n != g.n:
        raise NotAModulePartitionError(f"partition is over {m.n} vertices, graph has {g.n}")
    if len(m) >= 2:
        _quotient(g, m.masks, g.vertex_mask)
    per_component = []
    width = 0
    for comp in g.component_masks():
        if comp.bit_count() % 2:
            raise InfeasibleError(f"component {sorted(bits(comp))} has odd order", component=as_set(comp))
        parts = _restrict(m.masks, comp)
        if len(parts) < 2:
            sub, old = g.induced(comp)
            local = naive_module_partition(sub)
            parts = [sum(1 << old[v] for v in p) for p in local.parts]
        width = max(width, len(parts))
        blocks = _decompose(g, parts, trace)
        _check_blocks(g, len(parts), blocks)
        classes = []
        for b in blocks:
            classes.extend(_colour_piece(g, b))
        per_component.append(classes)
    return merge_by_index(g.n, per_component), 3 * width


# a convenience partition ----------------------------------------------------------

def _closure(g: Graph, seed: int, full: int) -> int:
    """Smallest module containing ``seed``."""
    mod = seed
    while True:
        grow = 0
        for x in bits(full & ~mod):
            hit = g.adj[x] & mod
            if hit and hit != mod:
                grow |= 1 << x
        if not grow:
            return mod
        mod |= grow


def naive_module_partition(g: Graph) -> ModulePartition:
    """Components, co-components, or the maximal proper modules, whichever applies first."""
    if g.n < 2:
        raise PreconditionError("a module partition needs at least two vertices")
    full = g.vertex_mask
    comps = g.component_masks()
    if len(comps) > 1:
        return ModulePartition(g.n, tuple(as_set(c) for c in comps))
    co = Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))
    cocomps = co.component_masks()
    if len(cocomps) > 1:
        return ModulePartition(g.n, tuple(as_set(c) for c in cocomps))
    # prime quotient: u, v share a maximal module iff their module closure is proper
    group = list(range(g.n))

    def find(x):
        while group[x] != x:
            group[x] = group[group[x]]
            x = group[x]
        return x

    for u in range(g.n):
        for v in range(u + 1, g.n):
            if find(u) == find(v):
                continue
            mod = _closure(g, (1 << u) | (1 << v), full)
            if mod != full:
                for w in bits(mod):
                    group[find(w)] = find(u)
    classes: dict[int, int] = {}
    for v in range(g.n):
        classes[find(v)] = classes.get(find(v), 0) | (1 << v)
    return ModulePartition(g.n, tuple(as_set(c) for c in sorted(classes.values(), key=lowest)))


def parse_modules(text: str, n: int) -> ModulePartition:
    """One part per line, whitespace-separated ids; ``#`` starts a comment line."""
    parts = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts.append([int(x) for x in line.split()])
    return ModulePartition.from_lists(n, parts)


def read_modules(path, n: int) -> ModulePartition:
    with open(path, encoding="utf-8") as fh:
        return parse_modules(fh.read(), n)
