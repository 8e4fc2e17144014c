"""Constructive Gallai partitions via linear systems over GF(2).

For every vertex the parity requirement is linear once the parity of its
degree is known, so both partitions are the free-variables-zero solution of a
square system with one equation per vertex.
"""
from __future__ import annotations

from .errors import InternalError, PreconditionError
from .gf2 import solve_int_rows
from .graph import Graph, as_set, bits, lowest


def _local_rows(g: Graph, mask: int):
    order = list(bits(mask))
    index = {v: i for i, v in enumerate(order)}
    rows = []
    degs = []
    for v in order:
        row = 0
        for u in bits(g.adj[v] & mask):
            row |= 1 << index[u]
        rows.append(row)
        degs.append(row.bit_count())
    return order, rows, degs


def _to_mask(order, x):
    out = 0
    for i, v in enumerate(order):
        if (x >> i) & 1:
            out |= 1 << v
    return out


def even_even_split(g: Graph, mask: int | None = None) -> tuple[int, int]:
    """Bitset version of :func:`even_even_partition` on ``G[mask]``."""
    if mask is None:
        mask = g.vertex_mask
    order, rows, degs = _local_rows(g, mask)
    # x_v = [v in V2]
    rhs = 0
    for i, d in enumerate(degs):
        if d & 1:
            rows[i] |= 1 << i
            rhs |= 1 << i
    x = solve_int_rows(rows, rhs, len(order))
    if x is None:
        raise InternalError("even/even Gallai system is inconsistent")
    second = _to_mask(order, x)
    return mask & ~second, second


def odd_even_split(g: Graph, mask: int | None = None) -> tuple[int, int]:
    """Bitset version of :func:`odd_even_partition` on ``G[mask]``."""
    if mask is None:
        mask = g.vertex_mask
    order, rows, degs = _local_rows(g, mask)
    # x_v = [v in V1]
    rhs = 0
    for i, d in enumerate(degs):
        if d & 1:
            rhs |= 1 << i
        else:
            rows[i] |= 1 << i
    x = solve_int_rows(rows, rhs, len(order))
    if x is None:
        raise InternalError("odd/even Gallai system is inconsistent")
    first = _to_mask(order, x)
    return first, mask & ~first


def odd_even_even_split(g: Graph, mask: int | None = None) -> tuple[int, int, int]:
    """Split an even-order vertex set into odd, even, even parts, the last two of odd size.

    The lowest vertex forms the third part; the rest is split odd/even.
    """
    if mask is None:
        mask = g.vertex_mask
    if not mask or mask.bit_count() % 2:
        raise PreconditionError("odd/even/even split needs a non-empty set of even size")
    v = lowest(mask)
    first, second = odd_even_split(g, mask & ~(1 << v))
    return first, second, 1 << v


def even_even_partition(g: Graph) -> tuple[frozenset[int], frozenset[int]]:
    """Partition V(g) into two parts that each induce an even graph."""
    a, b = even_even_split(g)
    return as_set(a), as_set(b)


def odd_even_partition(g: Graph) -> tuple[frozenset[int], frozenset[int]]:
    """Partition V(g) into an odd-inducing part and an even-inducing part."""
    a, b = odd_even_split(g)
    return as_set(a), as_set(b)


def odd_even_even_partition(g: Graph) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    a, b, c = odd_even_even_split(g)
    return as_set(a), as_set(b), as_set(c)
