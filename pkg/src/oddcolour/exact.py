"""Exact oracles: the even-components feasibility test and minimum odd colourings by subset DP."""
from __future__ import annotations

import numpy as np

from ._kernels import UNREACHED, good_subsets, partition_dp
from .errors import InfeasibleError, SizeError
from .graph import Colouring, Graph, bits, lowest

DEFAULT_CAP = 20


def is_odd_colourable(g: Graph) -> bool:
    """True iff every connected component has even order."""
    return all(c.bit_count() % 2 == 0 for c in g.component_masks())


def first_odd_component(g: Graph) -> int | None:
    for c in g.component_masks():
        if c.bit_count() % 2:
            return c
    return None


def _check_cap(g: Graph, cap: int | None):
    cap = DEFAULT_CAP if cap is None else cap
    if g.n > cap:
        raise SizeError(f"exact solver capped at {cap} vertices, graph has {g.n}")


def _optimum(g: Graph, mode: int) -> tuple[int, list[int]]:
    if g.n == 0:
        return 0, []
    good = good_subsets(np.array(g.adj, dtype=np.int64), g.n, mode)
    f, offsets, sets = partition_dp(g.n, good)
    full = (1 << g.n) - 1
    best = int(f[full])
    if best == UNREACHED:
        raise InfeasibleError("no partition into good sets exists")
    # walk back: first anchored set in table order that keeps the optimum
    parts = []
    s = full
    sets = sets.tolist()
    while s:
        v = lowest(s)
        target = int(f[s]) - 1
        for idx in range(int(offsets[v]), int(offsets[v + 1])):
            t = sets[idx]
            if t & ~s == 0 and int(f[s ^ t]) == target:
                parts.append(t)
                s ^= t
                break
        else:  # pragma: no cover - table is self-consistent
            raise AssertionError("DP table has no predecessor")
    return best, parts


def chi_odd_exact(g: Graph, cap: int | None = None) -> tuple[int, Colouring]:
    """Odd chromatic number and an optimal colouring, by DP over vertex subsets.

    Raises :class:`InfeasibleError` if some component has odd order and
    :class:`SizeError` above ``cap`` vertices (default 20).
    """
    odd = first_odd_component(g)
    if odd is not None:
        raise InfeasibleError(
            f"component {sorted(bits(odd))} has odd order", component=frozenset(bits(odd)))
    _check_cap(g, cap)
    k, parts = _optimum(g, 0)
    return k, Colouring.from_masks(g.n, parts)


def chromatic_number_exact(g: Graph, cap: int | None = None) -> int:
    _check_cap(g, cap)
    return _optimum(g, 1)[0]
