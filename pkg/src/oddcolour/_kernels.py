"""Hot inner loops: GF(2) elimination and the subset tables behind the exact solver.

Every kernel has a numba version and a pure-numpy version with identical
results; :func:`oddcolour._jit.use_jit` picks one at call time.
"""
import numpy as np

from ._jit import njit, use_jit

UNREACHED = 127


# GF(2) Gauss-Jordan elimination ---------------------------------------------

@njit(cache=True)
def _gf2_eliminate_jit(rows, rhs, ncols):
    r = rows.shape[0]
    nwords = rows.shape[1]
    pivots = np.full(max(r, 1), -1, np.int64)
    rank = 0
    for col in range(ncols):
        if rank == r:
            break
        w = col >> 6
        b = np.uint64(1) << np.uint64(col & 63)
        piv = -1
        for i in range(rank, r):
            if rows[i, w] & b:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(nwords):
                t = rows[piv, j]
                rows[piv, j] = rows[rank, j]
                rows[rank, j] = t
            t8 = rhs[piv]
            rhs[piv] = rhs[rank]
            rhs[rank] = t8
        for i in range(r):
            if i != rank and (rows[i, w] & b):
                for j in range(w, nwords):
                    rows[i, j] ^= rows[rank, j]
                rhs[i] ^= rhs[rank]
        pivots[rank] = col
        rank += 1
    return rank, pivots


def _gf2_eliminate_numpy(rows, rhs, ncols):
    r = rows.shape[0]
    pivots = np.full(max(r, 1), -1, np.int64)
    rank = 0
    for col in range(ncols):
        if rank == r:
            break
        w = col >> 6
        b = np.uint64(1) << np.uint64(col & 63)
        hits = np.flatnonzero(rows[rank:, w] & b)
        if hits.size == 0:
            continue
        piv = rank + int(hits[0])
        if piv != rank:
            rows[[rank, piv]] = rows[[piv, rank]]
            rhs[[rank, piv]] = rhs[[piv, rank]]
        sel = (rows[:, w] & b) != 0
        sel[rank] = False
        rows[sel, w:] ^= rows[rank, w:]
        rhs[sel] ^= rhs[rank]
        pivots[rank] = col
        rank += 1
    return rank, pivots


def gf2_eliminate(rows, rhs, ncols):
    """Reduce ``rows | rhs`` in place to reduced row echelon form.

    Pivots are taken by lowest column index, first eligible row. Returns
    ``(rank, pivots)`` where ``pivots[i]`` is the pivot column of row ``i``.
    """
    if use_jit():
        return _gf2_eliminate_jit(rows, rhs, ncols)
    return _gf2_eliminate_numpy(rows, rhs, ncols)


# subset tables ----------------------------------------------------------------

@njit(cache=True)
def _popcount64(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def _good_subsets_jit(adj, n, mode):
    size = 1 << n
    good = np.zeros(size, np.bool_)
    for s in range(1, size):
        ok = True
        rest = s
        while rest:
            low = rest & -rest
            v = 0
            t = low
            while t > 1:
                t >>= 1
                v += 1
            d = _popcount64(adj[v] & s)
            if mode == 0:
                if d & 1 == 0:
                    ok = False
                    break
            elif d != 0:
                ok = False
                break
            rest ^= low
        good[s] = ok
    return good


def _good_subsets_numpy(adj, n, mode):
    s = np.arange(1 << n, dtype=np.int64)
    good = s != 0
    for v in range(n):
        member = ((s >> v) & 1).astype(bool)
        d = np.bitwise_count(s & adj[v])
        bad = (d & 1) == 0 if mode == 0 else d != 0
        good &= ~(member & bad)
    return good


def good_subsets(adj, n, mode):
    """Boolean table over all ``2**n`` vertex subsets.

    ``mode`` 0: the subset induces an odd graph; ``mode`` 1: it is independent.
    The empty set is reported as not good.
    """
    adj = np.asarray(adj, dtype=np.int64)
    if use_jit():
        return _good_subsets_jit(adj, n, mode)
    return _good_subsets_numpy(adj, n, mode)


@njit(cache=True)
def _partition_dp_jit(n, offsets, sets):
    size = 1 << n
    f = np.full(size, UNREACHED, np.int8)
    f[0] = 0
    for s in range(1, size):
        low = s & -s
        v = 0
        t = low
        while t > 1:
            t >>= 1
            v += 1
        best = UNREACHED
        for idx in range(offsets[v], offsets[v + 1]):
            part = sets[idx]
            if part & ~s:
                continue
            val = f[s ^ part]
            if val + 1 < best:
                best = val + 1
                if best == 1:
                    break
        f[s] = best
    return f


def _partition_dp_numpy(n, offsets, sets):
    size = 1 << n
    full = size - 1
    f = np.full(size, UNREACHED, np.int8)
    f[0] = 0
    frontier = np.array([0], dtype=np.int64)
    level = 0
    low_of = [int(sets[i]) & -int(sets[i]) for i in range(len(sets))]
    while frontier.size and f[full] == UNREACHED:
        level += 1
        reached = []
        for idx, part in enumerate(sets.tolist()):
            below = low_of[idx] - 1
            cand = frontier[((frontier & part) == 0) & ((frontier & below) == 0)]
            if cand.size:
                reached.append(cand | part)
        if not reached:
            break
        new = np.unique(np.concatenate(reached))
        new = new[f[new] == UNREACHED]
        f[new] = level
        frontier = new
    return f


def partition_dp(n, good):
    """Minimum number of good subsets partitioning each vertex subset.

    Each part is anchored at the lowest vertex of the remaining set. Entries
    that are unreachable hold ``UNREACHED``. The numpy path only fills levels up
    to the optimum of the full set; every entry it does fill matches the jit path.
    """
    sets = np.flatnonzero(good).astype(np.int64)
    lows = np.zeros(sets.size, np.int64)
    if sets.size:
        lows = np.log2(sets & -sets).astype(np.int64)
    order = np.lexsort((sets, lows))
    sets = sets[order]
    lows = lows[order]
    offsets = np.searchsorted(lows, np.arange(n + 1)).astype(np.int64)
    if use_jit():
        return _partition_dp_jit(n, offsets, sets), offsets, sets
    return _partition_dp_numpy(n, offsets, sets), offsets, sets
