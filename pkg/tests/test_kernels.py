"""The numba kernels and their numpy fallbacks must agree entry for entry."""
import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oddcolour import _kernels as K
from oddcolour._jit import JIT_AVAILABLE
from oddcolour.generators import random_gnp

needs_jit = pytest.mark.skipif(not JIT_AVAILABLE, reason="numba kernels unavailable or disabled")


@needs_jit
@settings(max_examples=40, deadline=None)
@given(st.integers(1, 130), st.integers(0, 50), st.integers(0, 2**32 - 1))
def test_gf2_paths_agree(ncols, nrows, seed):
    rng = np.random.default_rng(seed)
    words = max(1, (ncols + 63) // 64)
    rows = rng.integers(0, 2**63, size=(nrows, words), dtype=np.uint64)
    if ncols % 64:
        rows[:, -1] &= np.uint64((1 << (ncols % 64)) - 1)
    rhs = rng.integers(0, 2, size=nrows, dtype=np.uint8)
    r1, rhs1 = rows.copy(), rhs.copy()
    r2, rhs2 = rows.copy(), rhs.copy()
    a = K._gf2_eliminate_jit(r1, rhs1, ncols)
    b = K._gf2_eliminate_numpy(r2, rhs2, ncols)
    assert a[0] == b[0]
    assert np.array_equal(a[1], b[1])
    assert np.array_equal(r1, r2) and np.array_equal(rhs1, rhs2)


@needs_jit
@pytest.mark.parametrize("seed", range(6))
@pytest.mark.parametrize("mode", [0, 1])
def test_subset_tables_agree(seed, mode):
    n = 12
    adj = np.array(random_gnp(n, 0.35, seed=seed).adj, dtype=np.int64)
    good_j = K._good_subsets_jit(adj, n, mode)
    good_n = K._good_subsets_numpy(adj, n, mode)
    assert np.array_equal(good_j, good_n)
    sets = np.flatnonzero(good_j).astype(np.int64)
    lows = np.log2(sets & -sets).astype(np.int64)
    order = np.lexsort((sets, lows))
    sets, lows = sets[order], lows[order]
    offsets = np.searchsorted(lows, np.arange(n + 1)).astype(np.int64)
    fj = K._partition_dp_jit(n, offsets, sets)
    fn = K._partition_dp_numpy(n, offsets, sets)
    filled = fn != K.UNREACHED
    assert fj[-1] == fn[-1]
    assert np.array_equal(fj[filled], fn[filled])


def test_disable_switch_selects_numpy():
    code = (
        "from oddcolour._jit import use_jit; from oddcolour.exact import chi_odd_exact; "
        "from oddcolour.generators import cycle; print(use_jit(), chi_odd_exact(cycle(14))[0])"
    )
    env = dict(os.environ, ODDCOLOUR_DISABLE_JIT="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["False", "3"]
