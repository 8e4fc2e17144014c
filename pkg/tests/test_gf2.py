import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oddcolour.gf2 import BitMatrix, BitVector, rank, solve, solve_int_rows


def brute_solutions(rows, rhs, ncols):
    out = []
    for x in range(1 << ncols):
        if all(((r & x).bit_count() & 1) == ((rhs >> i) & 1) for i, r in enumerate(rows)):
            out.append(x)
    return out


def brute_rank(rows):
    span = {0}
    for r in rows:
        span |= {s ^ r for s in span}
    return len(span).bit_length() - 1


def test_solve_examples():
    assert solve(BitMatrix.identity(2), BitVector.from_bits([1, 0])).to_list() == [1, 0]
    assert solve(BitMatrix.from_rows([[1, 1], [1, 1]]), BitVector.from_bits([1, 1])).to_list() == [1, 0]
    assert solve(BitMatrix.from_rows([[1, 0], [1, 0]]), BitVector.from_bits([1, 0])) is None


def test_rank_examples():
    assert rank(BitMatrix(3, 3)) == 0
    assert rank(BitMatrix.identity(3)) == 3
    assert rank(BitMatrix.from_rows([[1, 1], [1, 1]])) == 1


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        solve(BitMatrix.identity(2), BitVector.from_bits([1, 0, 1]))
    with pytest.raises(ValueError):
        BitMatrix.from_int_rows([0b100], 2)


@given(st.integers(1, 6), st.data())
def test_solve_agrees_with_enumeration(ncols, data):
    nrows = data.draw(st.integers(0, 6))
    rows = data.draw(st.lists(st.integers(0, (1 << ncols) - 1), min_size=nrows, max_size=nrows))
    rhs = data.draw(st.integers(0, (1 << nrows) - 1)) if nrows else 0
    x = solve_int_rows(rows, rhs, ncols)
    sols = brute_solutions(rows, rhs, ncols)
    if not sols:
        assert x is None
    else:
        assert x in sols
    assert rank(BitMatrix.from_int_rows(rows, ncols)) == brute_rank(rows)


@settings(max_examples=30)
@given(st.integers(65, 200), st.data())
def test_wide_systems_cross_word_boundaries(ncols, data):
    # build a consistent system from a planted solution
    nrows = data.draw(st.integers(1, 40))
    rows = data.draw(st.lists(st.integers(0, (1 << ncols) - 1), min_size=nrows, max_size=nrows))
    planted = data.draw(st.integers(0, (1 << ncols) - 1))
    rhs = sum((((r & planted).bit_count() & 1) << i) for i, r in enumerate(rows))
    x = solve_int_rows(rows, rhs, ncols)
    assert x is not None
    a = BitMatrix.from_int_rows(rows, ncols)
    assert a.matvec(BitVector.from_int(x, ncols)).to_int() == rhs


def test_bitvector_round_trips():
    for bits in itertools.product([0, 1], repeat=5):
        v = BitVector.from_bits(bits)
        assert v.to_list() == list(bits)
        assert v == BitVector.from_int(v.to_int(), 5)
    v = BitVector.from_int((1 << 130) - 1, 70)
    assert v.to_int() == (1 << 70) - 1
    assert v[69] == 1
