"""Bit-packed linear algebra over GF(2).

Rows are packed little-endian into ``uint64`` words: bit ``j`` of a row lives
in word ``j // 64`` at position ``j % 64``.
"""
from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from ._kernels import gf2_eliminate

_WORD = 64
_LOW = (1 << _WORD) - 1


def _nwords(length: int) -> int:
    return max(1, (length + _WORD - 1) // _WORD)


def _pack_int(value: int, nwords: int) -> np.ndarray:
    return np.array([(value >> (_WORD * w)) & _LOW for w in range(nwords)], dtype=np.uint64)


def _unpack_int(words: np.ndarray) -> int:
    out = 0
    for w, word in enumerate(words.tolist()):
        out |= int(word) << (_WORD * w)
    return out


class BitVector:
    """Fixed-length vector over GF(2); bits past ``length`` are always zero."""

    __slots__ = ("length", "words")

    def __init__(self, length: int, words: np.ndarray | None = None):
        if length < 0:
            raise ValueError("length must be non-negative")
        self.length = length
        if words is None:
            words = np.zeros(_nwords(length), dtype=np.uint64)
        self.words = words
        self._clear_tail()

    def _clear_tail(self):
        extra = len(self.words) * _WORD - self.length
        if extra and len(self.words):
            keep = _WORD - extra
            self.words[-1] &= np.uint64((1 << keep) - 1) if keep else np.uint64(0)

    @classmethod
    def from_int(cls, value: int, length: int) -> BitVector:
        return cls(length, _pack_int(value & ((1 << length) - 1), _nwords(length)))

    @classmethod
    def from_bits(cls, values: Iterable[int]) -> BitVector:
        values = list(values)
        acc = 0
        for j, b in enumerate(values):
            if b & 1:
                acc |= 1 << j
        return cls.from_int(acc, len(values))

    def to_int(self) -> int:
        return _unpack_int(self.words)

    def to_list(self) -> list[int]:
        value = self.to_int()
        return [(value >> j) & 1 for j in range(self.length)]

    def __getitem__(self, j: int) -> int:
        if not 0 <= j < self.length:
            raise IndexError(j)
        return int((int(self.words[j // _WORD]) >> (j % _WORD)) & 1)

    def __len__(self):
        return self.length

    def __eq__(self, other):
        return (
            isinstance(other, BitVector)
            and self.length == other.length
            and np.array_equal(self.words, other.words)
        )

    def __hash__(self):
        return hash((self.length, self.to_int()))

    def __repr__(self):
        return f"BitVector({''.join(map(str, self.to_list()))})"


class BitMatrix:
    """Dense GF(2) matrix stored as an ``(rows, words)`` ``uint64`` array."""

    __slots__ = ("nrows", "ncols", "data")

    def __init__(self, nrows: int, ncols: int, data: np.ndarray | None = None):
        self.nrows = nrows
        self.ncols = ncols
        if data is None:
            data = np.zeros((nrows, _nwords(ncols)), dtype=np.uint64)
        self.data = data

    @classmethod
    def from_int_rows(cls, rows: Sequence[int], ncols: int) -> BitMatrix:
        nw = _nwords(ncols)
        data = np.zeros((len(rows), nw), dtype=np.uint64)
        full = (1 << ncols) - 1
        for i, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {i} has bits beyond column {ncols - 1}")
            data[i] = _pack_int(row, nw)
        return cls(len(rows), ncols, data)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> BitMatrix:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("rows have unequal length")
        ints = [sum((b & 1) << j for j, b in enumerate(r)) for r in rows]
        return cls.from_int_rows(ints, ncols)

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls.from_int_rows([1 << i for i in range(n)], n)

    def row(self, i: int) -> BitVector:
        return BitVector(self.ncols, self.data[i].copy())

    def int_rows(self) -> list[int]:
        return [_unpack_int(self.data[i]) for i in range(self.nrows)]

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.int_rows()]

    def matvec(self, x: BitVector) -> BitVector:
        if x.length != self.ncols:
            raise ValueError("dimension mismatch")
        xv = x.to_int()
        out = 0
        for i, r in enumerate(self.int_rows()):
            out |= ((r & xv).bit_count() & 1) << i
        return BitVector.from_int(out, self.nrows)

    def __repr__(self):
        return f"BitMatrix({self.nrows}x{self.ncols})"


def solve(a: BitMatrix, b: BitVector) -> BitVector | None:
    """One solution of ``a x = b`` with every free variable 0, or ``None`` if inconsistent."""
    if b.length != a.nrows:
        raise ValueError(f"right-hand side has length {b.length}, matrix has {a.nrows} rows")
    rows = a.data.copy()
    rhs = np.array(b.to_list(), dtype=np.uint8) if a.nrows else np.zeros(0, np.uint8)
    rank, pivots = gf2_eliminate(rows, rhs, a.ncols)
    if rank < a.nrows and rhs[rank:].any():
        return None
    x = 0
    for i in range(rank):
        if rhs[i]:
            x |= 1 << int(pivots[i])
    return BitVector.from_int(x, a.ncols)


def rank(a: BitMatrix) -> int:
    rows = a.data.copy()
    rhs = np.zeros(a.nrows, dtype=np.uint8)
    r, _ = gf2_eliminate(rows, rhs, a.ncols)
    return int(r)


def solve_int_rows(rows: Sequence[int], rhs: int, ncols: int) -> int | None:
    """Convenience wrapper over :func:`solve` for rows and right-hand side given as ints."""
    a = BitMatrix.from_int_rows(rows, ncols)
    x = solve(a, BitVector.from_int(rhs, len(rows)))
    return None if x is None else x.to_int()
