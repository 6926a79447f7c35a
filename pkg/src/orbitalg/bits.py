"""Packed bitset rows: each row of n bits is a vector of uint64 words.

Bit p of a row lives in word ``p >> 6`` at position ``p & 63``.  Words are
stored explicitly little-endian (dtype ``<u8``) so that packing via
``np.packbits(..., bitorder="little")`` and reinterpreting the byte buffer
agree on any host.
"""

from __future__ import annotations

import numpy as np

WORD = np.dtype("<u8")


def words_for(n: int) -> int:
    """Number of 64-bit words needed for n bits."""
    return (n + 63) >> 6


def zeros(shape_rows: int, n: int) -> np.ndarray:
    return np.zeros((shape_rows, words_for(n)), dtype=WORD)


def full_row(n: int) -> np.ndarray:
    """A single row with bits 0..n-1 set and the tail clear."""
    row = np.full(words_for(n), ~np.uint64(0), dtype=WORD)
    tail = n & 63
    if tail:
        row[-1] = np.uint64((1 << tail) - 1)
    return row


def pack_rows(mat: np.ndarray) -> np.ndarray:
    """Pack a 2-D boolean matrix into rows of uint64 words."""
    if mat.ndim != 2:
        raise ValueError("expected a 2-D boolean matrix")
    r, n = mat.shape
    nbytes = words_for(n) * 8
    packed = np.packbits(mat, axis=1, bitorder="little")
    if packed.shape[1] < nbytes:
        pad = np.zeros((r, nbytes - packed.shape[1]), dtype=np.uint8)
        packed = np.hstack([packed, pad])
    return np.ascontiguousarray(packed).view(WORD)


def unpack_rows(rows: np.ndarray, n: int) -> np.ndarray:
    """Inverse of pack_rows; returns an (r, n) boolean matrix."""
    flat = np.ascontiguousarray(rows).view(np.uint8)
    return np.unpackbits(flat, axis=1, bitorder="little")[:, :n].astype(bool)


def from_indices(idx, n: int) -> np.ndarray:
    """Build a single row with the given bit positions set."""
    row = np.zeros(words_for(n), dtype=WORD)
    idx = np.asarray(idx, dtype=np.int64)
    if idx.size:
        np.bitwise_or.at(row, idx >> 6, np.uint64(1) << (idx & 63).astype(np.uint64))
    return row


def to_indices(row: np.ndarray, n: int) -> np.ndarray:
    return np.nonzero(unpack_rows(row[None, :], n)[0])[0]


def popcount_rows(rows: np.ndarray) -> np.ndarray:
    """Per-row number of set bits."""
    return np.bitwise_count(rows).sum(axis=1, dtype=np.int64)


def popcount(row: np.ndarray) -> int:
    return int(np.bitwise_count(row).sum())


def transpose(rows: np.ndarray, n: int, chunk_bits: int = 4096) -> np.ndarray:
    """Bit-transpose of an (n, words) packed matrix, chunked by column window."""
    out = zeros(n, n)
    for a in range(0, n, chunk_bits):
        b = min(n, a + chunk_bits)
        wa, wb = a >> 6, words_for(b)
        window = unpack_rows(rows[:, wa:wb], (wb - wa) * 64)
        off = a - (wa << 6)
        out[a:b] = pack_rows(np.ascontiguousarray(window[:, off : off + (b - a)].T))
    return out


def get_bit(row: np.ndarray, p: int) -> bool:
    return bool((row[p >> 6] >> np.uint64(p & 63)) & np.uint64(1))


def set_bit(row: np.ndarray, p: int) -> None:
    row[p >> 6] |= np.uint64(1) << np.uint64(p & 63)


def clear_bit(row: np.ndarray, p: int) -> None:
    row[p >> 6] &= ~(np.uint64(1) << np.uint64(p & 63))
