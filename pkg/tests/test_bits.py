import numpy as np

from orbitalg import bits


def test_pack_unpack_round_trip():
    rng = np.random.default_rng(11)
    for n in (1, 7, 63, 64, 65, 127, 128, 200, 515):
        mat = rng.random((5, n)) < 0.3
        packed = bits.pack_rows(mat)
        assert packed.shape == (5, bits.words_for(n))
        assert np.array_equal(bits.unpack_rows(packed, n), mat)
        assert np.array_equal(bits.popcount_rows(packed), mat.sum(axis=1))


def test_indices_round_trip():
    row = bits.from_indices([0, 5, 63, 64, 100], 130)
    assert list(bits.to_indices(row, 130)) == [0, 5, 63, 64, 100]
    assert bits.popcount(row) == 5
    assert bits.get_bit(row, 64) and not bits.get_bit(row, 65)


def test_set_clear_bit():
    row = bits.zeros(1, 70)[0]
    bits.set_bit(row, 69)
    assert bits.get_bit(row, 69)
    bits.clear_bit(row, 69)
    assert bits.popcount(row) == 0


def test_full_row():
    for n in (1, 63, 64, 65, 200):
        row = bits.full_row(n)
        assert bits.popcount(row) == n
        assert list(bits.to_indices(row, n)) == list(range(n))


def test_transpose():
    rng = np.random.default_rng(12)
    for n in (1, 5, 64, 65, 130, 300):
        mat = rng.random((n, n)) < 0.25
        packed = bits.pack_rows(mat)
        t = bits.transpose(packed, n)
        assert np.array_equal(bits.unpack_rows(t, n), mat.T)
    # chunk boundary behaviour
    mat = rng.random((100, 100)) < 0.5
    packed = bits.pack_rows(mat)
    assert np.array_equal(bits.transpose(packed, 100, chunk_bits=17), bits.transpose(packed, 100))
