"""The six loop-based methods against the oracle and each other."""

import numpy as np
import pytest

from bitrev.permutations import (
    CobraConfig,
    bytetable_permute,
    cobra_in_place,
    cobra_out_of_place,
    default_cobra_q,
    naive_bitwise_permute,
    pair_bitwise_permute,
    stockham_permute,
    xor_permute,
)
from bitrev.verify import oracle_permute

CANONICAL = [0, 4, 2, 6, 1, 5, 3, 7]

IN_PLACE_METHODS = [
    stockham_permute,
    naive_bitwise_permute,
    bytetable_permute,
    xor_permute,
    pair_bitwise_permute,
]


def random_ints(b, seed):
    return np.random.default_rng(seed).permutation(1 << b).astype(np.int64)


@pytest.mark.parametrize("method", IN_PLACE_METHODS)
def test_canonical_vector(method):
    a = np.arange(8, dtype=np.int64)
    method(a, 3)
    assert a.tolist() == CANONICAL


def test_cobra_canonical_vector():
    src = np.arange(8, dtype=np.int64)
    dest = np.empty_like(src)
    cobra_out_of_place(src, dest, CobraConfig(1), 3)
    assert dest.tolist() == CANONICAL
    a = np.arange(8, dtype=np.int64)
    cobra_in_place(a, CobraConfig(1), 3)
    assert a.tolist() == CANONICAL


@pytest.mark.parametrize(
    "method,b",
    [
        (stockham_permute, 13),
        (naive_bitwise_permute, 15),
        (bytetable_permute, 15),
        (pair_bitwise_permute, 17),
    ],
)
def test_matches_oracle(method, b):
    a = random_ints(b, b)
    expected = oracle_permute(a, b)
    method(a, b)
    assert np.array_equal(a, expected)


@pytest.mark.parametrize("b", range(2, 19))
def test_xor_matches_oracle_all_widths(b):
    a = random_ints(b, 100 + b)
    expected = oracle_permute(a, b)
    xor_permute(a, b)
    assert np.array_equal(a, expected)


def test_xor_constant_array_unchanged():
    a = np.full(16, 3.25)
    xor_permute(a, 4)
    assert (a == 3.25).all()


@pytest.mark.parametrize("method", [naive_bitwise_permute, xor_permute])
def test_two_element_array_unchanged(method):
    a = np.array([9.0, -1.0])
    method(a, 1)
    assert a.tolist() == [9.0, -1.0]


def test_pair_bitwise_single_pass_width_two():
    a = np.arange(4, dtype=np.int64)
    pair_bitwise_permute(a, 2)
    assert a.tolist() == [0, 2, 1, 3]


@pytest.mark.parametrize("method", IN_PLACE_METHODS)
@pytest.mark.parametrize("b", [1, 6, 11])
def test_involution(method, b):
    a = random_ints(b, 5)
    before = a.copy()
    method(a, b)
    method(a, b)
    assert np.array_equal(a, before)


@pytest.mark.parametrize("method", IN_PLACE_METHODS)
def test_length_mismatch_rejected(method):
    with pytest.raises(ValueError):
        method(np.zeros(7), 3)


def test_stockham_scratch_too_small():
    with pytest.raises(ValueError, match="scratch"):
        stockham_permute(np.zeros(8), 3, scratch=np.zeros(4))


def test_methods_work_on_complex_elements():
    rng = np.random.default_rng(0)
    a = rng.standard_normal(1 << 10) + 1j * rng.standard_normal(1 << 10)
    expected = oracle_permute(a, 10)
    got = a.copy()
    xor_permute(got, 10)
    assert np.array_equal(got, expected)
    got = a.copy()
    stockham_permute(got, 10)
    assert np.array_equal(got, expected)


class TestCobra:
    @pytest.mark.parametrize("b,q", [(4, 1), (4, 2), (3, 0), (10, 3), (12, 6)])
    def test_out_of_place_matches_oracle(self, b, q):
        src = random_ints(b, q + 50)
        dest = np.empty_like(src)
        cobra_out_of_place(src, dest, CobraConfig(q), b)
        assert np.array_equal(dest, oracle_permute(src, b))

    def test_source_untouched_dest_ignored(self):
        src = random_ints(8, 1)
        src_before = src.copy()
        dest = np.full(256, -123, dtype=np.int64)  # junk that must be overwritten
        cobra_out_of_place(src, dest, CobraConfig(2), 8)
        assert np.array_equal(src, src_before)
        assert np.array_equal(dest, oracle_permute(src, 8))

    def test_overlap_rejected(self):
        a = np.zeros(16)
        with pytest.raises(ValueError, match="overlap"):
            cobra_out_of_place(a, a[:16], CobraConfig(1), 4)

    def test_q_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            cobra_out_of_place(np.zeros(8), np.zeros(8), CobraConfig(2), 3)
        with pytest.raises(ValueError):
            cobra_in_place(np.zeros(8), CobraConfig(2), 3)
        with pytest.raises(ValueError):
            CobraConfig(-1)

    @pytest.mark.parametrize("b,q", [(4, 1), (2, 1), (6, 0), (6, 1), (6, 2), (6, 3), (13, 4)])
    def test_in_place_matches_oracle(self, b, q):
        a = random_ints(b, q + 90)
        expected = oracle_permute(a, b)
        cobra_in_place(a, CobraConfig(q), b)
        assert np.array_equal(a, expected)

    def test_in_place_width_two(self):
        a = np.arange(4, dtype=np.int64)
        cobra_in_place(a, CobraConfig(1), 2)
        assert a.tolist() == [0, 2, 1, 3]

    def test_in_place_involution(self):
        a = random_ints(9, 2)
        before = a.copy()
        cfg = CobraConfig(3)
        cobra_in_place(a, cfg, 9)
        cobra_in_place(a, cfg, 9)
        assert np.array_equal(a, before)

    def test_default_q(self):
        assert default_cobra_q(3) == 1
        assert default_cobra_q(12) == 6
        assert default_cobra_q(24) == 6  # buffer capped at 4096 elements

    def test_buffer_reuse(self):
        cfg = CobraConfig(2)
        buf = cfg.buffer_for(np.dtype(np.float64))
        assert buf.shape[0] == 16
        assert cfg.buffer_for(np.dtype(np.float64)) is buf
        assert cfg.buffer_for(np.dtype(np.complex128)) is not buf
