"""Scalar index-reversal primitives against independent oracles."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bitrev.bits import (
    BYTE_TABLE,
    MAX_BITS,
    WORD_BITS,
    RevPair,
    build_byte_table,
    count_leading_zeros,
    rev_bytetable,
    rev_naive,
    xor_next,
)


def rev_string(i: int, b: int) -> int:
    """Oracle: format as a b-char binary string, reverse the text, parse."""
    return int(format(i, f"0{b}b")[::-1], 2)


def clz_scan(x: int) -> int:
    """Oracle: walk down from the top bit until the first set bit."""
    n = 0
    for pos in range(WORD_BITS - 1, -1, -1):
        if x >> pos:
            break
        n += 1
    return n


class TestRevNaive:
    def test_three_bit_sequence(self):
        assert [rev_naive(i, 3) for i in range(8)] == [0, 4, 2, 6, 1, 5, 3, 7]

    def test_single_values(self):
        assert rev_naive(1, 3) == 4
        assert rev_naive(0b0110, 4) == 0b0110

    @pytest.mark.parametrize("b", [1, 5, 17, 33, 48])
    def test_zero_is_fixed(self, b):
        assert rev_naive(0, b) == 0

    def test_against_string_oracle(self):
        rng = np.random.default_rng(42)
        b = 20
        for i in rng.integers(0, 1 << b, 1000):
            i = int(i)
            assert rev_naive(i, b) == rev_string(i, b)

    @given(st.integers(min_value=1, max_value=MAX_BITS), st.data())
    def test_involution(self, b, data):
        i = data.draw(st.integers(min_value=0, max_value=(1 << b) - 1))
        assert rev_naive(rev_naive(i, b), b) == i

    def test_rejects_out_of_range_index(self):
        with pytest.raises(ValueError):
            rev_naive(8, 3)
        with pytest.raises(ValueError):
            rev_naive(-1, 3)

    @pytest.mark.parametrize("b", [0, -2, MAX_BITS + 1])
    def test_rejects_bad_width(self, b):
        with pytest.raises(ValueError):
            rev_naive(0, b)


class TestByteTable:
    def test_spot_values(self):
        assert BYTE_TABLE[0x00] == 0x00
        assert BYTE_TABLE[0x01] == 0x80
        assert BYTE_TABLE[0xFF] == 0xFF

    def test_exhaustive_against_rev_naive(self):
        table = build_byte_table()
        for v in range(256):
            assert table[v] == rev_naive(v, 8)

    def test_table_is_an_involution(self):
        for v in range(256):
            assert BYTE_TABLE[BYTE_TABLE[v]] == v

    def test_table_is_read_only(self):
        with pytest.raises(ValueError):
            BYTE_TABLE[3] = 0


class TestRevBytetable:
    def test_spot_values(self):
        assert rev_bytetable(1, 3) == 4
        assert rev_bytetable(0, 17) == 0

    @pytest.mark.parametrize("b", range(1, 15))
    def test_exhaustive_agreement(self, b):
        for i in range(1 << b):
            assert rev_bytetable(i, b) == rev_naive(i, b)

    @pytest.mark.parametrize("b", [15, 20, 24, 27, 30])
    def test_sampled_agreement(self, b):
        rng = np.random.default_rng(b)
        for i in rng.integers(0, 1 << b, 200):
            i = int(i)
            assert rev_bytetable(i, b) == rev_naive(i, b)

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            rev_bytetable(1 << 10, 10)


class TestCountLeadingZeros:
    def test_edges(self):
        assert count_leading_zeros(1) == WORD_BITS - 1
        assert count_leading_zeros(1 << 63) == 0

    def test_against_scan_oracle(self):
        rng = np.random.default_rng(7)
        exponents = rng.integers(0, 64, 1000)
        offsets = rng.integers(0, 1 << 30, 1000)
        for e, off in zip(exponents, offsets):
            x = (1 << int(e)) | (int(off) & ((1 << int(e)) - 1))
            assert count_leading_zeros(x) == clz_scan(x)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            count_leading_zeros(0)

    def test_oversized_rejected(self):
        with pytest.raises(ValueError):
            count_leading_zeros(1 << 64)


class TestXorNext:
    def test_first_step(self):
        assert xor_next(RevPair(0, 0), 3) == RevPair(1, 4)

    def test_mid_step(self):
        # rev(4, 3) = 1, derived with rev_naive
        assert xor_next(RevPair(3, 6), 3) == RevPair(4, 1)

    @pytest.mark.parametrize("b", range(1, 17))
    def test_full_sweep_matches_rev_naive(self, b):
        state = RevPair(0, 0)
        seen = [0]
        for i in range(1, 1 << b):
            state = xor_next(state, b)
            assert state.index == i
            assert state.reversed == rev_naive(i, b)
            seen.append(state.reversed)
        assert sorted(seen) == list(range(1 << b))

    def test_cannot_advance_last_index(self):
        with pytest.raises(ValueError):
            xor_next(RevPair(7, 7), 3)

    def test_inconsistent_pair_detected(self):
        with pytest.raises(AssertionError):
            xor_next(RevPair(2, 3), 3)

    @given(st.integers(min_value=2, max_value=MAX_BITS), st.data())
    @settings(max_examples=200)
    def test_xor_difference_shape(self, b, data):
        i = data.draw(st.integers(min_value=0, max_value=(1 << b) - 2))
        d = i ^ (i + 1)
        assert (d & (d + 1)) == 0  # 0...01...1: adding one gives a power of two
