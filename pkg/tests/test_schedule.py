"""Swap schedule generation, counting laws, application, serialization."""

import numpy as np
import pytest

from bitrev.schedule import (
    SCHEDULE_MAX_BITS,
    SwapSchedule,
    apply_schedule,
    cached_schedule,
    generate_swap_schedule,
    load_schedule,
    save_schedule,
    swap_count,
)
from bitrev.verify import oracle_permute


def rev_string(i: int, b: int) -> int:
    return int(format(i, f"0{b}b")[::-1], 2)


def brute_pairs(b: int) -> list[tuple[int, int]]:
    """Oracle: enumerate every index, keep those below their reversal."""
    out = []
    for i in range(1 << b):
        r = rev_string(i, b)
        if i < r:
            out.append((i, r))
    return out


class TestSwapCount:
    def test_base_cases(self):
        assert swap_count(1) == 0
        assert swap_count(2) == 1

    def test_small_value(self):
        # 2**2 + 2*r(2) = 6, and brute force finds the same six pairs
        assert swap_count(4) == 6
        assert len(brute_pairs(4)) == 6

    @pytest.mark.parametrize("b", range(1, 21))
    def test_closed_form(self, b):
        assert swap_count(b) == ((1 << b) - (1 << ((b + 1) // 2))) // 2

    @pytest.mark.parametrize("b", range(3, 21))
    def test_recurrence(self, b):
        assert swap_count(b) == (1 << (b - 2)) + 2 * swap_count(b - 2)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            swap_count(0)


class TestGeneration:
    def test_width_one_is_empty(self):
        assert len(generate_swap_schedule(1)) == 0

    def test_width_two(self):
        assert generate_swap_schedule(2).pairs.tolist() == [[1, 2]]

    def test_small_counts(self):
        assert len(generate_swap_schedule(3)) == 2
        assert len(generate_swap_schedule(4)) == 6

    def test_golden_emission_order(self):
        # Hand-derived from the branch rules: depth first, 0-prefix branch
        # first, middle values ascending within each emitting branch.
        assert generate_swap_schedule(3).pairs.tolist() == [[1, 4], [3, 6]]
        assert generate_swap_schedule(4).pairs.tolist() == [
            [2, 4], [1, 8], [3, 12], [5, 10], [7, 14], [11, 13],
        ]

    @pytest.mark.parametrize("b", range(1, 17))
    def test_matches_brute_force_enumeration(self, b):
        schedule = generate_swap_schedule(b)
        assert sorted(map(tuple, schedule.pairs.tolist())) == brute_pairs(b)

    @pytest.mark.parametrize("b", [3, 7, 12, 16])
    def test_pair_structure(self, b):
        schedule = generate_swap_schedule(b)
        lo, hi = schedule.pairs[:, 0], schedule.pairs[:, 1]
        assert (lo < hi).all()
        touched = np.concatenate([lo, hi])
        assert len(np.unique(touched)) == len(touched)  # no index twice
        for i, r in schedule.pairs[:: max(1, len(schedule) // 64)]:
            assert rev_string(int(i), b) == int(r)

    def test_counting_law_against_generator(self):
        for b in range(1, 17):
            assert swap_count(b) == len(generate_swap_schedule(b))

    def test_rejects_above_cap(self):
        with pytest.raises(ValueError):
            generate_swap_schedule(SCHEDULE_MAX_BITS + 1)
        with pytest.raises(ValueError):
            generate_swap_schedule(0)

    def test_cached_schedule_is_shared(self):
        assert cached_schedule(10) is cached_schedule(10)


class TestApply:
    def test_canonical_vector(self):
        a = np.arange(8, dtype=np.int64)
        apply_schedule(a, generate_swap_schedule(3))
        assert a.tolist() == [0, 4, 2, 6, 1, 5, 3, 7]

    def test_width_one_unchanged(self):
        a = np.array([5.0, 7.0])
        apply_schedule(a, generate_swap_schedule(1))
        assert a.tolist() == [5.0, 7.0]

    def test_matches_oracle(self):
        rng = np.random.default_rng(3)
        a = rng.standard_normal(1 << 12)
        expected = oracle_permute(a, 12)
        apply_schedule(a, generate_swap_schedule(12))
        assert np.array_equal(a, expected)

    def test_double_application_is_identity(self):
        rng = np.random.default_rng(4)
        a = rng.standard_normal(1 << 11)
        before = a.copy()
        schedule = generate_swap_schedule(11)
        apply_schedule(a, schedule)
        apply_schedule(a, schedule)
        assert np.array_equal(a, before)

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError):
            apply_schedule(np.zeros(8), generate_swap_schedule(4))


class TestSerialization:
    @pytest.mark.parametrize("b", [1, 5, 10])
    def test_round_trip(self, tmp_path, b):
        schedule = generate_swap_schedule(b)
        path = tmp_path / f"sched{b}.bin"
        save_schedule(schedule, path)
        loaded = load_schedule(path)
        assert loaded.b == b
        assert np.array_equal(loaded.pairs, schedule.pairs)

    def test_file_layout(self, tmp_path):
        schedule = generate_swap_schedule(4)
        path = tmp_path / "s.bin"
        save_schedule(schedule, path)
        raw = path.read_bytes()
        assert raw[:8] == b"BRSCHD01"
        assert raw[8] == 4
        assert len(raw) == 9 + 16 * 6

    def test_bad_magic_rejected(self, tmp_path):
        path = tmp_path / "junk.bin"
        path.write_bytes(b"NOTMAGIC" + bytes([3]))
        with pytest.raises(ValueError, match="magic"):
            load_schedule(path)

    def test_truncated_stream_rejected(self, tmp_path):
        schedule = generate_swap_schedule(4)
        path = tmp_path / "cut.bin"
        save_schedule(schedule, path)
        path.write_bytes(path.read_bytes()[:-16])
        with pytest.raises(ValueError, match="expected"):
            load_schedule(path)


def test_schedule_shape_validated():
    with pytest.raises(ValueError):
        SwapSchedule(3, np.zeros(4, dtype=np.int64))
