"""Residue arithmetic, k-subsets, weak separation, index normalization."""

from itertools import combinations, permutations, product

import pytest

from plabic.combinat import (
    KSubset,
    block_decomposition,
    complement,
    crossing_witness,
    is_interval,
    normalize_index,
    weakly_separated,
)
from plabic.errors import DegenerateInputError, InvalidInputError

from conftest import ks


def all_ksubsets(k, n):
    return [KSubset(n, e) for e in combinations(range(1, n + 1), k)]


class TestNormalizeIndex:
    def test_one_transposition(self):
        sign, canon = normalize_index((2, 1, 3), 7)
        assert sign == -1 and canon == ks(7, 1, 2, 3)

    def test_repeat_gives_zero(self):
        sign, canon = normalize_index((1, 1, 3), 7)
        assert sign == 0 and canon is None

    def test_three_cycle_is_even(self):
        sign, canon = normalize_index((3, 1, 2), 7)
        assert sign == 1 and canon == ks(7, 1, 2, 3)

    def test_out_of_range_rejected(self):
        with pytest.raises(InvalidInputError):
            normalize_index((0, 2), 5)
        with pytest.raises(InvalidInputError):
            normalize_index((1, 6), 5)
        with pytest.raises(InvalidInputError):
            normalize_index((), 5)

    @pytest.mark.parametrize("n", [4, 7])
    def test_sign_is_multiplicative_exhaustively(self, n):
        def parity(sigma):
            inv = sum(
                1
                for i in range(len(sigma))
                for j in range(i + 1, len(sigma))
                if sigma[i] > sigma[j]
            )
            return -1 if inv % 2 else 1

        for k in range(1, 5):
            for tup in product(range(1, n + 1), repeat=k):
                base = normalize_index(tup, n).sign
                for sigma in permutations(range(k)):
                    permuted = tuple(tup[s] for s in sigma)
                    assert normalize_index(permuted, n).sign == parity(sigma) * base


class TestIntervalsAndBlocks:
    def test_consecutive_run(self):
        assert is_interval(ks(9, 5, 6, 7))

    def test_wraparound_run(self):
        assert is_interval(ks(9, 9, 1, 2, 3))

    def test_gapped_subset(self):
        assert not is_interval(ks(7, 1, 2, 6))

    def test_blocks_wraparound(self):
        assert block_decomposition(ks(9, 9, 1, 2, 7)) == ((9, 1, 2), (7,))

    def test_blocks_plain(self):
        assert block_decomposition(ks(9, 1, 2, 3, 7)) == ((1, 2, 3), (7,))

    def test_three_runs_give_none(self):
        assert block_decomposition(ks(6, 1, 3, 5)) is None

    def test_interval_is_degenerate(self):
        with pytest.raises(DegenerateInputError):
            block_decomposition(ks(9, 5, 6, 7))

    def test_block_structure_exhaustive(self):
        for n in (5, 6, 7):
            for k in range(2, n):
                for s in all_ksubsets(k, n):
                    if is_interval(s):
                        continue
                    blocks = block_decomposition(s)
                    if blocks is None:
                        assert len(s.runs()) > 2
                        continue
                    b1, b2 = blocks
                    assert b1 and b2
                    assert sorted(b1 + b2) == list(s.elems)
                    assert len(b1) + len(b2) == k
                    assert min(s.elems) in b1


class TestWeakSeparation:
    def test_forced_crossing(self):
        assert not weakly_separated(ks(4, 1, 3), ks(4, 2, 4))
        assert crossing_witness(ks(4, 1, 3), ks(4, 2, 4)) == (1, 2, 3, 4)

    def test_example_pair(self):
        assert weakly_separated(ks(7, 1, 2, 6), ks(7, 2, 3, 5))

    def test_reflexive(self):
        assert weakly_separated(ks(7, 1, 2, 6), ks(7, 1, 2, 6))

    def test_mismatch_rejected(self):
        with pytest.raises(InvalidInputError):
            weakly_separated(ks(7, 1, 2), ks(8, 1, 2))
        with pytest.raises(InvalidInputError):
            weakly_separated(ks(7, 1, 2), ks(7, 1, 2, 3))

    @pytest.mark.parametrize("k", [2, 3])
    def test_symmetric_and_reflexive_exhaustive(self, k):
        for n in range(k + 2, 9):
            subsets = all_ksubsets(k, n)
            for a in subsets:
                assert weakly_separated(a, a)
            for a, b in combinations(subsets, 2):
                assert weakly_separated(a, b) == weakly_separated(b, a)

    def test_complement_preserves_separation_37(self):
        subsets = all_ksubsets(3, 7)
        for a, b in combinations(subsets, 2):
            assert weakly_separated(a, b) == weakly_separated(
                complement(a), complement(b)
            )


class TestComplement:
    def test_plain(self):
        assert complement(ks(5, 1, 2, 3)) == ks(5, 4, 5)

    def test_wraparound(self):
        assert complement(ks(9, 9, 1, 2, 7)) == ks(9, 3, 4, 5, 6, 8)

    def test_involution(self):
        s = ks(7, 2, 5, 6)
        assert complement(complement(s)) == s


class TestKSubset:
    def test_rejects_bad_input(self):
        with pytest.raises(InvalidInputError):
            KSubset(5, (1, 1, 2))
        with pytest.raises(InvalidInputError):
            KSubset(5, (0, 2))
        with pytest.raises(InvalidInputError):
            KSubset(5, (1, 2, 3, 4, 5))

    def test_labels(self):
        assert ks(9, 9, 1, 2, 7).label() == "912,7"
        assert ks(9, 1, 2, 3, 7).label() == "123,7"
        assert ks(9, 7, 8, 9, 1).label() == "7891"
        assert ks(5, 1, 4).label() == "1,4"
