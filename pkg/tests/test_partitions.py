from itertools import islice

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kroncoef.partitions import (
    BlockChain,
    PaddedPartition,
    Partition,
    block_chain,
    conjugate,
    content_last,
    dagger,
    is_n_pair,
    n_pair_chain,
    n_pair_predecessor,
    n_pair_successor,
    pad,
    partitions_of,
    partitions_up_to,
)
from oracles import is_n_pair_bruteforce

P = Partition

partition_st = st.lists(st.integers(1, 7), max_size=6).map(
    lambda xs: P(sorted(xs, reverse=True))
)


class TestPartition:
    def test_canonical(self):
        assert P([3, 2, 0, 0]).parts == (3, 2)
        assert P([]).parts == ()
        assert P([1, 1]).size == 2
        assert len(P([4, 1])) == 2

    def test_rejects_bad_sequences(self):
        with pytest.raises(ValueError):
            P([1, 2])
        with pytest.raises(ValueError):
            P([2, -1])

    def test_serialization_roundtrip(self):
        for p in partitions_up_to(6):
            assert Partition.parse(str(p)) == p
        assert str(P()) == "[]"
        assert Partition.parse("[4,1]") == P([4, 1])

    def test_row_access(self):
        lam = P([4, 2, 1])
        assert [lam.row(i) for i in (1, 2, 3, 4)] == [4, 2, 1, 0]
        with pytest.raises(ValueError):
            lam.row(0)


class TestConjugate:
    def test_examples(self):
        assert conjugate(P()) == P()
        assert conjugate(P([2, 1])) == P([2, 1])
        assert conjugate(P([3, 1])) == P([2, 1, 1])

    def test_involution_exhaustive(self):
        for k in range(13):
            for lam in partitions_of(k):
                assert conjugate(conjugate(lam)) == lam


class TestContentLast:
    def test_examples(self):
        assert content_last(P([2, 1]), 1) == 1
        assert content_last(P([4, 1]), 1) == 3
        assert content_last(P([2, 1]), 2) == -1

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            content_last(P([2, 1]), 3)


class TestPad:
    def test_examples(self):
        assert pad(P([1]), 2).rows == (1, 1)
        assert pad(P([1]), 5).rows == (4, 1)
        with pytest.raises(ValueError):
            pad(P([2]), 3)

    def test_total(self):
        for lam in partitions_up_to(5):
            for n in range(1, 14):
                try:
                    padded = pad(lam, n)
                except ValueError:
                    assert n - lam.size < lam.row(1)
                    continue
                assert padded.to_partition().size == n
                assert padded.row(0) == n - lam.size

    @given(partition_st, st.integers(1, 30))
    @settings(max_examples=150, deadline=None)
    def test_roundtrip(self, lam, n):
        try:
            padded = pad(lam, n)
        except ValueError:
            return
        assert Partition(padded.rows[1:]) == lam


class TestNPairs:
    def test_examples(self):
        assert is_n_pair(P([2, 1]), P([4, 1]), 6)
        assert not is_n_pair(P([2, 1]), P([2, 1]), 6)
        assert not is_n_pair(P([2, 1]), P([3, 2]), 6)

    def test_against_bruteforce(self):
        for mu in partitions_up_to(5):
            for lam in partitions_up_to(6):
                for n in range(1, 9):
                    assert is_n_pair(mu, lam, n) == is_n_pair_bruteforce(mu, lam, n)

    def test_successor_predecessor_inverse(self):
        for nu in partitions_up_to(6):
            for n in range(1, 12):
                nxt = n_pair_successor(nu, n)
                if nxt is not None:
                    assert is_n_pair(nu, nxt, n)
                    assert n_pair_predecessor(nxt, n) == nu
                prev = n_pair_predecessor(nu, n)
                if prev is not None:
                    assert is_n_pair(prev, nu, n)
                    assert n_pair_successor(prev, n) == nu

    def test_first_step_size(self):
        # the first strip ends at content n - |nu|, so |nu^(1)| = n + 1 - nu_1
        for nu in partitions_up_to(6):
            for n in range(1, 14):
                try:
                    pad(nu, n)
                except ValueError:
                    continue
                nxt = n_pair_successor(nu, n)
                assert nxt is not None and nxt.size == n + 1 - nu.row(1)


class TestBlockChain:
    def test_degree_two_chains(self):
        assert [p.parts for p in block_chain(P([1]), 2, 2)] == [(1,), (2,)]
        assert [p.parts for p in block_chain(P([1, 1]), 2, 2)] == [(1, 1)]

    def test_long_chain_entries(self):
        chain = block_chain(P([10, 10]), 30, 40)
        assert chain.chain[9] == P([11, 11, 11, 1, 1, 1, 1, 1, 1])
        assert chain.chain[10] == P([11, 11, 11, 1, 1, 1, 1, 1, 1, 1])
        assert len(chain) == 11

    def test_sizes_strictly_increase(self):
        for nu in partitions_up_to(5):
            for n in range(1, 10):
                chain = block_chain(nu, n, 8)
                sizes = [p.size for p in chain]
                assert sizes == sorted(set(sizes))

    def test_singleton_iff_bound(self):
        for nu in partitions_up_to(5):
            for n in range(1, 12):
                try:
                    pad(nu, n)
                except ValueError:
                    continue
                for r in range(nu.size, 11):
                    assert (len(block_chain(nu, n, r)) == 1) == (n + 1 - nu.row(1) > r)

    def test_strip_in_row_i(self):
        # counting from the minimal element, step i adds boxes in row i only
        for nu in partitions_up_to(5):
            for n in range(1, 12):
                try:
                    pad(nu, n)
                except ValueError:
                    continue
                chain = list(islice(n_pair_chain(nu, n), 8))
                for i in range(1, len(chain)):
                    prev, cur = chain[i - 1], chain[i]
                    changed = [
                        j
                        for j in range(1, len(cur) + 1)
                        if cur.row(j) != prev.row(j)
                    ]
                    assert changed == [i]

    def test_truncate(self):
        chain = block_chain(P([10, 10]), 30, 40)
        assert chain.truncation_index(38) == 8
        assert len(chain.truncate(38)) == 9

    def test_invalid_chain_rejected(self):
        with pytest.raises(ValueError):
            BlockChain(2, 2, (P([1]), P([1, 1])))


class TestDagger:
    def test_examples(self):
        assert dagger(pad(P([1, 1]), 4), 0) == P([1, 1])
        d8 = dagger(pad(P([10, 10]), 30), 8)
        assert d8 == P([11, 11, 11, 1, 1, 1, 1, 1])
        assert d8.size == 38

    def test_matches_chain_exhaustive(self):
        for nu in partitions_up_to(6):
            for n in range(1, 17):
                try:
                    padded = pad(nu, n)
                except ValueError:
                    continue
                for i, entry in enumerate(islice(n_pair_chain(nu, n), 11)):
                    assert dagger(padded, i) == entry

    @given(partition_st, st.integers(1, 25), st.integers(0, 12))
    @settings(max_examples=150, deadline=None)
    def test_always_a_partition(self, nu, n, i):
        try:
            padded = pad(nu, n)
        except ValueError:
            return
        out = dagger(padded, i)
        assert isinstance(out, Partition)


class TestEnumeration:
    def test_counts(self):
        # p(0..10) = 1,1,2,3,5,7,11,15,22,30,42
        expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
        assert [len(partitions_of(k)) for k in range(11)] == expected
        assert len(partitions_up_to(4)) == 12

    def test_sorted_and_unique(self):
        ps = partitions_up_to(6)
        assert len(set(ps)) == len(ps)
        assert list(ps) == sorted(ps)
