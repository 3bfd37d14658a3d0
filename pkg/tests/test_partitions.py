"""Partition, hook and core arithmetic: frozen examples and invariants."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ppcd.partitions import (
    PAdicExpansion,
    Partition,
    conjugate,
    divisible_hooks,
    e_core,
    e_core_by_removal,
    enumerate_hooks,
    enumerate_partitions,
    hook_length,
    hook_multiset,
    hook_partition,
    is_prime,
    is_self_conjugate,
    p_adic_expansion,
)


@st.composite
def partitions(draw, max_n=40):
    n = draw(st.integers(min_value=0, max_value=max_n))
    parts = []
    rest, cap = n, n
    while rest:
        x = draw(st.integers(min_value=1, max_value=min(cap, rest)))
        parts.append(x)
        cap = x
        rest -= x
    return Partition(parts)


class TestPartitionType:
    def test_valid_construction(self):
        lam = Partition([4, 1])
        assert lam.parts == (4, 1)
        assert lam.n == 5
        assert len(lam) == 2
        assert list(lam) == [4, 1]
        assert lam[0] == 4

    def test_empty_is_partition_of_zero(self):
        assert Partition().n == 0
        assert Partition().parts == ()

    @pytest.mark.parametrize("bad", [[1, 2], [0], [-3], [2.5], [3, 0]])
    def test_rejects_invalid_parts(self, bad):
        with pytest.raises(ValueError):
            Partition(bad)

    def test_string_round_trip(self):
        assert Partition.from_string("4,1") == Partition([4, 1])
        assert Partition.from_string("") == Partition()
        assert Partition.from_string("0") == Partition()
        assert str(Partition([3, 1, 1])) == "3,1,1"

    def test_ordering_matches_enumeration(self):
        listed = list(enumerate_partitions(6))
        assert listed == sorted(listed, reverse=True)

    def test_hashable(self):
        assert len({Partition([2, 1]), Partition([2, 1]), Partition([3])}) == 2


class TestConjugate:
    def test_examples(self):
        assert conjugate(Partition([5])) == Partition([1] * 5)
        assert conjugate(Partition()) == Partition()
        assert conjugate(Partition([4, 1])) == Partition([2, 1, 1, 1])

    @given(partitions())
    @settings(max_examples=150)
    def test_involution_and_hook_invariance(self, lam):
        assert conjugate(conjugate(lam)) == lam
        assert hook_multiset(lam) == hook_multiset(conjugate(lam))

    def test_exhaustive_involution_small(self):
        for n in range(13):
            for lam in enumerate_partitions(n):
                assert conjugate(conjugate(lam)) == lam

    def test_self_conjugate(self):
        assert is_self_conjugate(Partition([3, 1, 1]))
        assert is_self_conjugate(Partition([3, 2, 1]))
        assert not is_self_conjugate(Partition([4, 1]))


class TestHooks:
    def test_hook_length_examples(self):
        assert hook_length(Partition([9]), 1, 1) == 9
        assert hook_length(Partition([2, 1]), 1, 1) == 3
        assert hook_length(Partition([4, 1]), 1, 1) == 5

    def test_hook_length_outside_diagram(self):
        with pytest.raises(ValueError):
            hook_length(Partition([2, 1]), 2, 2)
        with pytest.raises(ValueError):
            hook_length(Partition([2, 1]), 0, 1)

    def test_hook_multiset_examples(self):
        assert hook_multiset(Partition([6])) == (6, 5, 4, 3, 2, 1)
        assert hook_multiset(Partition([2, 1])) == (3, 1, 1)
        assert hook_multiset(Partition([4, 1])) == (5, 3, 2, 1, 1)

    @given(partitions())
    @settings(max_examples=150)
    def test_hook_count_is_size(self, lam):
        assert len(hook_multiset(lam)) == lam.n

    def test_divisible_hooks_examples(self):
        assert divisible_hooks(Partition([4, 1]), 5) == (5,)
        assert divisible_hooks(Partition([2, 1]), 2) == ()
        assert divisible_hooks(Partition([7]), 7) == (7,)

    def test_divisible_hooks_bad_modulus(self):
        with pytest.raises(ValueError):
            divisible_hooks(Partition([2, 1]), 1)


class TestECore:
    def test_examples(self):
        assert e_core(Partition([4, 1]), 5) == Partition()
        assert e_core(Partition([2, 1]), 2) == Partition([2, 1])
        assert e_core(Partition([7]), 8) == Partition([7])

    def test_size_drop_matches_divisible_hooks(self):
        for n in range(1, 15):
            for lam in enumerate_partitions(n):
                for e in (2, 3, 5):
                    core = e_core(lam, e)
                    assert lam.n - core.n == e * len(divisible_hooks(lam, e))
                    assert divisible_hooks(core, e) == ()

    def test_idempotent(self):
        for n in range(1, 14):
            for lam in enumerate_partitions(n):
                for e in (2, 3, 5, 7):
                    core = e_core(lam, e)
                    assert e_core(core, e) == core

    def test_removal_orders_agree_with_abacus(self):
        for n in range(1, 13):
            for lam in enumerate_partitions(n):
                for e in (2, 3, 5, 7):
                    left = e_core_by_removal(lam, e)
                    right = e_core_by_removal(lam, e, rightmost=True)
                    assert left == right == e_core(lam, e)

    @given(partitions(max_n=25), st.sampled_from([2, 3, 5, 7]))
    @settings(max_examples=120, deadline=None)
    def test_removal_orders_agree_sampled(self, lam, e):
        left = e_core_by_removal(lam, e)
        right = e_core_by_removal(lam, e, rightmost=True)
        assert left == right == e_core(lam, e)


class TestPAdicExpansion:
    def test_examples(self):
        assert p_adic_expansion(7, 5).digits == ((2, 0), (1, 1))
        assert p_adic_expansion(125, 5).digits == ((1, 3),)
        assert p_adic_expansion(0, 7).digits == ()

    def test_round_trip_sweep(self):
        for p in (5, 7, 11, 13):
            for n in range(0, 100_000, 7):
                assert p_adic_expansion(n, p).value() == n

    @given(st.integers(min_value=0, max_value=10**6), st.sampled_from([5, 7, 11, 13]))
    @settings(max_examples=300)
    def test_round_trip_sampled(self, n, p):
        exp = p_adic_expansion(n, p)
        assert exp.value() == n
        assert all(1 <= a <= p - 1 for a, _ in exp.digits)

    def test_rejects_composite_and_small(self):
        for bad in (1, 0, -2, 4, 9, 15):
            with pytest.raises(ValueError):
                p_adic_expansion(10, bad)
        with pytest.raises(ValueError):
            p_adic_expansion(-1, 5)

    def test_expansion_validation(self):
        with pytest.raises(ValueError):
            PAdicExpansion(5, ((5, 0),))
        with pytest.raises(ValueError):
            PAdicExpansion(5, ((1, 2), (1, 1)))

    def test_is_prime(self):
        assert [k for k in range(2, 30) if is_prime(k)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


class TestEnumeration:
    def test_zero(self):
        assert list(enumerate_partitions(0)) == [Partition()]

    def test_three(self):
        assert [lam.parts for lam in enumerate_partitions(3)] == [(3,), (2, 1), (1, 1, 1)]

    def test_counts(self):
        counts = [len(list(enumerate_partitions(n))) for n in range(11)]
        assert counts == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]

    def test_no_duplicates(self):
        seen = list(enumerate_partitions(9))
        assert len(seen) == len(set(seen))

    def test_bound(self):
        with pytest.raises(ValueError):
            list(enumerate_partitions(61))
        assert next(iter(enumerate_partitions(61, bound=61))).parts == (61,)

    def test_hooks(self):
        assert [h.parts for h in enumerate_hooks(1)] == [(1,)]
        assert [h.parts for h in enumerate_hooks(3)] == [(3,), (2, 1), (1, 1, 1)]
        assert len(enumerate_hooks(17)) == 17

    def test_hook_partition_range(self):
        assert hook_partition(5, 4) == Partition([1] * 5)
        with pytest.raises(ValueError):
            hook_partition(5, 5)
