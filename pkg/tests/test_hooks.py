"""p'-hook sets, quasihook families, and the A_n degree-set bound."""

import pytest

from ppcd.degrees import degree, is_pprime_macdonald, is_pprime_oracle
from ppcd.hooks import (
    DEFAULT_SCAN_BOUND,
    SCAN_BOUND_ENV,
    count_pprime_hooks_formula,
    ext_pprime_degree_set,
    halved_count_lower_bound,
    layered_pprime_hooks,
    list_pprime_hooks,
    pprime_hook_xs,
    pprime_partitions_small,
    quasihook,
    quasihook_monotone,
    scan_bound,
    scan_ext_degree_sets,
    verify_An_bound,
    verify_hook_counts,
)
from ppcd.partitions import Partition, conjugate, enumerate_partitions, is_self_conjugate

PRIMES = (5, 7, 11, 13)


class TestHookFilter:
    def test_examples(self):
        assert pprime_hook_xs(6, 5) == [0, 5]
        assert pprime_hook_xs(7, 5) == [0, 1, 5, 6]
        assert pprime_hook_xs(25, 5) == list(range(25))

    def test_filter_is_the_binomial_condition(self):
        from math import comb

        for n in range(1, 70):
            for p in (5, 7):
                expected = [x for x in range(n) if comb(n - 1, x) % p]
                assert pprime_hook_xs(n, p) == expected

    def test_list_matches_xs(self):
        hooks = list_pprime_hooks(7, 5)
        assert [lam.parts for lam in hooks] == [
            (7,),
            (6, 1),
            (2, 1, 1, 1, 1, 1),
            (1, 1, 1, 1, 1, 1, 1),
        ]

    def test_oracle_agreement(self):
        for n in range(1, 40):
            for p in PRIMES:
                chosen = {lam.parts for lam in list_pprime_hooks(n, p)}
                for x in range(n):
                    lam = Partition([n - x] + [1] * x)
                    assert (lam.parts in chosen) == is_pprime_oracle(lam, p)

    def test_conjugation_closed_and_selfconjugate_parity(self):
        for n in range(1, 201):
            for p in PRIMES:
                xs = pprime_hook_xs(n, p)
                assert sorted(n - 1 - x for x in xs) == xs
                count = len(xs)
                has_selfconj = n % 2 == 1 and (n - 1) // 2 in xs
                assert has_selfconj == (count % 2 == 1)


class TestCountFormula:
    def test_examples(self):
        assert count_pprime_hooks_formula(7, 5) == 4
        assert count_pprime_hooks_formula(6, 5) == 2
        for k in (1, 2, 3):
            assert count_pprime_hooks_formula(5**k, 5) == 5**k

    def test_three_way_agreement_small(self):
        for row in verify_hook_counts(300, PRIMES):
            assert row["ok"], row

    def test_layered_examples(self):
        assert [lam.parts for lam in layered_pprime_hooks(6, 5)] == [(6,), (1,) * 6]
        assert len(layered_pprime_hooks(5, 5)) == 5
        assert layered_pprime_hooks(7, 5) == list_pprime_hooks(7, 5)

    def test_layered_members_are_pprime(self):
        for n in (7, 26, 31, 50, 99):
            for p in (5, 7):
                for lam in layered_pprime_hooks(n, p):
                    assert is_pprime_macdonald(lam, p)

    def test_halved_bound(self):
        assert halved_count_lower_bound(7, 5) == 2
        assert halved_count_lower_bound(6, 5) == 1
        assert halved_count_lower_bound(25, 5) == 12


class TestQuasihooks:
    def test_construction(self):
        assert quasihook(13, 2, 0) == Partition([11, 2])
        assert quasihook(8, 3, 1) == Partition([4, 3, 1])
        assert quasihook(10, 2, 6) == Partition([2, 2, 1, 1, 1, 1, 1, 1])

    def test_rejects_other_second_rows(self):
        with pytest.raises(ValueError):
            quasihook(13, 5, 2)
        with pytest.raises(ValueError):
            quasihook(13, 1, 0)

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            quasihook(5, 2, 0)
        with pytest.raises(ValueError):
            quasihook(10, 2, 7)

    def test_monotone_examples(self):
        assert quasihook_monotone(13, 2, 0) is True
        assert quasihook_monotone(12, 3, 1) is True

    def test_monotone_range_enforced(self):
        with pytest.raises(ValueError):
            quasihook_monotone(13, 2, 4)

    def test_monotone_over_full_range(self):
        for n in range(6, 81):
            for c in (2, 3):
                if n < 4 + c:
                    continue
                for t in range(0, (n - 4 - c) // 2 + 1):
                    assert quasihook_monotone(n, c, t)

    def test_wider_second_row_breaks_monotonicity(self):
        # the same construction with second row 5 fails: leg growth from
        # t = 2 to t = 3 at n = 13 strictly lowers the degree
        earlier = degree(Partition([6, 5, 1, 1]))
        later = degree(Partition([5, 5, 1, 1, 1]))
        assert earlier == 5720 and later == 5005
        assert not earlier < later


class TestSmallPartitionList:
    def test_example_m6(self):
        got = {lam.parts for lam in pprime_partitions_small(6, 5)}
        assert got == {(6,), (4, 2), (3, 2, 1), (2, 2, 1, 1), (1,) * 6}

    @pytest.mark.parametrize("m,p", [(6, 5), (8, 7), (26, 5), (50, 7)])
    def test_matches_full_scan(self, m, p):
        listed = sorted(pprime_partitions_small(m, p), reverse=True)
        scanned = [lam for lam in enumerate_partitions(m) if is_pprime_macdonald(lam, p)]
        assert listed == scanned

    def test_m26_shape(self):
        listed = pprime_partitions_small(26, 5)
        assert len(listed) == 25  # t = 1..23 plus row and column

    def test_rejects_other_shapes(self):
        with pytest.raises(ValueError):
            pprime_partitions_small(7, 5)
        with pytest.raises(ValueError):
            pprime_partitions_small(6, 7)


class TestExtDegreeSet:
    def test_examples(self):
        assert ext_pprime_degree_set(5, 5) == {1, 4}
        seven = ext_pprime_degree_set(7, 5)
        assert 1 in seven and len(seven) >= 3
        eight = ext_pprime_degree_set(8, 7)
        assert 1 in eight and len(eight) >= 3

    def test_exact_mode_is_full_scan(self):
        for n in (6, 9, 12):
            for p in (5, 7):
                expected = set()
                for lam in enumerate_partitions(n):
                    if not is_self_conjugate(lam) and is_pprime_oracle(lam, p):
                        expected.add(degree(lam))
                assert ext_pprime_degree_set(n, p) == expected

    def test_constructive_mode_is_certified_subset(self):
        for n in (18, 25, 31):
            for p in (5, 7):
                exact = ext_pprime_degree_set(n, p, bound=40)
                constructive = ext_pprime_degree_set(n, p, bound=10)
                assert constructive <= exact
                assert len(constructive) >= 3

    def test_batched_scan_matches_single(self):
        sets = scan_ext_degree_sets(12, PRIMES)
        for p in PRIMES:
            assert sets[p] == ext_pprime_degree_set(12, p)

    def test_scan_bound_env_override(self, monkeypatch):
        monkeypatch.delenv(SCAN_BOUND_ENV, raising=False)
        assert scan_bound() == DEFAULT_SCAN_BOUND
        monkeypatch.setenv(SCAN_BOUND_ENV, "12")
        assert scan_bound() == 12
        monkeypatch.setenv(SCAN_BOUND_ENV, "junk")
        with pytest.raises(ValueError):
            scan_bound()


class TestAnBound:
    def test_direct_verification_n7(self):
        result = verify_An_bound(7, 5)
        assert result.ok and result.method == "direct-scan"
        assert 1 in result.witnesses and len(set(result.witnesses)) >= 3

    @pytest.mark.parametrize(
        "n,p,method",
        [
            (26, 5, "quasihook-row2"),  # 1 + 5^2
            (11, 5, "quasihook-row2"),  # 1 + 2*5
            (21, 5, "quasihook-row2"),  # 1 + 4*5
            (27, 5, "quasihook-row3"),  # 2 + 5^2
            (9, 7, "quasihook-row3"),  # 2 + 7
            (31, 5, "row-extension"),  # 1 + 5 + 5^2
            (57, 7, "row-extension"),  # 1 + 7 + 7^2
            (10, 5, "hook-degrees"),
        ],
    )
    def test_special_shapes(self, n, p, method):
        result = verify_An_bound(n, p)
        assert result.ok and result.method == method
        assert 1 in result.witnesses

    def test_witnesses_are_extendable_degrees(self):
        for n, p in ((10, 5), (26, 5), (27, 5), (31, 5), (14, 13)):
            result = verify_An_bound(n, p)
            exact = ext_pprime_degree_set(n, p, bound=60)
            assert set(result.witnesses) <= exact

    def test_grid(self):
        for n in range(7, 61):
            for p in PRIMES:
                assert verify_An_bound(n, p).ok

    def test_preconditions(self):
        with pytest.raises(ValueError):
            verify_An_bound(6, 5)
        with pytest.raises(ValueError):
            verify_An_bound(10, 3)
        with pytest.raises(ValueError):
            verify_An_bound(10, 6)

    def test_exact_sets_beat_halved_bound(self):
        for n in range(5, 26):
            sets = scan_ext_degree_sets(n, PRIMES)
            for p in PRIMES:
                assert len(sets[p]) >= halved_count_lower_bound(n, p)
