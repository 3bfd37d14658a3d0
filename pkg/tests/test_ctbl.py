"""Degree-table ingestion: schema validation, order checks, bundled data."""

import json

import pytest

from ppcd.ctbl import (
    bundled_names,
    bundled_table,
    cd,
    cd_pprime,
    load_degree_table,
    pgl2_degree_set,
)


def doc(**kwargs):
    return json.dumps(kwargs)


class TestLoader:
    def test_multiset_form(self):
        table = load_degree_table(
            doc(name="A5", order=60, complete=True, degrees=[[1, 1], [3, 2], [4, 1], [5, 1]])
        )
        assert table.name == "A5"
        assert table.order == 60
        assert table.complete
        assert table.degrees == ((1, 1), (3, 2), (4, 1), (5, 1))
        assert table.degree_set == frozenset({1, 3, 4, 5})

    def test_set_form(self):
        table = load_degree_table(doc(degree_set=[1, 6, 7, 8], name="PGL2(7)"))
        assert table.degree_set == frozenset({1, 6, 7, 8})
        assert not table.complete
        assert table.degrees is None

    def test_order_optional(self):
        table = load_degree_table(doc(name="X", complete=False, degrees=[[2, 3]]))
        assert table.order is None

    def test_sum_of_squares_mismatch(self):
        with pytest.raises(ValueError, match="sum-of-squares"):
            load_degree_table(
                doc(name="A5", order=61, complete=True, degrees=[[1, 1], [3, 2], [4, 1], [5, 1]])
            )

    def test_incomplete_table_skips_order_check(self):
        load_degree_table(doc(name="frag", order=60, complete=False, degrees=[[3, 2]]))

    @pytest.mark.parametrize(
        "bad",
        [
            "not json",
            "[1,2,3]",
            doc(name="X", complete=True, degrees=[[1, 1]], extra=1),
            doc(name="X", complete=True),
            doc(name="X", degrees=[[1, 1]]),
            doc(complete=True, degrees=[[1, 1]]),
            doc(name="X", complete="yes", degrees=[[1, 1]]),
            doc(name="X", complete=True, degrees=[]),
            doc(name="X", complete=True, degrees=[[1, 1, 1]]),
            doc(name="X", complete=True, degrees=[[0, 1]]),
            doc(name="X", complete=True, degrees=[[1, 0]]),
            doc(name="X", complete=True, degrees=[[2, 1], [2, 1]]),
            doc(name="X", complete=True, degrees=[[1, 1]], order=-5),
            doc(degree_set=[]),
            doc(degree_set=[1, 2], complete=True),
            doc(degree_set=[1, 2], name=7),
        ],
    )
    def test_schema_violations(self, bad):
        with pytest.raises(ValueError):
            load_degree_table(bad)


class TestBundled:
    def test_names(self):
        assert bundled_names() == ["A5", "A6", "S5"]

    def test_tables_pass_order_checks(self):
        expected = {
            "A5": (60, ((1, 1), (3, 2), (4, 1), (5, 1))),
            "S5": (120, ((1, 2), (4, 2), (5, 2), (6, 1))),
            "A6": (360, ((1, 1), (5, 2), (8, 2), (9, 1), (10, 1))),
        }
        for name, (order, degrees) in expected.items():
            table = bundled_table(name)
            assert table.order == order
            assert table.degrees == degrees
            assert sum(m * d * d for d, m in degrees) == order

    def test_unknown_name(self):
        with pytest.raises(ValueError):
            bundled_table("M11")


class TestDegreeSets:
    def test_cd(self):
        assert cd(bundled_table("A5")) == {1, 3, 4, 5}

    def test_cd_pprime_intro_examples(self):
        a5 = bundled_table("A5")
        for p in (2, 3, 5):
            assert len(cd_pprime(a5, p)) == 3
        assert cd_pprime(a5, 5) == {1, 3, 4}
        s5 = bundled_table("S5")
        assert cd_pprime(s5, 2) == {1, 5}
        a6 = bundled_table("A6")
        assert len(cd_pprime(a6, 5)) == 3

    def test_cd_pprime_subset_and_fixed_point(self):
        table = bundled_table("A6")
        for p in (2, 3, 5, 7, 11):
            sub = cd_pprime(table, p)
            assert sub <= cd(table)
            assert (sub == cd(table)) == all(d % p for d in cd(table))

    def test_requires_prime(self):
        with pytest.raises(ValueError):
            cd_pprime(bundled_table("A5"), 6)


class TestPGL2:
    def test_examples(self):
        assert pgl2_degree_set(7) == {1, 6, 7, 8}
        assert pgl2_degree_set(11) == {1, 10, 11, 12}
        assert pgl2_degree_set(13) == {1, 12, 13, 14}

    def test_size_claim(self):
        for p in (7, 11, 13, 17, 19, 23, 29, 97):
            degs = pgl2_degree_set(p)
            assert len({d for d in degs if d % p}) == 3

    def test_rejects_small_or_composite(self):
        for bad in (5, 2, 9, -7):
            with pytest.raises(ValueError):
                pgl2_degree_set(bad)
