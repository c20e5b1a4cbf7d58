"""Structural validation against brute-force pair-count oracles."""
from collections import Counter
from itertools import combinations
from math import comb

import pytest

from designcolour import (
    Design,
    DesignError,
    Grouping,
    admissible,
    catalog_get,
    is_transversal,
    validate_bibd,
    validate_gdd,
    validate_packing,
)
from designcolour.packings import pack_4n2_odd
from designcolour.td import build_td
from designcolour.transforms import delete_point


def brute_pair_counts(design):
    counts = Counter()
    for blk in design.blocks:
        for pair in combinations(blk, 2):
            counts[pair] += 1
    return counts


def fano():
    return Design(7, tuple(tuple(sorted(((0 + s) % 7, (1 + s) % 7, (3 + s) % 7))) for s in range(7)))


class TestDesign:
    def test_canonical_block_order(self):
        d = Design(5, ((4, 2, 3), (0, 1, 2)))
        assert d.blocks == ((0, 1, 2), (2, 3, 4))

    def test_rejects_repeated_point(self):
        with pytest.raises(DesignError):
            Design(4, ((0, 0, 1),))

    def test_rejects_out_of_range(self):
        with pytest.raises(DesignError):
            Design(3, ((0, 1, 3),))

    def test_mixed_sizes_reported(self):
        d = Design(6, ((0, 1, 2), (0, 3, 4, 5)))
        assert not d.uniform
        assert d.k == 3


class TestGrouping:
    def test_partition_enforced(self):
        with pytest.raises(DesignError):
            Grouping(4, ((0, 1), (1, 2, 3)))
        with pytest.raises(DesignError):
            Grouping(4, ((0, 1),))

    def test_canonical_order_and_index(self):
        g = Grouping(4, ((2, 3), (1, 0)))
        assert g.groups == ((0, 1), (2, 3))
        assert g.group_index == (0, 0, 1, 1)
        assert g.uniform_size == 2


class TestValidateBibd:
    def test_fano_passes_and_agrees_with_oracle(self):
        d = fano()
        counts = brute_pair_counts(d)
        assert all(counts[p] == 1 for p in combinations(range(7), 2))
        report = validate_bibd(d)
        assert report.passed
        assert report.details["admissible"]

    def test_single_block_complete_design(self):
        assert validate_bibd(Design(3, ((0, 1, 2),))).passed

    def test_sts21_catalog(self):
        d = catalog_get("sts21").design
        assert d.b == 70
        assert validate_bibd(d).passed

    def test_corrupted_block_fails_with_witness(self):
        blocks = list(fano().blocks)
        blocks[0] = (0, 1, 2)
        report = validate_bibd(Design(7, tuple(blocks)))
        assert not report.passed
        kinds = {v.kind for v in report.violations}
        assert kinds == {"pair-multiplicity"}

    @pytest.mark.parametrize("name", ["sts7", "sts9", "sts13", "sts21"])
    def test_block_count_identity(self, name):
        d = catalog_get(name).design
        assert d.b == d.v * (d.v - 1) // (d.k * (d.k - 1))


class TestValidateGdd:
    def test_td44_catalog(self):
        entry = catalog_get("td44")
        report = validate_gdd(entry.design, entry.grouping)
        assert report.passed
        assert report.details["uniform-groups"]

    def test_within_group_pair_fails(self):
        d = Design(6, ((0, 1, 2), (0, 1, 3)), 1)
        g = Grouping(6, ((0, 1), (2, 3), (4, 5)))
        report = validate_gdd(d, g)
        assert any(v.kind == "within-group-pair-in-block" for v in report.violations)

    def test_sts13_minus_point_is_2_6_gdd(self):
        sts13 = catalog_get("sts13").design
        d, g = delete_point(sts13, 4)
        counts = brute_pair_counts(d)
        gi = g.group_index
        for pair in combinations(range(12), 2):
            expected = 1 if gi[pair[0]] != gi[pair[1]] else 0
            assert counts[pair] == expected
        assert validate_gdd(d, g).passed
        assert g.u == 6 and g.uniform_size == 2

    def test_uniform_block_count_identity(self):
        d, g = build_td(4, 5)
        assert d.b == 5 * 5 * 4 * 3 // (4 * 3)


class TestValidatePacking:
    def test_pack24_catalog(self):
        d = catalog_get("pack24").design
        report, leave = validate_packing(d)
        assert report.passed and d.b == 36
        assert leave.edge_count == comb(24, 2) - 36 * comb(4, 2)

    def test_empty_block_list_leaves_complete_graph(self):
        report, leave = validate_packing(Design(5, ()))
        assert report.passed
        assert leave.edge_count == comb(5, 2)

    def test_pack_4n2_odd_size_formula(self):
        packed = pack_4n2_odd(5)
        report, _ = validate_packing(packed.design)
        assert report.passed
        assert packed.size == 5 * 5 + 5

    def test_overcovered_pair_fails(self):
        report, _ = validate_packing(Design(6, ((0, 1, 2, 3), (0, 1, 4, 5))))
        assert not report.passed
        assert report.violations[0].witness[0] == (0, 1)


class TestTransversal:
    def test_td44_true(self):
        entry = catalog_get("td44")
        assert is_transversal(entry.design, entry.grouping)

    def test_2_6_gdd_false(self):
        d, g = delete_point(catalog_get("sts13").design, 0)
        assert not is_transversal(d, g)

    def test_build_td_3_3(self):
        d, g = build_td(3, 3)
        assert is_transversal(d, g)


class TestAdmissible:
    @pytest.mark.parametrize(
        "v_or_u,g,k,lam,expected",
        [
            (21, 1, 3, 1, True),
            (8, 1, 3, 1, False),
            (6, 2, 3, 1, True),
            (13, 1, 4, 1, True),
            (7, 1, 3, 2, True),
            (4, 3, 4, 1, True),
            (5, 2, 4, 1, False),
        ],
    )
    def test_examples(self, v_or_u, g, k, lam, expected):
        assert admissible(v_or_u, g, k, lam) is expected

    def test_mod6_characterisation_for_triples(self):
        for v in range(3, 200):
            assert admissible(v, 1, 3, 1) == (v % 6 in (1, 3))
