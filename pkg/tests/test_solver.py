"""Solver verdicts cross-checked against exhaustive colouring enumeration."""
from itertools import product

import pytest

from designcolour import (
    BudgetExceededError,
    Colouring,
    Design,
    DesignError,
    Grouping,
    SearchBudget,
    catalog_get,
    check_block_equitable,
    check_group_colouring,
    check_weak,
    chromatic_number,
    decide_colourable,
    upper_bound_colouring,
)
from designcolour.solver import BUDGET_EXCEEDED, COLOURABLE, NOT_COLOURABLE
from designcolour.td import build_td
from designcolour.transforms import delete_point, pc_to_gdd


def brute_force_colourable(d, g, c, mode):
    """Ground truth by enumerating every assignment through the checkers."""
    if mode == "weak":
        check = lambda col: check_weak(d, col)
    elif mode == "block-equitable":
        check = lambda col: check_block_equitable(d, col)
    elif mode == "group-monochromatic":
        check = lambda col: check_group_colouring(d, g, col, "monochromatic")
    else:
        check = lambda col: check_group_colouring(d, g, col, "group-equitable")
    return any(
        check(Colouring(c, assignment)).passed
        for assignment in product(range(c), repeat=d.v)
    )


def sts9_class():
    d = catalog_get("sts9").design
    from designcolour.parallel import enumerate_parallel_classes

    classes, _ = enumerate_parallel_classes(d)
    return pc_to_gdd(d, classes[0])


class TestDecide:
    def test_fano_not_2_colourable(self):
        result = decide_colourable(catalog_get("sts7").design, None, 2, "weak")
        assert result.status == NOT_COLOURABLE
        assert result.nodes > 0

    def test_rainbow_always_works(self):
        d = catalog_get("sts9").design
        result = decide_colourable(d, None, 9, "weak")
        assert result.status == COLOURABLE

    def test_2_6_gdd_block_equitable_iff(self):
        d, g = delete_point(catalog_get("sts13").design, 0)
        assert decide_colourable(d, g, 2, "block-equitable").status == NOT_COLOURABLE
        assert decide_colourable(d, g, 6, "block-equitable").status == COLOURABLE

    def test_one_colour_with_blocks(self):
        d = catalog_get("sts7").design
        assert decide_colourable(d, None, 1, "weak").status == NOT_COLOURABLE

    def test_group_mode_needs_grouping(self):
        d = catalog_get("sts7").design
        with pytest.raises(DesignError):
            decide_colourable(d, None, 2, "group-monochromatic")

    def test_budget_exceeded_status(self):
        d = catalog_get("sts21").design
        result = decide_colourable(d, None, 3, "weak", SearchBudget(node_limit=5))
        assert result.status == BUDGET_EXCEEDED


class TestBruteAgreement:
    @pytest.mark.parametrize("c", [1, 2, 3])
    @pytest.mark.parametrize("name", ["sts7", "sts9"])
    def test_weak_agreement(self, name, c):
        d = catalog_get(name).design
        expected = brute_force_colourable(d, None, c, "weak")
        assert decide_colourable(d, None, c, "weak").colourable == expected

    @pytest.mark.parametrize("c", [2, 3])
    def test_all_modes_on_2_4_gdd(self, c):
        d, g = delete_point(catalog_get("sts9").design, 0)
        for mode in ("weak", "block-equitable", "group-monochromatic", "group-equitable"):
            expected = brute_force_colourable(d, g, c, mode)
            got = decide_colourable(d, g, c, mode).colourable
            assert got == expected, (mode, c)

    @pytest.mark.parametrize("c", [2, 3])
    def test_all_modes_on_small_packing(self, c):
        d = catalog_get("pack7").design
        g = Grouping(7, ((0, 1, 2), (3, 4, 5), (6,)))
        for mode in ("weak", "block-equitable", "group-monochromatic", "group-equitable"):
            expected = brute_force_colourable(d, g, c, mode)
            got = decide_colourable(d, g, c, mode).colourable
            assert got == expected, (mode, c)


class TestChromatic:
    def test_sts9_is_3_chromatic(self):
        result = chromatic_number(catalog_get("sts9").design)
        assert result.chi == 3
        assert result.refutation is not None and result.refutation.c == 2

    def test_sts13_is_3_chromatic(self):
        assert chromatic_number(catalog_get("sts13").design).chi == 3

    def test_type_3_3_gdd_is_2_chromatic(self):
        gdd, grouping = sts9_class()
        assert chromatic_number(gdd).chi == 2

    def test_no_blocks_is_1_chromatic(self):
        result = chromatic_number(Design(5, ()))
        assert result.chi == 1

    def test_chi_2_retains_refutation_at_1(self):
        gdd, _ = sts9_class()
        result = chromatic_number(gdd)
        assert result.chi == 2
        assert result.refutation is not None and result.refutation.c == 1

    def test_equitable_modes_rejected(self):
        with pytest.raises(DesignError):
            chromatic_number(catalog_get("sts9").design, None, "block-equitable")

    def test_budget_error(self):
        d = catalog_get("sts21").design
        with pytest.raises(BudgetExceededError):
            chromatic_number(d, None, "weak", SearchBudget(node_limit=3))

    def test_group_monochromatic_on_td(self):
        d, g = build_td(4, 4)
        result = chromatic_number(d, g, "group-monochromatic")
        assert result.chi == 2
        assert check_group_colouring(d, g, result.witness, "monochromatic").passed


class TestPaperProperties:
    def test_block_equitable_implies_weak(self):
        # Equitability caps every colour strictly below the block size, so
        # an equitable colouring can never leave a block monochromatic.
        d = catalog_get("pack11").design
        for assignment in product(range(2), repeat=11):
            col = Colouring(2, assignment)
            if check_block_equitable(d, col).passed:
                assert check_weak(d, col).passed

    def test_no_2_chromatic_uniform_3gdd_with_5_plus_groups(self):
        corpus = [
            delete_point(catalog_get("sts13").design, 0),  # type 2^6
        ]
        sts7 = catalog_get("sts7").design
        from designcolour import blow_up

        blown = blow_up(sts7, Grouping.singletons(7), 3)  # type 3^7
        corpus.append((blown.design, blown.grouping))
        for d, g in corpus:
            assert g.u >= 5
            assert decide_colourable(d, g, 2, "weak").status == NOT_COLOURABLE

    def test_point_deletion_chi_sandwich(self):
        for name in ("sts7", "sts9", "sts13"):
            d = catalog_get(name).design
            chi = chromatic_number(d).chi
            for y in range(0, d.v, 4):
                gdd, _ = delete_point(d, y)
                chi_y = chromatic_number(gdd).chi
                assert chi_y in (chi - 1, chi), (name, y)


class TestWitnessDeterminism:
    def test_lexicographically_least_weak_witness(self):
        d = catalog_get("sts7").design
        result = decide_colourable(d, None, 3, "weak")
        best = None
        for assignment in product(range(3), repeat=7):
            if check_weak(d, Colouring(3, assignment)).passed:
                best = assignment
                break
        assert result.witness.assignment == best

    def test_repeat_runs_identical(self):
        d, g = delete_point(catalog_get("sts13").design, 3)
        first = decide_colourable(d, g, 6, "block-equitable")
        second = decide_colourable(d, g, 6, "block-equitable")
        assert first.witness == second.witness


class TestUpperBoundColouring:
    def test_td44_gets_two_colours(self):
        d, g = build_td(4, 4)
        col = upper_bound_colouring(d, g)
        assert col.c == 2
        assert check_group_colouring(d, g, col, "monochromatic").passed

    def test_seven_groups_blocksize_three(self):
        d = catalog_get("sts21").design
        from designcolour.parallel import enumerate_parallel_classes

        classes, _ = enumerate_parallel_classes(d)
        gdd, grouping = pc_to_gdd(d, classes[0])
        col = upper_bound_colouring(gdd, grouping)
        assert col.c == 4
        assert check_group_colouring(gdd, grouping, col, "monochromatic").passed

    def test_no_blocks_single_colour(self):
        d = Design(6, ())
        g = Grouping(6, ((0, 1, 2), (3, 4, 5)))
        assert upper_bound_colouring(d, g).c == 1

    def test_chain_chi_le_chiM_le_ceiling(self):
        for name, grouping in [("sts13", None)]:
            d = catalog_get(name).design
            dd, gg = delete_point(d, 0)
            chi = chromatic_number(dd).chi
            chi_m = chromatic_number(dd, gg, "group-monochromatic").chi
            assert chi <= chi_m
            assert chi_m <= -(-gg.u // (dd.k - 1))
