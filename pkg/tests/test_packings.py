"""Packing constructions, their bounds and the difference-pair profiles."""
from fractions import Fraction

import pytest

from designcolour import (
    ColouredPacking,
    DesignError,
    PairsProfile,
    Unachievable,
    UnsupportedParameterError,
    bound_general,
    bound_max_equitable,
    check_block_equitable,
    max_equitable_packing,
    pack_4n,
    pack_4n1,
    pack_4n2_odd,
    pack_from_pairs,
    pack_small,
    pairs_for_s,
    td_packing_coloured,
    validate_packing,
    verify_pairs_profile,
)
from designcolour.td import UnsupportedOrderError


class TestBoundGeneral:
    def test_v8_k3_c2(self):
        exact, floor = bound_general(8, 3, 2)
        assert floor == 8 == (8 * 8) // 8

    def test_single_block(self):
        for k in (3, 4, 5):
            assert bound_general(k, k, 2)[1] == 1

    def test_v14_k4_c2(self):
        exact, floor = bound_general(14, 4, 2)
        assert exact == Fraction(49, 4)
        assert floor == 12

    def test_matches_closed_form_k3_c2(self):
        for v in range(3, 501):
            assert bound_general(v, 3, 2)[1] == (v * v) // 8

    def test_dominates_tight_k4_bound(self):
        for v in range(4, 501):
            assert bound_general(v, 4, 2)[0] >= bound_max_equitable(v, 4, 2).value


class TestBoundMaxEquitable:
    def test_k4_values(self):
        assert bound_max_equitable(24, 4, 2).value == 36
        info = bound_max_equitable(10, 4, 2)
        assert info.value == 6 and info.tight and not info.achievable

    def test_k3_values(self):
        assert bound_max_equitable(12, 3, 2).value == 18
        assert not bound_max_equitable(4, 3, 2).achievable

    def test_fallback_not_tight(self):
        info = bound_max_equitable(20, 5, 2)
        assert not info.tight
        assert info.value == bound_general(20, 5, 2)[1]


class TestTdPackingColoured:
    def test_k4_g5_c2_meets_bound(self):
        packed = td_packing_coloured(4, 5, 2)
        assert packed.size == 25 and packed.bound_met

    def test_k4_g4_c4_rainbow_blocks(self):
        packed = td_packing_coloured(4, 4, 4)
        for blk in packed.design.blocks:
            assert len({packed.colouring.assignment[p] for p in blk}) == 4

    def test_k6_g7_c3(self):
        packed = td_packing_coloured(6, 7, 3)
        assert packed.size == 49 and packed.bound_met

    def test_colours_must_divide(self):
        with pytest.raises(UnsupportedParameterError):
            td_packing_coloured(4, 5, 3)


class TestPack4n:
    @pytest.mark.parametrize("n", [1, 3, 4, 5, 7, 9, 12])
    def test_td_orders(self, n):
        packed = pack_4n(n)
        assert packed.size == n * n
        assert packed.design.v == 4 * n
        assert packed.bound_met

    @pytest.mark.parametrize("n", [10, 14])
    def test_rotation_fallback_orders(self, n):
        packed = pack_4n(n)
        assert packed.size == n * n and packed.bound_met

    @pytest.mark.parametrize("n", [2, 6])
    def test_unsupported(self, n):
        with pytest.raises(UnsupportedOrderError):
            pack_4n(n)

    def test_pack_4n1_adds_isolated_point(self):
        packed = pack_4n1(3)
        assert packed.design.v == 13 and packed.size == 9
        degrees = packed.design.point_degrees()
        assert degrees[12] == 0


class TestPack4n2Odd:
    @pytest.mark.parametrize("n,size", [(3, 12), (5, 30), (9, 90)])
    def test_sizes(self, n, size):
        packed = pack_4n2_odd(n)
        assert packed.design.v == 4 * n + 2
        assert packed.size == size == n * n + n
        for blk in packed.design.blocks:
            split = sum(1 for p in blk if packed.colouring.assignment[p] == 0)
            assert split == 2

    @pytest.mark.parametrize("n", [1, 2, 4])
    def test_rejects_bad_n(self, n):
        with pytest.raises(UnsupportedParameterError):
            pack_4n2_odd(n)


class TestPairsProfiles:
    def test_small_table_s2(self):
        profile = pairs_for_s(2)
        assert profile.t == 1 and profile.pairs == ((2, 3),)

    def test_small_table_s3(self):
        profile = pairs_for_s(3)
        assert profile.t == 5 and set(profile.pairs) == {(1, 4), (2, 9)}

    def test_bad_profile_detected(self):
        report = verify_pairs_profile(PairsProfile(2, 1, ((1, 3),)))
        assert not report.passed
        assert any(v.kind == "cross-difference-set" for v in report.violations)

    def test_residue_rows(self):
        for s in (14, 20, 16, 28, 17, 19, 13, 15, 18, 12):
            assert verify_pairs_profile(pairs_for_s(s)).passed

    def test_sweep_to_60(self):
        for s in range(2, 61):
            assert verify_pairs_profile(pairs_for_s(s)).passed, s


class TestPackFromPairs:
    @pytest.mark.parametrize("s", [2, 3, 5, 8])
    def test_sizes(self, s):
        packed = pack_from_pairs(pairs_for_s(s))
        assert packed.design.v == 8 * s + 2
        assert packed.size == 4 * s * s + 2 * s
        assert packed.bound_met

    def test_rejects_failing_profile(self):
        with pytest.raises(DesignError):
            pack_from_pairs(PairsProfile(2, 1, ((1, 3),)))


class TestPackSmall:
    @pytest.mark.parametrize("v,size", [(7, 2), (11, 6), (24, 36), (25, 36)])
    def test_catalogued(self, v, size):
        packed = pack_small(v)
        assert packed.size == size and packed.bound_met

    def test_out_of_range(self):
        with pytest.raises(UnsupportedParameterError):
            pack_small(13)


class TestDispatcher:
    def test_small_exceptions(self):
        for v in (6, 8, 9, 10):
            result = max_equitable_packing(v, 4, 2)
            assert isinstance(result, Unachievable)
            assert result.bound == bound_max_equitable(v, 4, 2).value

    def test_tiny_orders_empty(self):
        for v in (0, 1, 2, 3):
            result = max_equitable_packing(v, 4, 2)
            assert isinstance(result, ColouredPacking) and result.size == 0

    @pytest.mark.parametrize("v,size", [(14, 12), (27, 42), (40, 100), (43, 110)])
    def test_spot_values(self, v, size):
        result = max_equitable_packing(v, 4, 2)
        assert result.size == size

    def test_sweep_to_60(self):
        for v in range(0, 61):
            result = max_equitable_packing(v, 4, 2)
            bound = bound_max_equitable(v, 4, 2)
            if v in (6, 8, 9, 10):
                assert isinstance(result, Unachievable)
            else:
                assert result.size == bound.value
                report, _ = validate_packing(result.design)
                assert report.passed
                assert check_block_equitable(result.design, result.colouring).passed
