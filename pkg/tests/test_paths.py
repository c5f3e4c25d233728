"""Path core: parsing, validation, valleys, enumeration, decomposition."""

from __future__ import annotations

from functools import lru_cache

import pytest
from hypothesis import given, strategies as st

from deutschpaths import (
    Decomposition,
    DeutschPath,
    Down,
    Mountain,
    NegativeExcursionError,
    NonzeroEndError,
    NotNonDecreasingError,
    PathTokenError,
    UP,
    as_mountain,
    compose,
    decompose,
    enumerate_deutsch,
    enumerate_nondecreasing_direct,
    enumerate_nondecreasing_filter,
    heights,
    is_nondecreasing,
    iter_decompositions,
    parse_path,
    path_from_json,
    path_stats,
    path_to_json,
    render_path,
    statistics,
    valley_levels,
    validate,
)

# Counts of all weakly-increasing-valley paths by length, 0 through 12.
# Derived by dynamic programming (see _count_nondecreasing_dp below) and
# frozen only after the independent routes agreed.
EXPECTED_COUNTS = [1, 0, 1, 1, 3, 6, 15, 35, 85, 204, 493, 1189, 2871]


def _count_all_deutsch_dp(n: int) -> int:
    # independent oracle: count without building any path
    @lru_cache(maxsize=None)
    def walk(remaining: int, height: int) -> int:
        if remaining == 0:
            return 1 if height == 0 else 0
        total = walk(remaining - 1, height + 1)
        for drop in range(1, height + 1):
            total += walk(remaining - 1, height - drop)
        return total

    return walk(n, 0)


def _count_nondecreasing_dp(n: int) -> int:
    # independent oracle: track the smallest level future valleys may use
    @lru_cache(maxsize=None)
    def walk(remaining: int, height: int, floor: int, just_fell: bool) -> int:
        if remaining == 0:
            return 1 if height == 0 else 0
        total = 0
        if not just_fell or height >= floor:
            new_floor = max(floor, height) if just_fell else floor
            total += walk(remaining - 1, height + 1, new_floor, False)
        for drop in range(1, height + 1):
            total += walk(remaining - 1, height - drop, floor, True)
        return total

    return walk(n, 0, 0, False)


class TestParsing:
    def test_example_tokens(self):
        path = parse_path("U D1 U U D2")
        assert path.steps == (UP, Down(1), UP, UP, Down(2))

    def test_empty_string_is_empty_path(self):
        assert parse_path("") == DeutschPath()
        assert parse_path("   ") == DeutschPath()

    def test_render_round_trip_examples(self):
        for text in ("", "U D1", "U U D2 U D1", "U U U U D4"):
            assert render_path(parse_path(text)) == text

    @pytest.mark.parametrize("token", ["D0", "D01", "d1", "X", "D", "U2", "D-1", "D1.5"])
    def test_bad_tokens_rejected(self, token):
        with pytest.raises(PathTokenError):
            parse_path(f"U {token}")

    def test_down_size_must_be_positive(self):
        with pytest.raises(ValueError):
            Down(0)

    @given(
        st.lists(
            st.one_of(st.just(UP), st.integers(1, 9).map(Down)),
            max_size=12,
        )
    )
    def test_render_parse_round_trip(self, steps):
        path = DeutschPath(tuple(steps))
        assert parse_path(render_path(path)) == path

    def test_json_round_trip(self):
        path = parse_path("U U D2 U D1")
        assert path_to_json(path) == '{"steps":["U","U","D2","U","D1"]}'
        assert path_from_json(path_to_json(path)) == path

    @pytest.mark.parametrize(
        "text",
        ['{"steps": "U"}', '["U"]', '{"steps": [1]}', '{"moves": []}', "not json"],
    )
    def test_bad_json_records(self, text):
        with pytest.raises(PathTokenError):
            path_from_json(text)


class TestValidation:
    def test_valid_examples(self):
        validate(parse_path("U U D2"))
        validate(parse_path(""))

    def test_negative_excursion_reports_position(self):
        with pytest.raises(NegativeExcursionError) as info:
            validate(parse_path("U D2"))
        assert info.value.position == 2
        assert info.value.height == -1

    def test_nonzero_end_reports_height(self):
        with pytest.raises(NonzeroEndError) as info:
            validate(parse_path("U U D1"))
        assert info.value.final_height == 1

    def test_heights(self):
        assert heights(parse_path("U D1 U U D2")) == (1, 0, 1, 2, 0)


class TestValleys:
    @pytest.mark.parametrize(
        "text,levels",
        [
            ("U D1 U U D2", (0,)),
            ("U U U D2 D1", ()),
            ("U U D1 U D2", (1,)),
            ("U U D1 U D2 U D1", (1, 0)),
            ("", ()),
        ],
    )
    def test_valley_levels(self, text, levels):
        assert valley_levels(parse_path(text)) == levels

    def test_nondecreasing_judgements(self):
        assert is_nondecreasing(parse_path("U D1 U U D2"))
        assert is_nondecreasing(parse_path(""))
        assert not is_nondecreasing(parse_path("U U D1 U D2 U D1"))

    def test_consecutive_downs_make_no_valley(self):
        # the point between two down-steps is entered by a fall and left by one
        assert valley_levels(parse_path("U U D1 D1")) == ()


class TestMountains:
    def test_examples(self):
        assert as_mountain(parse_path("U U D1 D1")) == Mountain(2, (1, 1))
        assert as_mountain(parse_path("U U U D2 D1")) == Mountain(3, (2, 1))
        assert as_mountain(parse_path("U D1 U D1")) is None
        assert as_mountain(parse_path("")) is None

    def test_mountain_invariants(self):
        with pytest.raises(ValueError):
            Mountain(0, ())
        with pytest.raises(ValueError):
            Mountain(2, (1,))
        with pytest.raises(ValueError):
            Mountain(2, (3, -1))
        assert Mountain(2, (1, 1)).length == 4


class TestEnumeration:
    def test_small_streams(self):
        assert list(enumerate_deutsch(0)) == [DeutschPath()]
        assert list(enumerate_deutsch(1)) == []
        assert [render_path(p) for p in enumerate_deutsch(3)] == ["U U D2"]

    def test_length_four_census(self):
        # canonical order puts the all-up prefix first
        assert [render_path(p) for p in enumerate_deutsch(4)] == [
            "U U U D3",
            "U U D1 D1",
            "U D1 U D1",
        ]

    def test_canonical_order_is_sorted(self):
        for n in range(9):
            stream = list(enumerate_deutsch(n))
            assert stream == sorted(stream, key=DeutschPath.sort_key)
            assert len(set(stream)) == len(stream)

    def test_counts_against_dp_oracle(self):
        for n in range(11):
            assert sum(1 for _ in enumerate_deutsch(n)) == _count_all_deutsch_dp(n)

    def test_every_enumerated_path_is_valid(self):
        for n in range(9):
            for p in enumerate_deutsch(n):
                hs = heights(p)
                assert all(h >= 0 for h in hs)
                assert (hs[-1] if hs else 0) == 0

    def test_negative_length_rejected(self):
        with pytest.raises(ValueError):
            enumerate_deutsch(-1)
        with pytest.raises(ValueError):
            enumerate_nondecreasing_direct(-1)

    def test_filtered_counts_against_dp_oracle(self):
        for n in range(13):
            count = sum(1 for _ in enumerate_nondecreasing_filter(n))
            assert count == _count_nondecreasing_dp(n) == EXPECTED_COUNTS[n]

    def test_length_five_stream(self):
        assert [render_path(p) for p in enumerate_nondecreasing_filter(5)] == [
            "U U U U D4",
            "U U U D1 D2",
            "U U U D2 D1",
            "U U D1 U D2",
            "U U D2 U D1",
            "U D1 U U D2",
        ]

    def test_first_filtered_path_appears_at_length_seven(self):
        # all shorter paths keep their valleys weakly increasing
        for n in range(7):
            assert list(enumerate_deutsch(n)) == list(enumerate_nondecreasing_filter(n))
        dropped = [
            render_path(p)
            for p in enumerate_deutsch(7)
            if not is_nondecreasing(p)
        ]
        assert dropped == ["U U D1 U D2 U D1"]

    def test_direct_equals_filter_in_order(self):
        for n in range(11):
            assert list(enumerate_nondecreasing_direct(n)) == list(
                enumerate_nondecreasing_filter(n)
            )


class TestDecomposition:
    @pytest.mark.parametrize(
        "text,height,homerun",
        [
            ("U D1 U U D2", 2, (2,)),
            ("U U D2 U D1", 1, (1,)),
            ("U U U D1 D2", 3, (1, 2)),
        ],
    )
    def test_examples(self, text, height, homerun):
        dec = decompose(parse_path(text))
        assert dec.height == height
        assert dec.homerun == homerun

    def test_example_bundles(self):
        dec = decompose(parse_path("U D1 U U D2"))
        assert dec.bundles == ((Mountain(1, (1,)),), ())
        dec = decompose(parse_path("U U D2 U D1"))
        assert dec.bundles == ((Mountain(2, (2,)),),)

    def test_empty_path(self):
        assert decompose(DeutschPath()) == Decomposition(0, (), ())
        assert compose(Decomposition(0, (), ())) == DeutschPath()

    @pytest.mark.parametrize(
        "height,homerun,expected",
        [
            (3, (1, 2), "U U U D1 D2"),
            (4, (4,), "U U U U D4"),
        ],
    )
    def test_compose_staircases(self, height, homerun, expected):
        dec = Decomposition(height, ((),) * height, homerun)
        assert render_path(compose(dec)) == expected

    def test_decompose_rejects_falling_valleys(self):
        with pytest.raises(NotNonDecreasingError):
            decompose(parse_path("U U D1 U D2 U D1"))

    def test_decomposition_invariants(self):
        with pytest.raises(ValueError):
            Decomposition(0, (), (1,))
        with pytest.raises(ValueError):
            Decomposition(2, ((),), (2,))
        with pytest.raises(ValueError):
            Decomposition(2, ((), ()), (1,))
        with pytest.raises(ValueError):
            Decomposition(1, ((),), ())

    def test_round_trip_paths(self):
        for n in range(11):
            for p in enumerate_nondecreasing_filter(n):
                dec = decompose(p)
                assert dec.length == n
                assert compose(dec) == p

    def test_round_trip_decompositions(self):
        for n in range(11):
            for dec in iter_decompositions(n):
                assert decompose(compose(dec)) == dec

    def test_mountains_never_sit_at_the_top_level(self):
        # the home run follows the last backbone step immediately
        for n in range(12):
            for dec in (decompose(p) for p in enumerate_nondecreasing_filter(n)):
                assert len(dec.bundles) == dec.height


class TestStatistics:
    def test_empty_length(self):
        summary = statistics(0)
        assert len(summary.records) == 1
        record = summary.records[0]
        assert (record.length, record.up_count, record.downstep_count) == (0, 0, 0)
        assert record.height == 0 and record.valley_levels == ()

    def test_length_five_down_steps(self):
        # five paths take two down-steps, the staircase to level 4 takes one
        summary = statistics(5)
        assert summary.downstep_histogram == {1: 1, 2: 5}
        assert summary.valley_histogram == {0: 3, 1: 3}

    def test_record_fields(self):
        stats = path_stats(parse_path("U U D1 U D2"))
        assert stats == path_stats(parse_path("U U D1 U D2"))
        assert stats.length == 5
        assert stats.up_count == 3
        assert stats.downstep_count == 2
        assert stats.height == 2
        assert stats.valley_levels == (1,)

    def test_histograms_cover_all_records(self):
        summary = statistics(6)
        assert len(summary.records) == EXPECTED_COUNTS[6]
        assert sum(summary.downstep_histogram.values()) == len(summary.records)
        assert sum(summary.height_histogram.values()) == len(summary.records)
        assert sum(summary.valley_histogram.values()) == len(summary.records)
