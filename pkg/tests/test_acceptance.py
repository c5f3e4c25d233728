"""Acceptance gate.

Each criterion is one test that prints a single line, ACCEPTANCE <n>: PASS
or ACCEPTANCE <n>: FAIL, followed by a short label.  Run with `pytest -s`
to see the lines stream; without -s pytest still fails the run if any
criterion fails.
"""

from __future__ import annotations

import functools
import random
from fractions import Fraction

from deutschpaths import (
    Down,
    Piece,
    SILVER_CONJUGATE,
    SILVER_RATIO,
    TruncatedSeries,
    binet_half_companion,
    binet_pell,
    count_mountains,
    count_nondecreasing_closed,
    count_square_first_tilings,
    count_tilings,
    enumerate_deutsch,
    enumerate_nondecreasing_direct,
    enumerate_nondecreasing_filter,
    enumerate_tilings,
    fibonacci,
    gf_coefficients,
    half_companion_pell,
    as_mountain,
    parse_path,
    path_to_tree,
    pell,
    render_path,
    star_identity_holds,
    tree_statistics,
    tree_to_json,
    tree_to_path,
    validate_tree,
)

EXPECTED_COUNTS = [
    1, 0, 1, 1, 3, 6, 15, 35, 85, 204, 493, 1189, 2871, 6930, 16731,
]


def criterion(number, label):
    def wrap(fn):
        @functools.wraps(fn)
        def run():
            try:
                fn()
            except BaseException:
                print(f"ACCEPTANCE {number}: FAIL {label}")
                raise
            print(f"ACCEPTANCE {number}: PASS {label}")

        return run

    return wrap


@criterion(1, "length-5 census lists exactly the six expected paths")
def test_criterion_1():
    stream = [render_path(p) for p in enumerate_nondecreasing_direct(5)]
    assert stream == [
        "U U U U D4",
        "U U U D1 D2",
        "U U U D2 D1",
        "U U D1 U D2",
        "U U D2 U D1",
        "U D1 U U D2",
    ]
    assert len(set(stream)) == 6


@criterion(2, "closed, series, filter and direct counts agree for n <= 14")
def test_criterion_2():
    coeffs = gf_coefficients("with-empty", 14)
    for n in range(15):
        closed = count_nondecreasing_closed(n)
        filtered = sum(1 for _ in enumerate_nondecreasing_filter(n))
        direct = sum(1 for _ in enumerate_nondecreasing_direct(n))
        assert closed == coeffs[n] == filtered == direct == EXPECTED_COUNTS[n]


@criterion(3, "five total generating function forms agree through order 64")
def test_criterion_3():
    reference = gf_coefficients("with-empty", 64)
    for name in ("partial-fractions", "continued-fraction", "cf-closure", "tree-form"):
        assert gf_coefficients(name, 64) == reference, name


@criterion(4, "path and marked tree bijection round trips for n <= 12")
def test_criterion_4():
    for n in range(13):
        seen = set()
        total = 0
        for path in enumerate_nondecreasing_direct(n):
            tree = path_to_tree(path)
            assert validate_tree(tree) == []
            stats = tree_statistics(tree)
            assert stats.edge_count + stats.double_count == n
            assert stats.edge_count == sum(1 for s in path.steps if not isinstance(s, Down))
            assert stats.double_count == sum(1 for s in path.steps if isinstance(s, Down))
            assert tree_to_path(tree) == path
            seen.add(tree_to_json(tree))
            total += 1
        assert len(seen) == total == EXPECTED_COUNTS[n]

    figure = [
        ("U D1 U U D2", '{"backbone":["s","d"],"bundles":[[["d"]],[]]}'),
        ("U U D1 U D2", '{"backbone":["s","d"],"bundles":[[],[["d"]]]}'),
        ("U U D2 U D1", '{"backbone":["d"],"bundles":[[["s","d"]]]}'),
        ("U U U D2 D1", '{"backbone":["s","d","d"],"bundles":[[],[],[]]}'),
        ("U U U D1 D2", '{"backbone":["d","s","d"],"bundles":[[],[],[]]}'),
        ("U U U U D4", '{"backbone":["s","s","s","d"],"bundles":[[],[],[],[]]}'),
    ]
    for tokens, record in figure:
        path = parse_path(tokens)
        tree = path_to_tree(path)
        assert tree_to_json(tree) == record
        assert render_path(tree_to_path(tree)) == tokens


@criterion(5, "mountains of k steps number F(k-1), by formula and by census")
def test_criterion_5():
    for k in range(21):
        assert count_mountains(k) == (fibonacci(k - 1) if k >= 2 else 0)
    for k in range(15):
        census = sum(1 for p in enumerate_deutsch(k) if as_mountain(p) is not None)
        assert census == count_mountains(k)


@criterion(6, "unit-down restriction gives the non-decreasing Dyck counts")
def test_criterion_6():
    coeffs = gf_coefficients("dyck-nondecreasing", 8)
    for n in range(9):
        unit_down = sum(
            1
            for p in enumerate_nondecreasing_direct(2 * n)
            if all(s.size == 1 for s in p.steps if isinstance(s, Down))
        )
        assert unit_down == fibonacci(2 * n - 1) == coeffs[n]


@criterion(7, "Pell sequences match their silver-ratio closed forms")
def test_criterion_7():
    assert SILVER_RATIO * SILVER_CONJUGATE == -1 + 0 * SILVER_RATIO
    assert SILVER_RATIO + SILVER_CONJUGATE == 2 + 0 * SILVER_RATIO
    for n in range(65):
        assert pell(n) == binet_pell(n)
        assert half_companion_pell(n) == binet_half_companion(n)


@criterion(8, "square and domino tilings follow the Fibonacci laws")
def test_criterion_8():
    square_first_series = gf_coefficients("square-first-tilings", 20)
    assert square_first_series[0] == 1
    assert count_square_first_tilings(0) == 0
    for n in range(21):
        tilings = list(enumerate_tilings(n))
        assert len(tilings) == count_tilings(n) == fibonacci(n + 1)
        if n >= 1:
            square_first = sum(1 for t in tilings if t[0] is Piece.SQUARE)
            assert square_first == count_square_first_tilings(n) == square_first_series[n]
        if n >= 2:
            domino_first = sum(1 for t in tilings if t[0] is Piece.DOMINO)
            assert domino_first == count_tilings(n - 2)


@criterion(9, "star identity holds on 100 seeded random series pairs")
def test_criterion_9():
    rng = random.Random(20250830)
    order = 32
    for _ in range(100):
        coeffs = []
        for _series in range(2):
            length = rng.randint(6, order)
            values = [Fraction(0)] + [
                Fraction(rng.randint(-3, 3), rng.randint(1, 3))
                for _ in range(length)
            ]
            coeffs.append(TruncatedSeries(values, order))
        assert star_identity_holds(coeffs[0], coeffs[1], order)
