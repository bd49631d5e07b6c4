"""Hardware-style multiplier and adder counting."""

import pytest

from minfilt import (
    OpCounter,
    apply_basic_op,
    apply_basic_op_naive,
    count_naive,
    count_proposed,
    generate_plan,
    precompute_diagonal,
    savings_report,
)


def test_naive_counts():
    assert count_naive(3).multipliers == 6
    assert dict(count_naive(3).adders) == {3: 2}
    assert count_naive(11).multipliers == 22
    assert dict(count_naive(11).adders) == {11: 2}
    assert count_naive(1).multipliers == 2
    assert dict(count_naive(1).adders) == {}


def test_naive_rejects_nonpositive():
    with pytest.raises(ValueError):
        count_naive(0)


def test_proposed_published_histograms():
    expected = {
        3: (4, {2: 4, 3: 2}),
        5: (7, {2: 6, 5: 2}),
        7: (10, {2: 8, 3: 6}),
        9: (12, {2: 12, 3: 8}),
        11: (15, {2: 16, 3: 6, 4: 2}),
    }
    for m, (mults, hist) in expected.items():
        got = count_proposed(generate_plan(m))
        assert got.multipliers == mults
        assert dict(got.adders) == hist


def test_proposed_small_and_irregular_sizes():
    assert count_proposed(generate_plan(1)).multipliers == 2
    assert dict(count_proposed(generate_plan(1)).adders) == {}
    assert dict(count_proposed(generate_plan(2)).adders) == {2: 4}
    assert dict(count_proposed(generate_plan(4)).adders) == {2: 6, 3: 2}


def test_proposed_multipliers_equal_plan_products():
    for m in range(1, 33):
        plan = generate_plan(m)
        assert count_proposed(plan).multipliers == plan.p


def test_adder_capacity_matches_instrumented_additions():
    # sum((fan_in - 1) * count) must equal one window's executed additions.
    for m in range(1, 17):
        plan = generate_plan(m)
        counter = OpCounter()
        apply_basic_op(precompute_diagonal(plan, [1] * m), [1] * (m + 1), counter)
        assert count_proposed(plan).scalar_additions == counter.adds

        counter = OpCounter()
        apply_basic_op_naive([1] * m, [1] * (m + 1), counter=counter)
        assert count_naive(m).scalar_additions == counter.adds


def test_histogram_is_sorted_and_positive():
    for m in range(1, 33):
        hist = count_proposed(generate_plan(m)).adders
        assert list(hist) == sorted(hist)
        assert all(v > 0 for v in hist.values())
        assert all(k >= 2 for k in hist)


def test_savings_published_rows():
    rows = savings_report([3, 5, 7, 9, 11])
    assert [(r.m, r.naive_multipliers, r.proposed_multipliers) for r in rows] == [
        (3, 6, 4),
        (5, 10, 7),
        (7, 14, 10),
        (9, 18, 12),
        (11, 22, 15),
    ]
    assert [r.savings_pct for r in rows] == [33.3, 30.0, 28.6, 33.3, 31.8]
    # Every published size saves approximately 30 percent; the 7-tap row is
    # the low point at 28.6.
    for row in rows:
        assert 28.0 <= row.savings_pct <= 34.0
