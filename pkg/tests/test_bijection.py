"""Peak deletion, insertion plans, fibers, and the joint tally."""

from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from dyckpeaks import (
    DyckPath,
    InsertionPlan,
    InvalidPlan,
    PeakDeficit,
    binomial,
    catalan,
    enumerate_paths,
    enumerate_paths_with_peaks,
    expand,
    fiber,
    joint_distribution,
    parse_path,
    peaks,
    plan_of,
    reduce,
    refined_count,
    stats,
)

from helpers import brute_dyck_texts

FIGURE = "UUDUDUUUDUDDDDUUDD"
FIGURE_BASE = "UUUDDDUD"
FIGURE_PLAN = (0, 2, 0, 1, 0, 0, 0, 0, 0)


@st.composite
def insertion_plans(draw) -> InsertionPlan:
    base_texts = ["", "UD", "UUDD", "UDUD", "UUDUDD", "UUUDDDUD", "UDUDUDUDUD"]
    base = DyckPath(draw(st.sampled_from(base_texts)))
    slots = 2 * base.semilength + 1
    vector = [0] * slots
    for _ in range(draw(st.integers(0, 4))):
        vector[draw(st.integers(0, slots - 1))] += 1
    return InsertionPlan(base=base, multiplicities=tuple(vector))


class TestReduce:
    def test_figure(self):
        result = reduce(parse_path(FIGURE))
        assert result.base.text == FIGURE_BASE
        assert result.base.semilength == 4
        assert len(peaks(result.base)) == 2
        assert result.original_stats.peak_count == 5
        assert result.original_stats.plateau_count == 2

    def test_single_peak_to_empty(self):
        assert reduce(parse_path("UD")).base.text == ""

    def test_nested(self):
        assert reduce(parse_path("UUDD")).base.text == "UD"

    def test_empty_input(self):
        result = reduce(DyckPath(""))
        assert result.base.text == ""
        assert result.plan.multiplicities == (0,)

    def test_semilength_drops_by_peak_count(self):
        for m in range(8):
            for text in brute_dyck_texts(m):
                result = reduce(DyckPath(text))
                r = result.original_stats.peak_count
                assert result.base.semilength == m - r

    def test_statistic_transport(self):
        for m in range(8):
            for text in brute_dyck_texts(m):
                result = reduce(DyckPath(text))
                assert len(peaks(result.base)) == result.original_stats.plateau_count


class TestPlanOf:
    def test_figure(self):
        plan = plan_of(parse_path(FIGURE))
        assert plan.base.text == FIGURE_BASE
        assert plan.multiplicities == FIGURE_PLAN
        assert plan.inserted == 3

    def test_nested(self):
        plan = plan_of(parse_path("UUDD"))
        assert plan.base.text == "UD"
        assert plan.multiplicities == (0, 0, 0)

    def test_sawtooth_collapses_to_origin(self):
        plan = plan_of(parse_path("UDUD"))
        assert plan.base.text == ""
        assert plan.multiplicities == (2,)

    def test_vector_length_and_sum(self):
        for m in range(8):
            for text in brute_dyck_texts(m):
                plan = plan_of(DyckPath(text))
                assert len(plan.multiplicities) == 2 * plan.base.semilength + 1
                assert all(v >= 0 for v in plan.multiplicities)
                r = stats(DyckPath(text)).peak_count
                s = len(peaks(plan.base))
                assert plan.inserted == r - s


class TestExpand:
    def test_figure(self):
        plan = InsertionPlan(DyckPath(FIGURE_BASE), FIGURE_PLAN)
        assert expand(plan).text == FIGURE

    def test_examples(self):
        assert expand(InsertionPlan(DyckPath("UUDD"), (0, 1, 0, 0, 0))).text == "UUDUUDDD"
        assert expand(InsertionPlan(DyckPath("UD"), (0, 0, 0))).text == "UUDD"
        assert expand(InsertionPlan(DyckPath(""), (3,))).text == "UDUDUD"

    def test_output_statistics(self):
        plan = InsertionPlan(DyckPath("UUDD"), (0, 1, 0, 0, 0))
        report = stats(expand(plan))
        assert report.peak_count == 2
        assert report.plateau_count == 1

    def test_invalid_plans(self):
        with pytest.raises(InvalidPlan):
            expand(InsertionPlan(DyckPath("UD"), (0, 0)))
        with pytest.raises(InvalidPlan):
            expand(InsertionPlan(DyckPath("UD"), (0, -1, 0)))

    def test_round_trip_a_exhaustive(self):
        for m in range(8):
            for text in brute_dyck_texts(m):
                assert expand(plan_of(DyckPath(text))).text == text

    @given(insertion_plans())
    def test_round_trip_b(self, plan):
        assert plan_of(expand(plan)) == plan

    @given(insertion_plans())
    def test_expand_statistics(self, plan):
        base_peaks = len(peaks(plan.base))
        path = expand(plan)
        report = stats(path)
        assert path.semilength == plan.base.semilength + plan.inserted + base_peaks
        assert report.peak_count == plan.inserted + base_peaks
        assert report.plateau_count == base_peaks


class TestFiber:
    def test_frozen_example(self):
        got = [p.text for p in fiber(DyckPath("UD"), 2)]
        assert sorted(got) == ["UDUUDD", "UUDDUD", "UUDUDD"]
        assert len(got) == binomial(3, 1)

    def test_order_follows_multiplicity_vectors(self):
        # vectors (0,0,1) < (0,1,0) < (1,0,0) expand in this order
        got = [p.text for p in fiber(DyckPath("UD"), 2)]
        assert got == ["UUDDUD", "UUDUDD", "UDUUDD"]

    def test_no_free_insertions(self):
        assert [p.text for p in fiber(DyckPath("UD"), 1)] == ["UUDD"]
        assert [p.text for p in fiber(DyckPath("UDUD"), 2)] == ["UUDDUUDD"]

    def test_empty_base(self):
        assert [p.text for p in fiber(DyckPath(""), 3)] == ["UDUDUD"]

    def test_peak_deficit(self):
        with pytest.raises(PeakDeficit):
            list(fiber(DyckPath("UDUD"), 1))

    def test_fiber_against_brute_force(self):
        # every Dyck 3-path with 2 peaks reduces to UD, and fiber finds them
        expected = {
            t for t in brute_dyck_texts(3)
            if stats(DyckPath(t)).peak_count == 2
            and reduce(DyckPath(t)).base.text == "UD"
        }
        assert {p.text for p in fiber(DyckPath("UD"), 2)} == expected

    def test_sizes(self):
        for n in range(5):
            for base in enumerate_paths(n):
                s = len(peaks(base))
                for r in range(s, s + 4):
                    size = sum(1 for _ in fiber(base, r))
                    assert size == binomial(2 * n + r - s, r - s)

    def test_partition(self):
        for m in range(1, 7):
            for r in range(1, m):
                stratum = {p.text for p in enumerate_paths_with_peaks(m, r)}
                seen: set[str] = set()
                for base in enumerate_paths(m - r):
                    if len(peaks(base)) > r:
                        continue
                    for path in fiber(base, r):
                        assert path.text not in seen
                        seen.add(path.text)
                        assert reduce(path).base.text == base.text
                        assert stats(path).plateau_count == len(peaks(base))
                assert seen == stratum


class TestJointDistribution:
    def test_m3(self):
        assert joint_distribution(3) == {(1, 1): 1, (2, 1): 3, (3, 0): 1}

    def test_m0(self):
        assert joint_distribution(0) == {(0, 0): 1}

    def test_m4_two_peak_rows(self):
        table = joint_distribution(4)
        assert table[2, 1] == 5
        assert table[2, 2] == 1
        assert table[2, 1] == refined_count(2, 2, 1)
        assert table[2, 2] == refined_count(2, 2, 2)

    def test_total_is_catalan(self):
        for m in range(9):
            assert sum(joint_distribution(m).values()) == catalan(m)
