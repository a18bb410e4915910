"""Author: grouptree developers, Copyright 2026, MIT License"""


from grouptree.discretize import (
    GroupSpec, compute_range, assign_group, assign_groups,
    partition_by_groups, partition_by_category)
from grouptree.exceptions import AttributeKindError, DatasetError
from hypothesis import given, settings, assume
from hypothesis import strategies as st
from conftest import numeric_dataset, categorical_dataset
import numpy as np
import pytest


def test_compute_range(iris, separable):
    assert compute_range(separable, 0) == (0.0, 10.0)
    assert compute_range(iris, 0) == pytest.approx((4.3, 7.9))
    assert compute_range(separable.subset([2]), 0) == (2.0, 2.0)


def test_compute_range_errors(play, separable):
    with pytest.raises(DatasetError):
        compute_range(separable.subset([]), 0)
    with pytest.raises(AttributeKindError):
        compute_range(play, 0)


@pytest.mark.parametrize("value, group", [
    (0.0, 0), (2.4, 0), (2.5, 1), (5.0, 2), (7.49, 2), (7.5, 3), (10.0, 3)])
def test_assign_group_boundaries(value, group):
    assert assign_group(GroupSpec(0, 0.0, 10.0, 4), value) == group


def test_assign_group_clamps_out_of_range_values():
    spec = GroupSpec(0, 0.0, 10.0, 4)
    assert assign_group(spec, -3.0) == 0
    assert assign_group(spec, 25.0) == 3


def test_zero_width_range_maps_to_group_zero():
    spec = GroupSpec(0, 3.0, 3.0, 5)
    assert spec.width == 0
    assert assign_group(spec, 3.0) == 0
    assert assign_group(spec, 100.0) == 0
    assert assign_groups(spec, [1.0, 3.0, 9.0]).tolist() == [0, 0, 0]


def test_bounds():
    spec = GroupSpec(0, 0.0, 10.0, 4)
    assert spec.bounds(0) == (0.0, 2.5)
    assert spec.bounds(3) == (7.5, 10.0)


def test_group_spec_validation():
    with pytest.raises(DatasetError):
        GroupSpec(0, 1.0, 0.0, 2)
    with pytest.raises(DatasetError):
        GroupSpec(0, 0.0, 1.0, 0)
    with pytest.raises(DatasetError):
        GroupSpec(0, 0.0, float("inf"), 2)


def test_partition_by_groups(separable):
    low, high = compute_range(separable, 0)
    below, above = partition_by_groups(separable, GroupSpec(0, low, high, 2))
    assert below.labels == ("a",) * 5
    assert above.labels == ("b",) * 5


def test_partition_by_groups_keeps_empty_groups(separable):
    subsets = partition_by_groups(separable, GroupSpec(0, 0.0, 10.0, 10))
    assert len(subsets) == 10
    assert [len(s) for s in subsets] == [1, 1, 1, 1, 1, 0, 1, 1, 1, 2]


def test_partition_by_category(play):
    subsets = partition_by_category(play, 0)
    assert [value for value, _ in subsets] == ["sunny", "overcast", "rainy"]
    assert [len(s) for _, s in subsets] == [5, 4, 5]


def test_partition_by_category_rejects_numeric(separable):
    with pytest.raises(AttributeKindError):
        partition_by_category(separable, 0)


def test_categories_absent_from_a_node_are_omitted():
    d = categorical_dataset([(["red"], "a"), (["blue"], "b"), (["red"], "a")])
    subsets = partition_by_category(d.subset([0, 2]), 0)
    assert [value for value, _ in subsets] == ["red"]


finite = st.floats(-1e6, 1e6, allow_nan=False, allow_infinity=False)


@settings(max_examples=300, deadline=None)
@given(finite, finite, st.integers(1, 32), finite, finite)
def test_assign_group_is_monotone(a, b, k, x, y):
    low, high = min(a, b), max(a, b)
    spec = GroupSpec(0, low, high, k)
    if x > y:
        x, y = y, x
    assert 0 <= assign_group(spec, x) <= assign_group(spec, y) <= k - 1


@settings(max_examples=300, deadline=None)
@given(st.lists(finite, min_size=1, max_size=40), st.integers(1, 32))
def test_groups_cover_every_row_once(values, k):
    d = numeric_dataset([([v], "a") for v in values])
    low, high = compute_range(d, 0)
    subsets = partition_by_groups(d, GroupSpec(0, low, high, k))
    assert len(subsets) == k
    assert sum(len(s) for s in subsets) == len(values)
    assert sorted(r for s in subsets for r in s.column(0)) == sorted(float(v) for v in values)


@settings(max_examples=200, deadline=None)
@given(finite, st.floats(1e-3, 1e3), st.integers(1, 32))
def test_groups_are_equally_spaced(low, span, k):
    spec = GroupSpec(0, low, low + span, k)
    assume(spec.width > 0)
    widths = [spec.bounds(g)[1] - spec.bounds(g)[0] for g in range(k)]
    assert np.allclose(widths, spec.width, rtol=1e-6, atol=1e-6)


@settings(max_examples=200, deadline=None)
@given(st.lists(finite, min_size=1, max_size=40), st.integers(1, 32))
def test_vectorized_assignment_matches_scalar(values, k):
    spec = GroupSpec(0, min(values), max(values), k)
    assert assign_groups(spec, values).tolist() == [assign_group(spec, v) for v in values]


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 32), st.integers(1, 10), st.integers(-100, 100))
def test_one_group_per_distinct_equally_spaced_value(n, step, offset):
    d = numeric_dataset([([offset + i * step], "a") for i in range(n)])
    low, high = compute_range(d, 0)
    subsets = partition_by_groups(d, GroupSpec(0, low, high, n))
    assert [len(set(s.column(0))) for s in subsets] == [1] * n
