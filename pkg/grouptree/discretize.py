"""Author: grouptree developers, Copyright 2026, MIT License"""


from grouptree.datasets.dataset import numeric_column
from grouptree.exceptions import AttributeKindError, DatasetError
from dataclasses import dataclass
import numpy as np
import math


@dataclass(frozen=True)
class GroupSpec:
    # groups are half open except the last, which is closed at max
    attribute_index: int
    min: float
    max: float
    k: int

    def __post_init__(self):
        if not (math.isfinite(self.min) and math.isfinite(self.max)) or self.min > self.max:
            raise DatasetError("invalid group range [{}, {}]".format(self.min, self.max))
        if self.k < 1:
            raise DatasetError("a grouping needs at least one group, got k={}".format(self.k))

    @property
    def width(self):
        return (self.max - self.min) / self.k

    def bounds(
        self,
        group
    ):
        # the interval covered by one group, the last one ends exactly at max
        lower = self.min + group * self.width
        upper = self.max if group == self.k - 1 else self.min + (group + 1) * self.width
        return lower, upper

    def to_dict(
        self
    ):
        return dict(attribute_index=self.attribute_index,
                    min=self.min, max=self.max, k=self.k)

    @classmethod
    def from_dict(
        cls,
        state
    ):
        return cls(int(state["attribute_index"]),
                   float(state["min"]), float(state["max"]), int(state["k"]))


def compute_range(
    d,
    attribute_index
):
    # range of a numeric attribute over the rows of this partition only
    if len(d) == 0:
        raise DatasetError("cannot compute the range of an empty dataset")
    column = numeric_column(d, attribute_index)
    return float(np.min(column)), float(np.max(column))


def assign_group(
    spec,
    value
):
    # a zero width range collapses into a single group
    if spec.width == 0:
        return 0

    # values outside the range clamp to the nearest end group
    position = (value - spec.min) / spec.width
    if position >= spec.k:
        return spec.k - 1
    if position < 0:
        return 0
    return int(min(math.floor(position), spec.k - 1))


def assign_groups(
    spec,
    values
):
    # vectorized assign_group over an array of values
    values = np.asarray(values, dtype=np.float64)
    if spec.width == 0:
        return np.zeros(values.shape, dtype=np.int64)
    groups = np.floor((values - spec.min) / spec.width)
    return np.clip(groups, 0, spec.k - 1).astype(np.int64)


def partition_by_groups(
    d,
    spec
):
    # route every row to its group keeping the original row order
    groups = assign_groups(spec, numeric_column(d, spec.attribute_index))
    return [d.subset(np.flatnonzero(groups == g).tolist()) for g in range(spec.k)]


def partition_by_category(
    d,
    attribute_index
):
    # one subset per observed category in first occurrence order
    schema = d.schemas[attribute_index]
    if schema.is_numeric:
        raise AttributeKindError(
            "attribute {!r} is numeric, a categorical attribute is required".format(
                schema.name))
    indices = dict()
    for i, value in enumerate(d.column(attribute_index)):
        indices.setdefault(value, []).append(i)
    return [(value, d.subset(rows)) for value, rows in indices.items()]
