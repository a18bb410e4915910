"""Author: grouptree developers, Copyright 2026, MIT License"""


from grouptree.splits.split import Split
from grouptree.discretize import GroupSpec, assign_group, partition_by_groups


class GroupedSplit(Split):

    def __init__(
            self,
            spec
    ):
        # one child per equal width group of a numeric attribute
        Split.__init__(self, spec.attribute_index)
        self.spec = spec

    @property
    def num_children(self):
        return self.spec.k

    def route(
            self,
            value
    ):
        # total by clamping, out of range values reach an end group
        return assign_group(self.spec, value)

    def partition(
            self,
            dataset
    ):
        return partition_by_groups(dataset, self.spec)

    def describe(
            self,
            child,
            attribute_name
    ):
        lower, upper = self.spec.bounds(child)
        closing = "]" if child == self.spec.k - 1 else ")"
        return "{} in [{!r}, {!r}{}".format(attribute_name, lower, upper, closing)

    def to_dict(
            self
    ):
        return dict(type="grouped", **self.spec.to_dict())

    @classmethod
    def from_dict(
            cls,
            state
    ):
        return cls(GroupSpec.from_dict(state))
