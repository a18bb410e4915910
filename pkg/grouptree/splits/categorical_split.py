"""Author: grouptree developers, Copyright 2026, MIT License"""


from grouptree.splits.split import Split
from grouptree.discretize import partition_by_category


class CategoricalSplit(Split):

    def __init__(
            self,
            attribute_index,
            values
    ):
        # one child per category of the training domain
        Split.__init__(self, attribute_index)
        self.values = tuple(values)
        self.index = {value: i for i, value in enumerate(self.values)}

    @property
    def num_children(self):
        return len(self.values)

    def route(
            self,
            value
    ):
        return self.index.get(value)

    def partition(
            self,
            dataset
    ):
        # keep the stored category order even if some categories are absent
        subsets = dict(partition_by_category(dataset, self.attribute_index))
        return [subsets[v] if v in subsets else dataset.subset([]) for v in self.values]

    def describe(
            self,
            child,
            attribute_name
    ):
        return "{} = {}".format(attribute_name, self.values[child])

    def to_dict(
            self
    ):
        return dict(type="categorical",
                    attribute_index=self.attribute_index,
                    values=list(self.values))
