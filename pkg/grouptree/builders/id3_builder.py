"""Author: grouptree developers, Copyright 2026, MIT License"""


from grouptree.builders.builder import TreeBuilder, score_candidate, better
from grouptree.discretize import GroupSpec, compute_range
from grouptree.splits.grouped_split import GroupedSplit


class ID3Builder(TreeBuilder):

    algorithm = "id3"

    def __init__(
            self,
            params=None,
            logger=None,
            logging_prefix="id3/"
    ):
        # classic ID3 over categorical and globally pre binned numeric attributes
        TreeBuilder.__init__(
            self,
            params=params,
            logger=logger,
            logging_prefix=logging_prefix)
        self.global_specs = dict()

    def prepare(
            self,
            dataset
    ):
        TreeBuilder.prepare(self, dataset)

        # bin every numeric attribute once over its range on the whole training set
        self.global_specs = dict()
        for i, schema in enumerate(dataset.schemas):
            if schema.is_numeric:
                low, high = compute_range(dataset, i)
                self.global_specs[i] = GroupSpec(i, low, high, self.params.id3_fixed_bins)

    def select_split(
            self,
            dataset,
            support,
            attributes
    ):
        # pick the attribute with maximal gain, ties go to the lowest index
        best = None
        for i in attributes:
            if i in self.global_specs:
                split = GroupedSplit(self.global_specs[i])
                candidate = score_candidate(support, split, split.partition(dataset))
            else:
                candidate = self.categorical_candidate(dataset, support, i)
            if better(candidate, best):
                best = candidate
        return best


def build_id3(
        d,
        params=None,
        logger=None
):
    return ID3Builder(params=params, logger=logger).build(d)
