"""Author: grouptree developers, Copyright 2026, MIT License"""


from grouptree.builders.builder import TreeBuilder, score_candidate, better
from grouptree.datasets.dataset import class_distribution
from grouptree.discretize import GroupSpec, compute_range, partition_by_groups
from grouptree.exceptions import InductionError
from grouptree.splits.grouped_split import GroupedSplit


class GroupedBuilder(TreeBuilder):

    algorithm = "grouped"

    def __init__(
            self,
            params=None,
            logger=None,
            logging_prefix="grouped/"
    ):
        TreeBuilder.__init__(
            self,
            params=params,
            logger=logger,
            logging_prefix=logging_prefix)

    def is_leaf(
            self,
            support
    ):
        # nodes whose majority class reaches the purity threshold become leaves
        return support.majority_fraction() >= self.params.purity_threshold

    def is_pure_split(
            self,
            candidate
    ):
        # every non empty child must pass the purity test
        return all(len(s) == 0 or self.is_leaf(class_distribution(s))
                   for s in candidate.subsets)

    def build(
            self,
            dataset
    ):
        if dataset.num_attributes == 0:
            raise InductionError("cannot build a grouped tree without attributes")
        return TreeBuilder.build(self, dataset)

    def select_split(
            self,
            dataset,
            support,
            attributes
    ):
        # categorical partitions do not depend on the number of groups
        categorical = dict()
        ranges = dict()
        distinct = dict()
        for i in attributes:
            if dataset.schemas[i].is_numeric:
                ranges[i] = compute_range(dataset, i)
                distinct[i] = len(set(dataset.column(i)))
            else:
                categorical[i] = self.categorical_candidate(dataset, support, i)

        best_overall = None
        accepted = None
        rounds = 0
        for k in range(2, self.params.max_groups + 1):

            # evaluate every attribute with k groups over the local ranges
            best = None
            for i in attributes:
                if i in categorical:
                    candidate = categorical[i]

                # constant attributes cannot split and k never exceeds the distinct values
                elif k <= distinct[i]:
                    low, high = ranges[i]
                    split = GroupedSplit(GroupSpec(i, low, high, k))
                    candidate = score_candidate(
                        support, split, partition_by_groups(dataset, split.spec))
                else:
                    continue
                if better(candidate, best):
                    best = candidate

            if best is None:
                break
            rounds += 1
            if better(best, best_overall):
                best_overall = best

            # stop escalating once the best split leaves only pure children
            if self.is_pure_split(best):
                accepted = best
                break
            if not any(n > k for n in distinct.values()):
                break

        if accepted is None:
            accepted = best_overall
        self.record("escalation_rounds", rounds)
        if accepted is not None and isinstance(accepted.split, GroupedSplit):
            self.record("group_count", accepted.split.spec.k)
        return accepted


def build_grouped(
        d,
        params=None,
        logger=None
):
    return GroupedBuilder(params=params, logger=logger).build(d)
