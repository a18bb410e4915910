"""Author: grouptree developers, Copyright 2026, MIT License"""


from grouptree import EPSILON
from grouptree.datasets.dataset import ClassCounts, class_distribution
from grouptree.exceptions import InductionError
from grouptree.measures import Partition, gain
from grouptree.params import InductionParams
from grouptree.splits.categorical_split import CategoricalSplit
from grouptree.trees.decision_tree import DecisionTree, tree_stats
from grouptree.trees.node import Leaf, InternalNode
from abc import ABC, abstractmethod
from collections import namedtuple


Candidate = namedtuple("Candidate", ["split", "subsets", "gain"])


def score_candidate(
        support,
        split,
        subsets
):
    # information gain of the partition a split induces on the node rows
    return Candidate(split, subsets, gain(support, Partition.from_datasets(subsets)))


def better(
        candidate,
        best
):
    # strictly better beyond the tolerance, so earlier candidates win ties
    return best is None or candidate.gain > best.gain + EPSILON


class TreeBuilder(ABC):

    algorithm = None

    def __init__(
            self,
            params=None,
            logger=None,
            logging_prefix="builder/"
    ):
        # settings shared by every builder
        self.params = params if params is not None else InductionParams()

        # logging
        self.logger = logger
        self.logging_prefix = logging_prefix
        self.domains = dict()

    def record(
            self,
            key,
            value
    ):
        # record a value using the monitor
        if self.logger is not None:
            self.logger.record(self.logging_prefix + key, value)

    def is_leaf(
            self,
            support
    ):
        # a node whose rows all share one class becomes a leaf
        return support.is_pure()

    def prepare(
            self,
            dataset
    ):
        # every categorical attribute keeps its training domain in first occurrence order
        # so values missing at a node still get a child of their own
        self.domains = {i: tuple(dict.fromkeys(dataset.column(i)))
                        for i, schema in enumerate(dataset.schemas) if not schema.is_numeric}

    def categorical_candidate(
            self,
            dataset,
            support,
            attribute_index
    ):
        split = CategoricalSplit(attribute_index, self.domains[attribute_index])
        return score_candidate(support, split, split.partition(dataset))

    @abstractmethod
    def select_split(
            self,
            dataset,
            support,
            attributes
    ):
        # return the Candidate to split on, or None when nothing can split
        return NotImplemented

    def build(
            self,
            dataset
    ):
        if len(dataset) == 0:
            raise InductionError("cannot build a tree from an empty dataset")
        self.prepare(dataset)

        # grow the tree from the root with every attribute available
        root = self.build_node(dataset, tuple(range(dataset.num_attributes)), 0)
        tree = DecisionTree(
            root,
            dataset.schemas,
            dataset.class_labels,
            self.params,
            self.algorithm,
            class_name=dataset.class_name)

        stats = tree_stats(tree)
        self.record("depth", stats["depth"])
        self.record("node_count", stats["node_count"])
        self.record("leaf_count", stats["leaf_count"])
        return tree

    def build_node(
            self,
            dataset,
            attributes,
            depth
    ):
        support = class_distribution(dataset)
        majority = support.majority()

        # pure nodes and nodes without attributes left become leaves
        if self.is_leaf(support) or not attributes:
            return Leaf(majority, support)

        # splits that carry no information also become leaves
        candidate = self.select_split(dataset, support, attributes)
        if candidate is None or candidate.gain <= EPSILON:
            return Leaf(majority, support)

        attribute_index = candidate.split.attribute_index
        self.record("attribute", attribute_index)
        self.record("gain", candidate.gain)
        self.record("node_depth", depth)

        # the chosen attribute is consumed for the whole subtree
        remaining = tuple(a for a in attributes if a != attribute_index)
        children = []
        for subset in candidate.subsets:
            if len(subset) == 0:
                children.append(Leaf(majority, ClassCounts.zeros(dataset.class_labels)))
            else:
                children.append(self.build_node(subset, remaining, depth + 1))
        return InternalNode(candidate.split, tuple(children), majority, support)
