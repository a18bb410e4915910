"""Author: grouptree developers, Copyright 2026, MIT License"""


from grouptree.datasets.dataset import class_distribution
from grouptree.exceptions import PartitionError
from dataclasses import dataclass
import numpy as np


@dataclass(frozen=True)
class Partition:
    blocks: tuple

    @classmethod
    def from_datasets(
        cls,
        subsets
    ):
        return cls(tuple(class_distribution(s) for s in subsets))

    @property
    def total(self):
        return sum(block.total for block in self.blocks)


def info(
    c
):
    # entropy in bits of the class distribution, with 0 * log2(0) taken as 0
    counts = c.as_array()
    total = counts.sum()
    if total == 0:
        return 0.0
    p = counts[counts > 0] / total
    return max(0.0, float(-np.sum(p * np.log2(p))))


def expected_info(
    p
):
    # entropy of each block weighted by the fraction of rows it holds
    if len(p.blocks) == 0:
        raise PartitionError("a partition needs at least one block")
    total = p.total
    if total == 0:
        raise PartitionError("every block of the partition is empty")
    return float(sum(
        (block.total / total) * info(block) for block in p.blocks if block.total > 0))


def gain(
    parent,
    p
):
    # reduction in entropy achieved by splitting parent into the blocks of p
    if len(p.blocks) == 0:
        raise PartitionError("a partition needs at least one block")
    if any(block.labels != parent.labels for block in p.blocks):
        raise PartitionError("partition blocks and parent count different labels")
    summed = p.blocks[0]
    for block in p.blocks[1:]:
        summed = summed + block
    if summed.labels != parent.labels or summed.counts != parent.counts:
        raise PartitionError(
            "partition blocks sum to {} but the parent holds {}".format(
                summed.as_dict(), parent.as_dict()))
    return info(parent) - expected_info(p)
