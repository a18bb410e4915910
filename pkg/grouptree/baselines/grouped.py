"""Author: grouptree developers, Copyright 2026, MIT License"""


from grouptree.baselines.train import train
from grouptree.builders.grouped_builder import GroupedBuilder


grouped_variant = dict(
    logging_dir=None,
    max_groups=10,
    purity_threshold=1.0,
    id3_fixed_bins=3)


def grouped(
    variant,
    dataset
):
    # escalate equal width groups at every node until the children are pure
    return train(GroupedBuilder, variant, dataset)
