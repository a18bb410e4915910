"""Author: grouptree developers, Copyright 2026, MIT License"""


from grouptree.baselines.train import train
from grouptree.builders.id3_builder import ID3Builder


id3_variant = dict(
    logging_dir=None,
    max_groups=10,
    purity_threshold=1.0,
    id3_fixed_bins=3)


def id3(
    variant,
    dataset
):
    # baseline ID3 with numeric attributes binned once over their global range
    return train(ID3Builder, variant, dataset)
