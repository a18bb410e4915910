"""Author: grouptree developers, Copyright 2026, MIT License"""


from grouptree.baselines.train import params_from_variant
from grouptree.evaluation import compare_models
from grouptree.loggers.tensorboard_logger import TensorboardLogger
from grouptree.savers.local_saver import LocalSaver


compare_variant = dict(
    logging_dir=None,
    max_groups=10,
    purity_threshold=1.0,
    id3_fixed_bins=3,
    holdout=None,
    seed=0,
    num_workers=1)


def compare(
    variant,
    dataset
):
    # create a logging instance when a logging directory is given
    logging_dir = variant.get("logging_dir")
    logger = TensorboardLogger(logging_dir) if logging_dir else None

    # build and score both trees with identical settings
    models = compare_models(
        dataset,
        params=params_from_variant(variant),
        holdout=variant["holdout"],
        seed=variant["seed"],
        num_workers=variant["num_workers"],
        logger=logger)

    # save both trees to the disk
    if logging_dir:
        LocalSaver(logging_dir, **{name: tree for name, (tree, _) in models.items()}).save()
        logger.flush()
    return {name: report for name, (_, report) in models.items()}
