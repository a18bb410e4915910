"""Author: grouptree developers, Copyright 2026, MIT License"""


from grouptree.evaluation import evaluate
from grouptree.loggers.tensorboard_logger import TensorboardLogger
from grouptree.params import InductionParams
from grouptree.savers.local_saver import LocalSaver


def params_from_variant(
    variant
):
    # pull the induction settings out of an experiment variant
    return InductionParams(
        max_groups=variant["max_groups"],
        purity_threshold=variant["purity_threshold"],
        id3_fixed_bins=variant["id3_fixed_bins"])


def train(
    builder_class,
    variant,
    dataset
):
    # create a logging instance when a logging directory is given
    logging_dir = variant.get("logging_dir")
    logger = TensorboardLogger(logging_dir) if logging_dir else None

    # grow the tree and score it on its own training data
    builder = builder_class(params=params_from_variant(variant), logger=logger)
    tree = builder.build(dataset)
    report = evaluate(tree, dataset, logger=logger)

    # save the tree next to the training summaries
    if logging_dir:
        LocalSaver(logging_dir, **{tree.algorithm: tree}).save()
        logger.flush()
    return tree, report
