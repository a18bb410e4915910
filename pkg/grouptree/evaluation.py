"""Author: grouptree developers, Copyright 2026, MIT License"""


from grouptree.builders.grouped_builder import GroupedBuilder
from grouptree.builders.id3_builder import ID3Builder
from grouptree.datasets.dataset import holdout_split
from grouptree.exceptions import SchemaMismatchError, DatasetError
from grouptree.launch import launch_local
from grouptree.params import InductionParams
from grouptree.trees.decision_tree import classify, tree_stats
from dataclasses import dataclass
import pandas as pd
import numpy as np
import json


BUILDERS = dict(id3=ID3Builder, grouped=GroupedBuilder)


@dataclass(frozen=True)
class EvalReport:
    # confusion is indexed by (true label, predicted label) in the order of labels
    algorithm: str
    labels: tuple
    confusion: tuple
    n: int
    tree_stats: dict

    @property
    def correct(self):
        return int(sum(self.confusion[i][i] for i in range(len(self.labels))))

    @property
    def accuracy(self):
        return self.correct / self.n

    @property
    def misclassification_ratio(self):
        return 1.0 - self.accuracy

    def confusion_frame(
        self
    ):
        frame = pd.DataFrame(
            np.asarray(self.confusion, dtype=np.int64),
            index=pd.Index(self.labels, name="actual"),
            columns=pd.Index(self.labels, name="predicted"))
        return frame

    def to_dict(
        self
    ):
        return dict(
            algorithm=self.algorithm,
            accuracy=self.accuracy,
            misclassification_ratio=self.misclassification_ratio,
            n=self.n,
            labels=list(self.labels),
            confusion=[list(row) for row in self.confusion],
            tree_stats=dict(self.tree_stats))


def check_schema(
    t,
    d
):
    # a dataset can only be scored by a tree trained on the same attributes
    if tuple(d.schemas) != tuple(t.schemas):
        raise SchemaMismatchError(
            "dataset attributes {} do not match the tree attributes {}".format(
                [(s.name, s.kind) for s in d.schemas],
                [(s.name, s.kind) for s in t.schemas]))


def evaluate(
    t,
    d,
    logger=None
):
    check_schema(t, d)
    if len(d) == 0:
        raise DatasetError("cannot evaluate a tree on an empty dataset")

    # labels the tree never saw are appended after the training labels
    labels = list(t.class_labels)
    for label in d.class_labels:
        if label not in labels:
            labels.append(label)
    index = {label: i for i, label in enumerate(labels)}

    # tally (true, predicted) pairs for every row
    confusion = np.zeros([len(labels), len(labels)], dtype=np.int64)
    for values, label in d.rows:
        confusion[index[label], index[classify(t, values)]] += 1

    report = EvalReport(
        algorithm=t.algorithm,
        labels=tuple(labels),
        confusion=tuple(tuple(int(c) for c in row) for row in confusion),
        n=len(d),
        tree_stats=tree_stats(t))

    if logger is not None:
        logger.record_scalars("eval/{}/".format(t.algorithm), dict(
            accuracy=report.accuracy,
            misclassification_ratio=report.misclassification_ratio))
    return report


def fit_and_evaluate(
    variant,
    dataset
):
    # build one tree and score it, on a holdout part when one is requested
    train, test = dataset, dataset
    if variant.get("holdout") is not None:
        train, test = holdout_split(dataset, variant["holdout"], variant.get("seed", 0))

    builder = BUILDERS[variant["algorithm"]](
        params=variant["params"],
        logger=variant.get("logger"))
    tree = builder.build(train)
    return tree, evaluate(tree, test, logger=variant.get("logger"))


def compare_models(
    d,
    params=None,
    holdout=None,
    seed=0,
    num_workers=1,
    logger=None
):
    # with a holdout fraction both trees train on the same seeded part and
    # are scored on the rest, otherwise they are scored on the training rows
    if len(d) == 0:
        raise DatasetError("cannot compare classifiers on an empty dataset")
    params = params if params is not None else InductionParams()

    variants = [dict(algorithm=algorithm,
                     params=params,
                     holdout=holdout,
                     seed=seed,
                     logger=logger if num_workers == 1 else None)
                for algorithm in ("id3", "grouped")]
    results = launch_local(fit_and_evaluate, variants, d, num_workers=num_workers)

    if logger is not None and num_workers > 1:
        for _, report in results:
            logger.record_scalars("eval/{}/".format(report.algorithm), dict(
                accuracy=report.accuracy,
                misclassification_ratio=report.misclassification_ratio))
    return {v["algorithm"]: result for v, result in zip(variants, results)}


def compare(
    d,
    params=None,
    holdout=None,
    seed=0,
    num_workers=1,
    logger=None
):
    # reports of both algorithms keyed by algorithm name
    models = compare_models(
        d, params=params, holdout=holdout, seed=seed, num_workers=num_workers, logger=logger)
    return {name: report for name, (_, report) in models.items()}


def format_report(
    report
):
    stats = report.tree_stats
    lines = [
        "algorithm: {}".format(report.algorithm),
        "accuracy: {:.6f}".format(report.accuracy),
        "misclassification ratio: {:.6f}".format(report.misclassification_ratio),
        "rows: {}".format(report.n),
        "depth: {}".format(stats["depth"]),
        "nodes: {}".format(stats["node_count"]),
        "leaves: {}".format(stats["leaf_count"]),
        "confusion matrix:",
        report.confusion_frame().to_string()]
    return "\n".join(lines) + "\n"


def format_comparison(
    reports
):
    # one text block per algorithm, separated by a blank line
    return "\n".join(format_report(reports[name]) for name in sorted(reports))


def comparison_to_json(
    reports
):
    return json.dumps({name: report.to_dict() for name, report in reports.items()},
                      sort_keys=True, indent=2) + "\n"
