"""Author: grouptree developers, Copyright 2026, MIT License"""


from grouptree.builders.grouped_builder import build_grouped
from grouptree.builders.id3_builder import build_id3
from grouptree.datasets.dataset import AttributeSchema, ClassCounts, NUMERIC
from grouptree.evaluation import (
    evaluate, compare, compare_models, format_comparison, comparison_to_json)
from grouptree.exceptions import SchemaMismatchError, DatasetError
from grouptree.params import InductionParams
from grouptree.trees.decision_tree import DecisionTree, classify
from grouptree.trees.node import Leaf
from conftest import RecordingLogger, numeric_dataset
import pytest
import json


def test_pure_tree_scores_perfectly_on_its_training_data(separable):
    report = evaluate(build_grouped(separable), separable)
    assert report.accuracy == 1.0
    assert report.misclassification_ratio == 0.0
    assert report.confusion == ((5, 0), (0, 5))
    assert report.n == 10


def test_single_leaf_accuracy_is_the_class_share():
    d = numeric_dataset([([i], "c") for i in range(3)] + [([i], "d") for i in range(7)])
    tree = DecisionTree(Leaf("c", ClassCounts(("c", "d"), (3, 7))),
                        (AttributeSchema("x0", NUMERIC),), ("c", "d"),
                        InductionParams(), "grouped")
    report = evaluate(tree, d)
    assert report.accuracy == pytest.approx(0.3)
    assert report.confusion == ((3, 0), (7, 0))
    assert report.accuracy + report.misclassification_ratio == 1.0


def test_id3_on_iris(iris):
    tree = build_id3(iris)
    report = evaluate(tree, iris)
    tally = sum(classify(tree, values) == label for values, label in iris.rows)
    assert report.correct == tally
    assert sum(sum(row) for row in report.confusion) == 150
    assert report.accuracy == pytest.approx(0.98)
    assert report.accuracy + report.misclassification_ratio == 1.0


def test_evaluate_is_permutation_invariant(iris):
    tree = build_id3(iris)
    reversed_rows = iris.subset(list(reversed(range(len(iris)))))
    assert evaluate(tree, reversed_rows) == evaluate(tree, iris)


def test_labels_unknown_to_the_tree_are_appended(separable):
    tree = build_grouped(numeric_dataset([([0], "a"), ([1], "a")]))
    assert tree.class_labels == ("a",)
    report = evaluate(tree, separable)
    assert report.labels == ("a", "b")
    assert report.confusion == ((5, 0), (5, 0))
    assert report.accuracy == 0.5


def test_evaluate_errors(iris, play, separable):
    with pytest.raises(SchemaMismatchError):
        evaluate(build_id3(iris), play)
    with pytest.raises(DatasetError):
        evaluate(build_grouped(separable), separable.subset([]))


def test_compare_on_the_interleaved_fixture(interleaved):
    models = compare_models(interleaved)
    (id3_tree, id3_report), (grouped_tree, grouped_report) = models["id3"], models["grouped"]
    assert id3_report.accuracy == grouped_report.accuracy == 1.0
    assert grouped_report.tree_stats["depth"] == 1
    assert id3_report.tree_stats["depth"] == 2
    assert grouped_report.tree_stats["depth"] <= id3_report.tree_stats["depth"]
    assert id3_tree.algorithm == "id3"
    assert grouped_tree.algorithm == "grouped"


def test_compare_single_class(separable):
    reports = compare(separable.subset([0, 1, 2]))
    for report in reports.values():
        assert report.accuracy == 1.0
        assert report.tree_stats == dict(depth=0, node_count=1, leaf_count=1)


def test_grouped_is_at_least_as_accurate_as_id3_on_iris(iris):
    reports = compare(iris)
    grouped, id3 = reports["grouped"].accuracy, reports["id3"].accuracy
    assert grouped >= id3, "grouped accuracy {} fell below id3 accuracy {}".format(grouped, id3)
    assert grouped == 1.0


def test_compare_with_a_holdout(iris):
    reports = compare(iris, holdout=0.7, seed=1)
    assert reports["id3"].n == reports["grouped"].n == 45
    assert reports == compare(iris, holdout=0.7, seed=1)


def test_compare_in_parallel_matches_sequential(interleaved):
    assert compare(interleaved, num_workers=2) == compare(interleaved)


def test_compare_rejects_empty_data(separable):
    with pytest.raises(DatasetError):
        compare(separable.subset([]))


def test_compare_logs_reports(interleaved):
    logger = RecordingLogger()
    compare(interleaved, params=InductionParams(max_groups=4), logger=logger)
    assert ("eval/id3/accuracy", 1.0) in logger.records
    assert ("eval/grouped/misclassification_ratio", 0.0) in logger.records
    assert "grouped/escalation_rounds" in logger.keys()


def test_report_formats(interleaved):
    reports = compare(interleaved)
    text = format_comparison(reports)
    assert text.count("accuracy: 1.000000") == 2
    assert text.count("depth: ") == 2
    assert text.index("algorithm: grouped") < text.index("algorithm: id3")

    state = json.loads(comparison_to_json(reports))
    assert set(state) == {"id3", "grouped"}
    assert state["grouped"]["tree_stats"]["depth"] == 1
    assert state["id3"]["confusion"] == [[5, 0], [0, 5]]
    assert comparison_to_json(reports) == comparison_to_json(compare(interleaved))


def test_confusion_frame(iris):
    frame = evaluate(build_id3(iris), iris).confusion_frame()
    assert frame.shape == (3, 3)
    assert list(frame.index) == list(iris.class_labels)
    assert frame.index.name == "actual"
    assert frame.columns.name == "predicted"
    assert int(frame.values.sum()) == 150
