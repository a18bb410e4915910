"""Author: grouptree developers, Copyright 2026, MIT License"""


from grouptree.baselines.compare import compare, compare_variant
from grouptree.baselines.grouped import grouped, grouped_variant
from grouptree.baselines.id3 import id3, id3_variant
from grouptree.datasets.csv_dataset import parse_csv, parse_rows
from grouptree.datasets.synthetic import generate_synthetic
from grouptree.evaluation import format_comparison, comparison_to_json
from grouptree.exceptions import GrouptreeError
from grouptree.params import InductionParams
from grouptree.rules.rule import extract_rules, format_rules
from grouptree.savers.local_saver import read_text, write_text
from grouptree.trees.decision_tree import DecisionTree, classify
from grouptree.trees.dot import to_dot
import tensorflow as tf
import argparse
import json
import sys


EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


BASELINES = dict(
    id3=(id3, id3_variant),
    grouped=(grouped, grouped_variant))


class UsageError(Exception):
    pass


class ArgumentParser(argparse.ArgumentParser):

    def error(
        self,
        message
    ):
        # report usage errors to main instead of exiting with status 2
        raise UsageError(message)


def add_input_arguments(
    parser,
    required=True
):
    parser.add_argument('--input', type=str, required=required)
    parser.add_argument('--class-column', type=str, default=None)


def add_induction_arguments(
    parser
):
    parser.add_argument('--algorithm', choices=["id3", "grouped"], default="grouped")
    parser.add_argument('--max-groups', type=int, default=10)
    parser.add_argument('--purity', type=float, default=1.0)
    parser.add_argument('--id3-bins', type=int, default=3)
    parser.add_argument('--logging-dir', type=str, default=None)


def build_parser():
    parser = ArgumentParser(
        prog="grouptree",
        description="Train, compare and export ID3 and grouped decision trees.")
    commands = parser.add_subparsers(dest="command", parser_class=ArgumentParser)
    commands.required = True

    describe = commands.add_parser("describe", help="summarize a csv dataset")
    add_input_arguments(describe)
    describe.add_argument('--output', type=str, default=None)

    train = commands.add_parser("train", help="train a tree and write its json")
    add_input_arguments(train)
    add_induction_arguments(train)
    train.add_argument('--output', type=str, default=None)

    classify_parser = commands.add_parser("classify", help="predict labels of csv rows")
    classify_parser.add_argument('--tree', type=str, required=True)
    classify_parser.add_argument('--input', type=str, required=True)
    classify_parser.add_argument('--output', type=str, default=None)

    compare_parser = commands.add_parser("compare", help="compare ID3 with grouped trees")
    add_input_arguments(compare_parser)
    add_induction_arguments(compare_parser)
    compare_parser.add_argument('--holdout', type=float, default=None)
    compare_parser.add_argument('--seed', type=int, default=0)
    compare_parser.add_argument('--workers', type=int, default=1)
    compare_parser.add_argument('--format', choices=["text", "json"], default="text")
    compare_parser.add_argument('--output', type=str, default=None)

    # exports read a saved tree or train one from a csv file
    for name in ("export-dot", "export-rules"):
        export = commands.add_parser(name, help="write the tree as " + name[7:])
        export.add_argument('--tree', type=str, default=None)
        add_input_arguments(export, required=False)
        add_induction_arguments(export)
        export.add_argument('--output', type=str, default=None)

    synthetic = commands.add_parser("gen-synthetic", help="write a seeded synthetic csv")
    synthetic.add_argument('--rows', type=int, default=50)
    synthetic.add_argument('--attributes', type=int, default=4)
    synthetic.add_argument('--classes', type=int, default=2)
    synthetic.add_argument('--seed', type=int, default=0)
    synthetic.add_argument('--output', type=str, default=None)
    return parser


def emit(
    args,
    text
):
    # write to the output file when one is given, otherwise to standard output
    if args.output:
        write_text(args.output, text)
    else:
        sys.stdout.write(text)


def variant_from_args(
    args,
    variant
):
    # validate the induction flags before any data is read
    variant = dict(
        variant,
        max_groups=args.max_groups,
        purity_threshold=args.purity,
        id3_fixed_bins=args.id3_bins,
        logging_dir=args.logging_dir)
    try:
        InductionParams(
            max_groups=variant["max_groups"],
            purity_threshold=variant["purity_threshold"],
            id3_fixed_bins=variant["id3_fixed_bins"])
    except GrouptreeError as error:
        raise UsageError(str(error))
    return variant


def load_dataset(
    args
):
    return parse_csv(read_text(args.input), class_column=args.class_column)


def train_tree(
    args
):
    baseline, variant = BASELINES[args.algorithm]
    variant = variant_from_args(args, variant)
    tree, _ = baseline(variant, load_dataset(args))
    return tree


def tree_for_export(
    args
):
    # exports need either a saved tree or a csv file to train on
    if args.tree:
        return DecisionTree.from_json(read_text(args.tree))
    if not args.input:
        raise UsageError("either --tree or --input is required")
    return train_tree(args)


def run_describe(
    args
):
    emit(args, json.dumps(load_dataset(args).describe(), indent=2) + "\n")


def run_train(
    args
):
    emit(args, train_tree(args).to_json())


def run_classify(
    args
):
    tree = DecisionTree.from_json(read_text(args.tree))
    rows = parse_rows(read_text(args.input), tree.schemas)
    emit(args, "".join(classify(tree, row) + "\n" for row in rows))


def run_compare(
    args
):
    variant = variant_from_args(args, compare_variant)
    if args.holdout is not None and not 0.0 < args.holdout < 1.0:
        raise UsageError("--holdout must lie in (0, 1)")
    if args.workers < 1:
        raise UsageError("--workers must be at least 1")
    variant.update(holdout=args.holdout, seed=args.seed, num_workers=args.workers)

    reports = compare(variant, load_dataset(args))
    if args.format == "json":
        emit(args, comparison_to_json(reports))
    else:
        emit(args, format_comparison(reports))


def run_export_dot(
    args
):
    emit(args, to_dot(tree_for_export(args)))


def run_export_rules(
    args
):
    tree = tree_for_export(args)
    emit(args, format_rules(extract_rules(tree), tree.schemas))


def run_gen_synthetic(
    args
):
    emit(args, generate_synthetic(args.rows, args.attributes, args.classes, args.seed).to_csv())


COMMANDS = {
    "describe": run_describe,
    "train": run_train,
    "classify": run_classify,
    "compare": run_compare,
    "export-dot": run_export_dot,
    "export-rules": run_export_rules,
    "gen-synthetic": run_gen_synthetic}


def main(
    argv=None
):
    # parse the flags and dispatch to a single command
    try:
        args = build_parser().parse_args(argv)
        COMMANDS[args.command](args)
    except UsageError as error:
        print("grouptree: usage error: {}".format(error), file=sys.stderr)
        return EXIT_USAGE
    except (GrouptreeError, OSError, tf.errors.OpError, UnicodeDecodeError) as error:
        print("grouptree: error: {}".format(error), file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
