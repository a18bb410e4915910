"""Author: grouptree developers, Copyright 2026, MIT License"""


from grouptree.datasets.dataset import AttributeSchema, ClassCounts
from grouptree.exceptions import SchemaMismatchError, TreeFormatError
from grouptree.params import InductionParams
from grouptree.splits.categorical_split import CategoricalSplit
from grouptree.splits.grouped_split import GroupedSplit
from grouptree.trees.node import Leaf, InternalNode
from dataclasses import dataclass
import json


ALGORITHMS = ("id3", "grouped")


@dataclass(frozen=True)
class DecisionTree:
    root: object
    schemas: tuple
    class_labels: tuple
    params: InductionParams
    algorithm: str
    class_name: str = "class"

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise ValueError("unknown algorithm tag {!r}".format(self.algorithm))

    def classify(
        self,
        row
    ):
        return classify(self, row)

    def to_dict(
        self
    ):
        return dict(
            algorithm=self.algorithm,
            params=self.params.to_dict(),
            schema=[dict(name=s.name, kind=s.kind) for s in self.schemas],
            class_name=self.class_name,
            class_labels=list(self.class_labels),
            root=node_to_dict(self.root))

    def to_json(
        self
    ):
        # stable key order so identical trees serialize to identical bytes
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_dict(
        cls,
        state
    ):
        # any missing key, wrong type or inconsistent node is a malformed tree
        try:
            class_labels = tuple(state["class_labels"])
            return cls(
                root=node_from_dict(state["root"], class_labels),
                schemas=tuple(AttributeSchema(s["name"], s["kind"]) for s in state["schema"]),
                class_labels=class_labels,
                params=InductionParams.from_dict(state["params"]),
                algorithm=state["algorithm"],
                class_name=state.get("class_name", "class"))
        except TreeFormatError:
            raise
        except (KeyError, TypeError, AttributeError, ValueError) as error:
            raise TreeFormatError("malformed tree: {!r}".format(error)) from error

    @classmethod
    def from_json(
        cls,
        text
    ):
        try:
            state = json.loads(text)
        except ValueError as error:
            raise TreeFormatError("tree file is not valid json: {}".format(error)) from error
        return cls.from_dict(state)


def node_to_dict(
    node
):
    if node.is_leaf:
        return dict(type="leaf", label=node.label, support=list(node.support.counts))
    return dict(
        type="internal",
        split=node.split.to_dict(),
        fallback_label=node.fallback_label,
        support=list(node.support.counts),
        children=[node_to_dict(child) for child in node.children])


def node_from_dict(
    state,
    class_labels
):
    support = ClassCounts(class_labels, tuple(int(c) for c in state["support"]))
    if state["type"] == "leaf":
        return Leaf(state["label"], support)

    # rebuild the split from its tagged dictionary
    split_state = state["split"]
    if split_state["type"] == "grouped":
        split = GroupedSplit.from_dict(split_state)
    elif split_state["type"] == "categorical":
        split = CategoricalSplit(int(split_state["attribute_index"]), split_state["values"])
    else:
        raise TreeFormatError("unknown split type {!r}".format(split_state["type"]))
    return InternalNode(
        split,
        tuple(node_from_dict(child, class_labels) for child in state["children"]),
        state["fallback_label"],
        support)


def check_row(
    schemas,
    row
):
    # a row must carry one value of the right kind per attribute
    if len(row) != len(schemas):
        raise SchemaMismatchError("row has {} values but the tree expects {}".format(
            len(row), len(schemas)))
    for schema, value in zip(schemas, row):
        if not schema.conforms(value):
            raise SchemaMismatchError("value {!r} does not fit {} attribute {!r}".format(
                value, schema.kind, schema.name))


def classify(
    t,
    row
):
    # follow the test of every internal node down to a leaf
    check_row(t.schemas, row)
    node = t.root
    while not node.is_leaf:
        child = node.split.route(row[node.attribute_index])
        if child is None:
            return node.fallback_label
        node = node.children[child]
    return node.label


def tree_stats(
    t
):
    # depth counts edges, so a single leaf has depth zero
    root = t.root if isinstance(t, DecisionTree) else t

    def visit(node):
        if node.is_leaf:
            return 0, 1, 1
        depth, nodes, leaves = 0, 1, 0
        for child in node.children:
            d, n, l = visit(child)
            depth = max(depth, d + 1)
            nodes += n
            leaves += l
        return depth, nodes, leaves

    depth, node_count, leaf_count = visit(root)
    return dict(depth=depth, node_count=node_count, leaf_count=leaf_count)


def leaf_paths(
    node,
    path=()
):
    # yield (path, leaf) pairs left to right, a path is a tuple of (node, child index)
    if node.is_leaf:
        yield path, node
        return
    for i, child in enumerate(node.children):
        yield from leaf_paths(child, path + ((node, i),))
