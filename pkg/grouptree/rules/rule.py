"""Author: grouptree developers, Copyright 2026, MIT License"""


from grouptree.trees.decision_tree import leaf_paths
from dataclasses import dataclass


@dataclass(frozen=True)
class Condition:
    attribute_index: int
    split: object
    child: int

    def holds(
        self,
        value
    ):
        # intervals are matched through the split itself so rules route like the tree
        return self.split.route(value) == self.child

    def describe(
        self,
        schemas
    ):
        return self.split.describe(self.child, schemas[self.attribute_index].name)


@dataclass(frozen=True)
class Rule:
    conditions: tuple
    label: str
    support: object

    def matches(
        self,
        row
    ):
        return all(c.holds(row[c.attribute_index]) for c in self.conditions)


def extract_rules(
    t
):
    # one rule per leaf, conditions in root to leaf order, rules in left to right order
    return [Rule(tuple(Condition(node.attribute_index, node.split, child)
                       for node, child in path), leaf.label, leaf.support)
            for path, leaf in leaf_paths(t.root)]


def default_label(
    t
):
    # majority class of the whole training set
    return t.root.support.majority()


def rules_classify(
    rules,
    fallback,
    row
):
    # first matching rule wins
    for rule in rules:
        if rule.matches(row):
            return rule.label
    return fallback


def format_rules(
    rules,
    schemas
):
    lines = []
    for rule in rules:
        premise = " AND ".join(c.describe(schemas) for c in rule.conditions) or "TRUE"
        lines.append("IF {} THEN {} (support: {})".format(
            premise, rule.label, rule.support.total))
    return "\n".join(lines) + "\n"
