"""Author: grouptree developers, Copyright 2026, MIT License"""


from dataclasses import dataclass


@dataclass(frozen=True)
class Leaf:
    label: str
    support: object

    @property
    def is_leaf(self):
        return True


@dataclass(frozen=True)
class InternalNode:
    # fallback_label is returned when a categorical value matches no child
    split: object
    children: tuple
    fallback_label: str
    support: object

    def __post_init__(self):
        if len(self.children) != self.split.num_children:
            raise ValueError("a split with {} outcomes cannot hold {} children".format(
                self.split.num_children, len(self.children)))

    @property
    def is_leaf(self):
        return False

    @property
    def attribute_index(self):
        return self.split.attribute_index
