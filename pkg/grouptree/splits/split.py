"""Author: grouptree developers, Copyright 2026, MIT License"""


from abc import ABC, abstractmethod


class Split(ABC):

    def __init__(
            self,
            attribute_index
    ):
        # the attribute tested at an internal node
        self.attribute_index = attribute_index

    @property
    @abstractmethod
    def num_children(self):
        return NotImplemented

    @abstractmethod
    def route(
            self,
            value
    ):
        # index of the child a value follows, or None when no child matches
        return NotImplemented

    @abstractmethod
    def partition(
            self,
            dataset
    ):
        # one row subset per child, in child order
        return NotImplemented

    @abstractmethod
    def describe(
            self,
            child,
            attribute_name
    ):
        # human readable test leading into a child
        return NotImplemented

    @abstractmethod
    def to_dict(
            self
    ):
        return NotImplemented

    def __eq__(
            self,
            other
    ):
        return type(self) is type(other) and self.to_dict() == other.to_dict()

    def __hash__(
            self
    ):
        return hash(repr(self.to_dict()))
