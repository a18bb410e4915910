"""Author: grouptree developers, Copyright 2026, MIT License"""


from abc import ABC, abstractmethod


class Saver(ABC):

    @abstractmethod
    def path(
        self,
        name
    ):
        # location a named tree is stored at
        return NotImplemented

    @abstractmethod
    def save(
        self,
    ):
        return NotImplemented

    @abstractmethod
    def load(
        self,
    ):
        # return the mapping from names to trees after loading what exists
        return NotImplemented
