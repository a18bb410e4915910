"""Author: grouptree developers, Copyright 2026, MIT License"""


from abc import ABC, abstractmethod


class Logger(ABC):

    @abstractmethod
    def record(
        self,
        key,
        value,
    ):
        # record one scalar under a slash separated key
        return NotImplemented

    def record_scalars(
        self,
        prefix,
        scalars
    ):
        # record every numeric entry of a dictionary under a common prefix
        for key, value in scalars.items():
            if isinstance(value, (int, float)) and not isinstance(value, bool):
                self.record(prefix + key, value)

    def flush(
        self
    ):
        pass
