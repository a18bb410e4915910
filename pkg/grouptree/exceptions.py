"""Author: grouptree developers, Copyright 2026, MIT License"""


class GrouptreeError(Exception):
    pass


# a dataset could not be parsed, validated or generated
class DatasetError(GrouptreeError, ValueError):
    pass


class AttributeKindError(GrouptreeError, ValueError):
    pass


# a partition is empty or does not add up to its parent
class PartitionError(GrouptreeError, ValueError):
    pass


class InductionError(GrouptreeError, ValueError):
    pass


# rows or datasets do not conform to the schema a tree was trained on
class SchemaMismatchError(GrouptreeError, ValueError):
    pass


# a serialized tree is malformed or describes an inconsistent tree
class TreeFormatError(GrouptreeError, ValueError):
    pass


# a worker process died before reporting its result
class WorkerError(GrouptreeError, RuntimeError):
    pass
