"""Author: grouptree developers, Copyright 2026, MIT License"""


from grouptree.exceptions import DatasetError, AttributeKindError
from dataclasses import dataclass
import pandas as pd
import numpy as np
import math


NUMERIC = "numeric"
CATEGORICAL = "categorical"
KINDS = (NUMERIC, CATEGORICAL)


# characters that cannot appear inside a field of the csv dialect
FORBIDDEN_CHARACTERS = (",", "\"", "\n", "\r")


@dataclass(frozen=True)
class AttributeSchema:
    name: str
    kind: str

    def __post_init__(self):
        if not isinstance(self.name, str) or not self.name:
            raise DatasetError("attribute names must be non-empty strings")
        if self.kind not in KINDS:
            raise DatasetError("unknown attribute kind {!r}".format(self.kind))

    @property
    def is_numeric(self):
        return self.kind == NUMERIC

    def conforms(
        self,
        value
    ):
        # numeric columns hold finite reals and categorical columns hold text
        if self.is_numeric:
            return (isinstance(value, (int, float, np.integer, np.floating))
                    and not isinstance(value, bool) and math.isfinite(value))
        return isinstance(value, str)


@dataclass(frozen=True)
class ClassCounts:
    # labels lists every class of the dataset, including classes with zero rows
    labels: tuple
    counts: tuple

    def __post_init__(self):
        if len(self.labels) != len(self.counts):
            raise DatasetError("labels and counts must have the same length")
        if any(c < 0 for c in self.counts):
            raise DatasetError("class counts must be non-negative")

    @classmethod
    def zeros(
        cls,
        labels
    ):
        return cls(tuple(labels), tuple(0 for _ in labels))

    @classmethod
    def from_labels(
        cls,
        labels,
        observed
    ):
        # tally the observed labels into the declared label order
        index = {label: i for i, label in enumerate(labels)}
        counts = [0] * len(labels)
        for label in observed:
            counts[index[label]] += 1
        return cls(tuple(labels), tuple(counts))

    @property
    def total(self):
        return sum(self.counts)

    def __getitem__(
        self,
        label
    ):
        return self.counts[self.labels.index(label)]

    def as_dict(
        self
    ):
        return dict(zip(self.labels, self.counts))

    def as_array(
        self
    ):
        return np.asarray(self.counts, dtype=np.int64)

    def nonzero(
        self
    ):
        return sum(1 for c in self.counts if c > 0)

    def is_pure(
        self
    ):
        return self.nonzero() <= 1

    def majority(
        self
    ):
        # ties break toward the earliest label in declared order
        best = 0
        for i, c in enumerate(self.counts):
            if c > self.counts[best]:
                best = i
        return self.labels[best]

    def majority_fraction(
        self
    ):
        total = self.total
        if total == 0:
            return 0.0
        return max(self.counts) / total

    def __add__(
        self,
        other
    ):
        if self.labels != other.labels:
            raise DatasetError("cannot add class counts over different labels")
        return ClassCounts(
            self.labels, tuple(a + b for a, b in zip(self.counts, other.counts)))


@dataclass(frozen=True)
class Dataset:
    # rows holds (values, label) pairs with values aligned to schemas
    schemas: tuple
    class_labels: tuple
    rows: tuple
    class_name: str = "class"

    def __post_init__(self):
        names = [s.name for s in self.schemas]
        if len(set(names)) != len(names):
            raise DatasetError("attribute names must be unique: {}".format(names))
        if self.class_name in names:
            raise DatasetError(
                "class column {!r} clashes with an attribute name".format(self.class_name))
        if len(set(self.class_labels)) != len(self.class_labels):
            raise DatasetError("class labels must be distinct")

        # every row carries one conforming value per attribute plus a known label
        known = set(self.class_labels)
        for i, (values, label) in enumerate(self.rows):
            if len(values) != len(self.schemas):
                raise DatasetError(
                    "row {} has {} values but {} attributes are declared".format(
                        i, len(values), len(self.schemas)))
            if label not in known:
                raise DatasetError("row {} has undeclared class label {!r}".format(i, label))
            for schema, value in zip(self.schemas, values):
                if not schema.conforms(value):
                    raise DatasetError(
                        "row {} value {!r} does not conform to {} attribute {!r}".format(
                            i, value, schema.kind, schema.name))

    @classmethod
    def from_rows(
        cls,
        schemas,
        rows,
        class_name="class"
    ):
        # declare class labels in first occurrence order
        class_labels = []
        for _, label in rows:
            if label not in class_labels:
                class_labels.append(label)
        return cls(
            tuple(schemas),
            tuple(class_labels),
            tuple((tuple(values), label) for values, label in rows),
            class_name=class_name)

    def __len__(self):
        return len(self.rows)

    @property
    def labels(self):
        return tuple(label for _, label in self.rows)

    @property
    def num_attributes(self):
        return len(self.schemas)

    def column(
        self,
        attribute_index
    ):
        return [values[attribute_index] for values, _ in self.rows]

    def subset(
        self,
        indices
    ):
        # a subset keeps the parent schema and label declaration
        return Dataset(
            self.schemas,
            self.class_labels,
            tuple(self.rows[i] for i in indices),
            class_name=self.class_name)

    def describe(
        self
    ):
        # summarize the kind and observed values of every attribute
        summary = []
        for i, schema in enumerate(self.schemas):
            column = self.column(i)
            entry = dict(name=schema.name, kind=schema.kind)
            if schema.is_numeric and column:
                entry.update(min=float(np.min(column)), max=float(np.max(column)))
            elif not schema.is_numeric:
                entry.update(categories=list(dict.fromkeys(column)))
            summary.append(entry)
        return dict(
            rows=len(self),
            attributes=summary,
            class_name=self.class_name,
            class_distribution=class_distribution(self).as_dict())

    def to_csv(
        self
    ):
        # write the header then one line per row, the class label last
        header = [_check_field(s.name) for s in self.schemas] + [_check_field(self.class_name)]
        fields = [[_format_value(schema, v) for schema, v in zip(self.schemas, values)]
                  + [_check_field(label)] for values, label in self.rows]
        frame = pd.DataFrame(fields, columns=header, dtype=str)
        return frame.to_csv(index=False, lineterminator="\n")


def _check_field(
    text
):
    if not text or any(c in text for c in FORBIDDEN_CHARACTERS):
        raise DatasetError("field {!r} cannot be written in the csv dialect".format(text))
    return text


def _format_value(
    schema,
    value
):
    # repr of a float is the shortest text that parses back to the same value
    if schema.is_numeric:
        return repr(float(value))
    return _check_field(value)


def class_distribution(
    d
):
    # count how many rows of the dataset carry each declared label
    return ClassCounts.from_labels(d.class_labels, d.labels)


def holdout_split(
    d,
    fraction=0.7,
    seed=0
):
    # split rows into a seeded training part and a held out part
    if not 0.0 < fraction < 1.0:
        raise DatasetError("holdout fraction must lie in (0, 1), got {!r}".format(fraction))
    if len(d) < 2:
        raise DatasetError("a holdout split needs at least two rows")

    permutation = np.random.default_rng(seed).permutation(len(d))
    num_train = min(max(int(round(fraction * len(d))), 1), len(d) - 1)
    return (d.subset(sorted(permutation[:num_train].tolist())),
            d.subset(sorted(permutation[num_train:].tolist())))


def numeric_column(
    d,
    attribute_index
):
    # fetch a numeric column as a float array
    schema = d.schemas[attribute_index]
    if not schema.is_numeric:
        raise AttributeKindError(
            "attribute {!r} is categorical, a numeric attribute is required".format(
                schema.name))
    return np.asarray(d.column(attribute_index), dtype=np.float64)
