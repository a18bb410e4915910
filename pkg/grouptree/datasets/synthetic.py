"""Author: grouptree developers, Copyright 2026, MIT License"""


from grouptree.datasets.dataset import Dataset, AttributeSchema, NUMERIC
from grouptree.exceptions import DatasetError
import numpy as np


# each class owns an interval of this width, separated by the remaining gap
INTERVAL_SPACING = 10.0
INTERVAL_WIDTH = 8.0


def generate_synthetic(
    n_rows,
    n_numeric_attrs,
    n_classes,
    seed=0
):
    # every attribute gives each class its own interval in a shuffled order
    for name, value in (("n_rows", n_rows),
                        ("n_numeric_attrs", n_numeric_attrs),
                        ("n_classes", n_classes)):
        if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < 1:
            raise DatasetError("{} must be a positive integer, got {!r}".format(name, value))
    if n_classes < 2:
        raise DatasetError("n_classes must be at least 2, got {}".format(n_classes))
    if n_classes > n_rows:
        raise DatasetError("n_classes > n_rows: cannot place {} classes in {} rows".format(
            n_classes, n_rows))

    rng = np.random.default_rng(seed)

    # every class receives at least one row
    classes = rng.permutation(np.arange(n_rows) % n_classes)

    # shuffle which interval each class owns on every attribute
    slots = np.stack([rng.permutation(n_classes) for _ in range(n_numeric_attrs)], axis=0)
    offsets = rng.uniform(0.0, INTERVAL_WIDTH, size=(n_rows, n_numeric_attrs))
    values = np.round(
        slots[np.arange(n_numeric_attrs)[None, :], classes[:, None]] * INTERVAL_SPACING
        + offsets, 2)

    schemas = [AttributeSchema("x{}".format(j), NUMERIC) for j in range(n_numeric_attrs)]
    rows = [([float(v) for v in values[i]], "class_{}".format(classes[i]))
            for i in range(n_rows)]
    return Dataset.from_rows(schemas, rows, class_name="class")
