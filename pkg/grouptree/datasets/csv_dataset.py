"""Author: grouptree developers, Copyright 2026, MIT License"""


from grouptree.datasets.dataset import Dataset, AttributeSchema, NUMERIC, CATEGORICAL
from grouptree.exceptions import DatasetError
import pandas as pd
import numpy as np
import csv
import io


def read_frame(
    text
):
    # accept either a string or any object with a read method
    if hasattr(text, "read"):
        text = text.read()
    if isinstance(text, bytes):
        text = text.decode("utf-8")

    # split on commas only, quoting is not part of the dialect
    try:
        frame = pd.read_csv(
            io.StringIO(text),
            header=None,
            dtype=str,
            keep_default_na=False,
            quoting=csv.QUOTE_NONE,
            skip_blank_lines=True)
    except pd.errors.EmptyDataError:
        raise DatasetError("empty input: a header row is required")
    except pd.errors.ParserError as error:
        raise DatasetError("ragged row: {}".format(error))

    # physical line numbers of the records pandas kept
    line_numbers = [n for n, line in enumerate(text.split("\n"), 1) if line.strip()]
    if len(line_numbers) != len(frame):
        line_numbers = list(range(1, len(frame) + 1))

    # short rows come back padded with missing values
    ragged = np.flatnonzero(frame.isna().any(axis=1).to_numpy())
    if len(ragged):
        record = frame.iloc[ragged[0]]
        raise DatasetError("line {}: ragged row with {} fields, expected {}".format(
            line_numbers[ragged[0]], int(record.notna().sum()), len(record)))
    quoted = frame.apply(lambda column: column.str.contains("\"", regex=False))
    quoted = np.flatnonzero(quoted.any(axis=1).to_numpy())
    if len(quoted):
        raise DatasetError(
            "line {}: quoted fields are not supported".format(line_numbers[quoted[0]]))

    frame = frame.apply(lambda column: column.str.strip())
    header = frame.iloc[0].tolist()
    records = frame.iloc[1:].reset_index(drop=True)
    return header, records, line_numbers[1:]


def check_values(
    records,
    header,
    line_numbers,
    columns
):
    # a blank field is a missing value, which the dialect does not allow
    for i in columns:
        empty = np.flatnonzero((records[i] == "").to_numpy())
        if len(empty):
            raise DatasetError("line {}: empty value in column {!r}".format(
                line_numbers[empty[0]], header[i]))


def numeric_values(
    column
):
    # a column is numeric when every value parses as a finite real number
    numbers = pd.to_numeric(column, errors="coerce")
    if not np.isfinite(numbers.to_numpy(dtype=np.float64)).all():
        return None
    return column.astype(np.float64).tolist()


def resolve_column(
    header,
    class_column
):
    # a selector is a header name, an integer index, or None for the last column
    if class_column is None:
        return len(header) - 1
    if isinstance(class_column, str):
        if class_column in header:
            return header.index(class_column)
        try:
            class_column = int(class_column)
        except ValueError:
            raise DatasetError("class column {!r} not found".format(class_column))
    if isinstance(class_column, bool) or not isinstance(class_column, int):
        raise DatasetError("class column {!r} not found".format(class_column))
    if not -len(header) <= class_column < len(header):
        raise DatasetError("class column {!r} not found".format(class_column))
    return class_column % len(header)


def parse_csv(
    text,
    class_column=None
):
    # the class column is removed from the attributes and labels every row
    header, records, line_numbers = read_frame(text)

    # the header names every column exactly once
    if any(not name for name in header):
        raise DatasetError("line 1: empty column name in header")
    if len(set(header)) != len(header):
        raise DatasetError("line 1: duplicate column names in header")
    class_index = resolve_column(header, class_column)

    if len(records) == 0:
        raise DatasetError("column with zero rows: the input has a header but no data")
    check_values(records, header, line_numbers, range(len(header)))

    # infer the kind of each attribute column from all of its values
    columns = []
    schemas = []
    for i in range(len(header)):
        if i == class_index:
            continue
        numbers = numeric_values(records[i])
        columns.append(numbers if numbers is not None else records[i].tolist())
        schemas.append(AttributeSchema(header[i], NUMERIC if numbers is not None else CATEGORICAL))

    labels = records[class_index].tolist()
    values = list(zip(*columns)) if columns else [()] * len(labels)
    rows = [(list(v), label) for v, label in zip(values, labels)]
    return Dataset.from_rows(schemas, rows, class_name=header[class_index])


def parse_rows(
    text,
    schemas
):
    # columns that are not attributes, such as a class column, are ignored
    header, records, line_numbers = read_frame(text)
    positions = []
    for schema in schemas:
        if schema.name not in header:
            raise DatasetError("attribute column {!r} is missing".format(schema.name))
        positions.append(header.index(schema.name))
    check_values(records, header, line_numbers, positions)

    columns = []
    for schema, i in zip(schemas, positions):
        if not schema.is_numeric:
            columns.append(records[i].tolist())
            continue
        numbers = pd.to_numeric(records[i], errors="coerce").to_numpy(dtype=np.float64)
        bad = np.flatnonzero(~np.isfinite(numbers))
        if len(bad):
            raise DatasetError("line {}: {!r} is not numeric in column {!r}".format(
                line_numbers[bad[0]], records[i].iloc[bad[0]], schema.name))
        columns.append(records[i].astype(np.float64).tolist())

    if not columns:
        return [() for _ in range(len(records))]
    return [tuple(values) for values in zip(*columns)]
