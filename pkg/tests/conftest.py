"""Author: grouptree developers, Copyright 2026, MIT License"""


from grouptree.datasets.csv_dataset import parse_csv
from grouptree.loggers.logger import Logger
from grouptree.datasets.dataset import Dataset, AttributeSchema, NUMERIC, CATEGORICAL
import pytest
import os


DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data")
IRIS_PATH = os.path.join(DATA_DIR, "iris.csv")


PLAY_CSV = """outlook,temperature,humidity,windy,play
sunny,hot,high,false,no
sunny,hot,high,true,no
overcast,hot,high,false,yes
rainy,mild,high,false,yes
rainy,cool,normal,false,yes
rainy,cool,normal,true,no
overcast,cool,normal,true,yes
sunny,mild,high,false,no
sunny,cool,normal,false,yes
rainy,mild,normal,false,yes
sunny,mild,normal,true,yes
overcast,mild,high,true,yes
overcast,hot,normal,false,yes
rainy,mild,high,true,no
"""


def numeric_dataset(
    rows,
    num_attributes=1
):
    # rows of (values, label) over numeric attributes named x0, x1, ...
    schemas = [AttributeSchema("x{}".format(j), NUMERIC) for j in range(num_attributes)]
    return Dataset.from_rows(schemas, [([float(v) for v in values], label)
                                       for values, label in rows])


def categorical_dataset(
    rows,
    num_attributes=1
):
    schemas = [AttributeSchema("c{}".format(j), CATEGORICAL) for j in range(num_attributes)]
    return Dataset.from_rows(schemas, rows)


class RecordingLogger(Logger):

    def __init__(
        self
    ):
        self.records = []

    def record(
        self,
        key,
        value,
    ):
        self.records.append((key, value))

    def keys(
        self
    ):
        return {key for key, _ in self.records}


@pytest.fixture(scope="session")
def iris_text():
    with open(IRIS_PATH) as f:
        return f.read()


@pytest.fixture(scope="session")
def iris(iris_text):
    return parse_csv(iris_text)


@pytest.fixture
def play():
    return parse_csv(PLAY_CSV)


@pytest.fixture
def separable():
    # class a below 5 and class b above 5 on a single attribute
    return numeric_dataset([([v], "a") for v in (0, 1, 2, 3, 4)]
                           + [([v], "b") for v in (6, 7, 8, 9, 10)])


@pytest.fixture
def thirds():
    # three classes in thirds of the range, two groups cannot separate them
    return numeric_dataset([([v], "a") for v in (0, 1, 2, 3)]
                           + [([v], "b") for v in (4, 5, 6)]
                           + [([v], "c") for v in (7, 8, 9, 10)])


@pytest.fixture
def interleaved():
    # x0 separates the classes at its midpoint while three global bins on x0 cannot
    a_rows = [([x0, x1], "a") for x0, x1 in zip((0, 1, 2, 3, 4), (0, 1, 0, 1, 0))]
    b_rows = [([x0, x1], "b") for x0, x1 in zip((6, 7, 8, 9, 10), (1, 0, 1, 0, 1))]
    return numeric_dataset(a_rows + b_rows, num_attributes=2)
