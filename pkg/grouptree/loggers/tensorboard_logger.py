"""Author: grouptree developers, Copyright 2026, MIT License"""


from grouptree.loggers.logger import Logger
from collections import defaultdict
import tensorflow as tf


class TensorboardInterface(Logger):

    def __init__(
        self,
        logging_dir,
    ):
        # every key advances its own step each time it is recorded
        self.logging_dir = logging_dir
        self.steps = defaultdict(int)

        # create the tensor board logging file to save training data
        tf.io.gfile.makedirs(logging_dir)
        self.writer = tf.summary.create_file_writer(logging_dir)

    def record(
        self,
        key,
        value,
    ):
        # write the scalar at the next step of its key
        with self.writer.as_default():
            tf.summary.scalar(key, float(value), step=self.steps[key])
        self.steps[key] += 1

    def flush(
        self
    ):
        self.writer.flush()


class TensorboardLogger(Logger):

    def __init__(
        self,
        logging_dir,
    ):
        # create a separate tensor board logging interface
        self.interface = TensorboardInterface(logging_dir)

    def record(
        self,
        key,
        value,
    ):
        self.interface.record(key, value)

    def flush(
        self
    ):
        self.interface.flush()
