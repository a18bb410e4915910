"""Author: grouptree developers, Copyright 2026, MIT License"""


from grouptree.savers.saver import Saver
from grouptree.trees.decision_tree import DecisionTree
import tensorflow as tf
import os


def write_text(
    path,
    text
):
    # create the parent directory and write utf-8 text with tensorflow file io
    parent = os.path.dirname(path)
    if parent:
        tf.io.gfile.makedirs(parent)
    with tf.io.gfile.GFile(path, "w") as f:
        f.write(text)


def read_text(
    path
):
    with tf.io.gfile.GFile(path, "r") as f:
        return f.read()


class LocalSaver(Saver):

    def __init__(
        self,
        logging_dir,
        **trees
    ):
        # create a saver instance that saves trees to the disk
        self.logging_dir = logging_dir
        self.trees = trees

        tf.io.gfile.makedirs(logging_dir)

    def path(
        self,
        name
    ):
        return os.path.join(self.logging_dir, name + ".json")

    def save(
        self,
    ):
        # save every decision tree as a json document
        for name, tree in self.trees.items():
            write_text(self.path(name), tree.to_json())

    def load(
        self,
    ):
        # load the decision trees that exist on the disk
        for name in list(self.trees.keys()):
            if tf.io.gfile.exists(self.path(name)):
                self.trees[name] = DecisionTree.from_json(read_text(self.path(name)))
        return self.trees
