"""Author: grouptree developers, Copyright 2026, MIT License"""


import graphviz


def to_dot(
    t,
    name="tree"
):
    # edges carry the interval or category leading into each child
    graph = graphviz.Digraph(name, node_attr=dict(fontname="Helvetica"))
    names = [s.name for s in t.schemas]
    counter = [0]

    def support_text(support):
        return ", ".join("{}: {}".format(label, count)
                         for label, count in zip(support.labels, support.counts))

    def walk(node):
        # nodes are numbered in depth first order so the output is stable
        node_id = "n{}".format(counter[0])
        counter[0] += 1
        if node.is_leaf:
            graph.node(node_id, "{}\\n({})".format(node.label, support_text(node.support)),
                       shape="box")
            return node_id

        graph.node(node_id, names[node.attribute_index], shape="ellipse")
        for i, child in enumerate(node.children):
            child_id = walk(child)
            graph.edge(node_id, child_id, label=node.split.describe(
                i, names[node.attribute_index]).split(" ", 1)[1])
        return node_id

    walk(t.root)
    return graph.source
