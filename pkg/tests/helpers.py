"""Shared builders and independent oracles for the test suite.

The oracles here deliberately take different routes from the library code
they check (mask sweeps, direct definitions) so each closed form or detector
is confirmed by a second, dumber computation.
"""

from __future__ import annotations

import random
from itertools import combinations

from bifgraph import (
    TERMINAL, Diagram, Edge, SimpleGraph, Vertex, kind_for_child_count,
    saddle_node,
)


def star_diagram(parent_index: int, child_indexes, parent_period=None,
                 child_periods=None, dimension=4, m=None) -> Diagram:
    """One bifurcation vertex with terminal far ends everywhere."""
    kind = kind_for_child_count(len(child_indexes))
    if kind.name == "type_m" and m is not None:
        from bifgraph import type_m
        kind = type_m(m)
    if kind.name == "saddle_node":
        edges = (Edge("p", parent_index, (TERMINAL, "v"), parent_period),
                 Edge("c0", child_indexes[0], ("v", TERMINAL),
                      None if child_periods is None else child_periods[0]))
        return Diagram(dimension, edges, (Vertex("v", kind),))
    edges = [Edge("p", parent_index, (TERMINAL, "v"), parent_period)]
    for i, ci in enumerate(child_indexes):
        period = None if child_periods is None else child_periods[i]
        edges.append(Edge(f"c{i}", ci, ("v", TERMINAL), period))
    return Diagram(dimension, tuple(edges), (Vertex("v", kind, "p"),))


def sn_cycle(dimension: int, colors) -> Diagram:
    """Cycle of saddle-node vertices with the given edge colors."""
    n = len(colors)
    edges = tuple(Edge(f"e{i}", colors[i], (f"v{i}", f"v{(i + 1) % n}"))
                  for i in range(n))
    verts = tuple(Vertex(f"v{i}", saddle_node()) for i in range(n))
    return Diagram(dimension, edges, verts)


def colored_tree_graph(tree) -> SimpleGraph:
    """Star-representation graph of a ColoredTree, built directly."""
    nodes = []
    edges = []

    def walk(t, parent_pos):
        pos = len(nodes)
        nodes.append(t.color)
        if parent_pos is not None:
            edges.append((parent_pos, pos))
        for c in t.children:
            walk(c, pos)

    walk(tree, None)
    return SimpleGraph.from_edges(len(nodes), edges, nodes)


def random_connected_graph(rng: random.Random, n: int) -> SimpleGraph:
    """Random spanning tree plus random extra edges."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u = order[rng.randrange(i)]
        edges.add(tuple(sorted((u, order[i]))))
    for u, v in combinations(range(n), 2):
        if rng.random() < 0.3:
            edges.add((u, v))
    return SimpleGraph.from_edges(n, edges)


def labeled_graphs(n: int):
    """Every labeled graph on n vertices, as an edge-set generator."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
