"""Star/clique representations, line graphs, isomorphism, Whitney bridge."""

import random

import pytest

from bifgraph import (
    EnumerationSpec, SimpleGraph, block_intersection_graph, complete_graph,
    cycle_graph, enumerate_colored, free_trees, graphs_isomorphic,
    is_block_graph, is_claw_free, line_graph, path_graph, star_graph,
    to_clique, to_star, tree_to_diagram,
)
from bifgraph.graphs import canonical_mask
from bifgraph.laws import SADDLE_NODE
from helpers import colored_tree_graph, random_connected_graph, star_diagram


def test_saddle_node_becomes_single_edge():
    d = star_diagram(1, (-1,))
    star = to_star(d)
    assert star.n == 2 and star.edges == frozenset({(0, 1)})
    assert sorted(star.colors) == [-1, 1]
    assert to_clique(d) == star  # the 2-star is already complete


def test_doubling_becomes_three_star_with_hub_first():
    d = star_diagram(1, (0, 1))
    star = to_star(d)
    assert star.n == 3
    assert star.edges == frozenset({(0, 1), (0, 2)})  # hub is vertex 0
    assert star.colors[0] == 1 and sorted(star.colors[1:]) == [0, 1]
    clique = to_clique(d)
    assert graphs_isomorphic(clique, complete_graph(3))


def test_multiplying_clique_is_k4():
    d = star_diagram(1, (1, -1, 1), dimension=2)
    assert graphs_isomorphic(to_clique(d), complete_graph(4))
    assert to_star(d).edges < to_clique(d).edges


def test_star_and_clique_share_vertices_and_colors():
    for t in enumerate_colored(EnumerationSpec(2, 4, 5)):
        d = tree_to_diagram(t, 4)
        s, c = to_star(d), to_clique(d)
        assert s.n == c.n == len(d.edges)
        assert s.colors == c.colors
        assert s.edges <= c.edges
        all_sn = all(v.kind.name == SADDLE_NODE for v in d.vertices)
        assert (s.edges == c.edges) == all_sn


def test_star_of_acyclic_diagram_is_tree():
    for t in enumerate_colored(EnumerationSpec(2, 4, 6)):
        d = tree_to_diagram(t, 4)
        s = to_star(d)
        assert len(s.edges) == s.n - 1 and s.is_connected()
        assert graphs_isomorphic(s, colored_tree_graph(t), respect_colors=True)


# -- line graphs -------------------------------------------------------------

def test_line_graph_examples():
    assert line_graph(path_graph(3)).edges == frozenset({(0, 1)})
    assert graphs_isomorphic(line_graph(star_graph(3)), complete_graph(3))
    assert graphs_isomorphic(line_graph(cycle_graph(5)), cycle_graph(5))


def test_line_graph_of_trees_is_claw_free_block_graph():
    for n in range(2, 10):
        for tree in free_trees(n):
            lg = line_graph(tree)
            assert is_block_graph(lg)
            assert is_claw_free(lg)


# -- block intersection graph ------------------------------------------------

def test_block_intersection_examples():
    assert block_intersection_graph(cycle_graph(3)).n == 1
    two_tri = SimpleGraph.from_edges(
        5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    bg = block_intersection_graph(two_tri)
    assert bg.n == 2 and bg.edges == frozenset({(0, 1)})


def test_block_intersection_of_tree():
    for n in range(2, 9):
        for tree in free_trees(n):
            bg = block_intersection_graph(tree)
            assert bg.n == n - 1
            assert bg.is_connected()
            assert is_block_graph(bg)


def test_block_intersection_needs_connected_input():
    with pytest.raises(ValueError):
        block_intersection_graph(SimpleGraph.from_edges(4, [(0, 1), (2, 3)]))


# -- isomorphism -------------------------------------------------------------

def test_isomorphism_examples():
    assert graphs_isomorphic(complete_graph(3), cycle_graph(3))
    assert not graphs_isomorphic(star_graph(3), path_graph(4))
    c5 = cycle_graph(5)
    rotated = c5.relabeled([2, 3, 4, 0, 1])
    assert graphs_isomorphic(c5, rotated)


def test_isomorphism_respects_colors():
    g1 = SimpleGraph.from_edges(2, [(0, 1)], colors=(1, -1))
    g2 = SimpleGraph.from_edges(2, [(0, 1)], colors=(-1, 1))
    g3 = SimpleGraph.from_edges(2, [(0, 1)], colors=(1, 1))
    assert graphs_isomorphic(g1, g2, respect_colors=True)
    assert not graphs_isomorphic(g1, g3, respect_colors=True)


def test_isomorphism_agrees_with_canonical_masks():
    from bifgraph import all_graphs
    for n in (3, 4, 5):
        graphs = all_graphs(n)
        rng = random.Random(7)
        for _ in range(200):
            a, b = rng.choice(graphs), rng.choice(graphs)
            assert graphs_isomorphic(a, b) == (canonical_mask(a) == canonical_mask(b))


def test_whitney_correspondence_on_random_pairs():
    rng = random.Random(20260810)
    for _ in range(120):
        n = rng.randint(5, 8)
        g1 = random_connected_graph(rng, n)
        g2 = random_connected_graph(rng, n)
        same = graphs_isomorphic(g1, g2)
        same_lines = graphs_isomorphic(line_graph(g1), line_graph(g2))
        assert same == same_lines
