"""
Star and clique representations
===============================

Both representations swap the roles of branch colors and vertices: each
orbit branch becomes a colored vertex, and every event becomes a star or a
complete graph over its incident branches.  The line graph ties the two
together: line graphs of trees are exactly the claw-free block graphs.
"""

from bifgraph import (
    ColoredTree, block_intersection_graph, emit_dot, free_trees,
    graphs_isomorphic, is_block_graph, is_claw_free, line_graph, star_graph,
    to_clique, to_star, tree_to_diagram,
)

# ---------------------------------------------------------------------------
# One three-way event, both ways
# ---------------------------------------------------------------------------

tree = ColoredTree(1, (ColoredTree(1), ColoredTree(-1), ColoredTree(1)), (0, 1, 2))
diagram = tree_to_diagram(tree, 2)

star = to_star(diagram)
clique = to_clique(diagram)
print("star representation:", sorted(star.edges), "colors", star.colors)
print("clique representation:", sorted(clique.edges))
print("star is a subgraph of clique:", star.edges <= clique.edges)

print("\nDOT output of the star form:")
print(emit_dot(star, "three_way"))

# ---------------------------------------------------------------------------
# Line graphs of trees are claw-free block graphs
# ---------------------------------------------------------------------------

from bifgraph import complete_graph

claw = star_graph(3)
print("line graph of the claw is a triangle:",
      graphs_isomorphic(line_graph(claw), complete_graph(3)))

ok = 0
for n in range(2, 10):
    for t in free_trees(n):
        lg = line_graph(t)
        assert is_block_graph(lg) and is_claw_free(lg)
        ok += 1
print(f"checked {ok} trees: every line graph is a claw-free block graph")

# ---------------------------------------------------------------------------
# The block intersection graph is always a block graph
# ---------------------------------------------------------------------------

from bifgraph import SimpleGraph

tandem = SimpleGraph.from_edges(
    7, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 3), (5, 6)])
bg = block_intersection_graph(tandem)
print("\nblocks of the tandem graph:", bg.n, "adjacencies:", sorted(bg.edges))
print("is a block graph:", is_block_graph(bg))
