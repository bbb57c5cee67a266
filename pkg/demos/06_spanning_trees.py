"""
Spanning-tree counts three ways
===============================

The number of spanning trees comes from any principal minor of the
Laplacian (computed fraction-free in exact integers), from brute-force
enumeration, and from the deletion-contraction recursion evaluated where it
counts maximal spanning forests.  All three must agree.
"""

from bifgraph import (
    SimpleGraph, complete_graph, connected_graphs, cycle_graph, laplacian,
    spanning_count_kirchhoff, spanning_enumerate_brute, tutte_11,
)

# ---------------------------------------------------------------------------
# The three routes on K4
# ---------------------------------------------------------------------------

k4 = complete_graph(4)
print("Laplacian of K4:")
for row in laplacian(k4):
    print(" ", row)
print("determinant route:", spanning_count_kirchhoff(k4))
print("brute force:", len(spanning_enumerate_brute(k4)))
print("deletion-contraction:", tutte_11(k4))

# ---------------------------------------------------------------------------
# Growth on complete graphs (Cayley's formula n^(n-2))
# ---------------------------------------------------------------------------

for n in range(2, 9):
    print(f"K{n}: {spanning_count_kirchhoff(complete_graph(n))} spanning trees")

# ---------------------------------------------------------------------------
# Disconnected graphs: forests, not trees
# ---------------------------------------------------------------------------

two_triangles = SimpleGraph.from_edges(
    6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
print("\ndisconnected pair of triangles:")
print("  spanning trees:", spanning_count_kirchhoff(two_triangles))
print("  maximal spanning forests:", tutte_11(two_triangles))

# ---------------------------------------------------------------------------
# Exhaustive agreement on small graphs
# ---------------------------------------------------------------------------

total = 0
for n in range(1, 7):
    for g in connected_graphs(n):
        a = spanning_count_kirchhoff(g)
        assert a == len(spanning_enumerate_brute(g)) == tutte_11(g)
        total += 1
print(f"\nall three routes agree on {total} connected graphs with <= 6 vertices")

ring = cycle_graph(9)
print("a 9-cycle has", spanning_count_kirchhoff(ring), "spanning trees (one per deleted edge)")
