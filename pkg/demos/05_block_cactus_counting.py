"""
Block graphs, cacti, and their exact counts
===========================================

Detectors first: block graphs have clique blocks, cacti have edge-or-cycle
blocks, and a single forbidden minor (the diamond) characterizes cacti.
Then the closed-form counts of labeled block graphs and cacti, checked
against raw enumeration over all labeled graphs.
"""

from collections import Counter

from bifgraph import (
    SimpleGraph, block_decomposition, cactus_count, complete_graph,
    cycle_graph, diamond_graph, has_diamond_minor, husimi_count, is_block_graph,
    is_cactus, is_claw_free, triangular_cactus_count,
)

# ---------------------------------------------------------------------------
# Detectors
# ---------------------------------------------------------------------------

samples = {
    "diamond": diamond_graph(),
    "C4": cycle_graph(4),
    "K4": complete_graph(4),
    "two triangles": SimpleGraph.from_edges(
        5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]),
}
for name, g in samples.items():
    print(f"{name:14s} block_graph={is_block_graph(g)!s:5s} "
          f"cactus={is_cactus(g)!s:5s} claw_free={is_claw_free(g)!s:5s} "
          f"diamond_minor={has_diamond_minor(g)}")

# ---------------------------------------------------------------------------
# Closed forms vs. brute force
# ---------------------------------------------------------------------------
# Count labeled connected graphs on five vertices by block-size multiset and
# compare with the formulas.

census_blocks: Counter = Counter()
census_cacti: Counter = Counter()
n = 5
from itertools import combinations
pairs = list(combinations(range(n), 2))
for mask in range(1 << len(pairs)):
    edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
    g = SimpleGraph.from_edges(n, edges)
    if not g.is_connected():
        continue
    dec = block_decomposition(g)
    sizes = tuple(sorted(len(b) for b in dec.blocks))
    if all(len(es) == len(vs) * (len(vs) - 1) // 2
           for vs, es in zip(dec.blocks, dec.block_edges)):
        census_blocks[sizes] += 1
    if all(len(es) in (1, len(vs)) for vs, es in zip(dec.blocks, dec.block_edges)):
        census_cacti[sizes] += 1

print("\nlabeled block graphs on 5 vertices, by block sizes:")
for sizes, count in sorted(census_blocks.items()):
    formula = husimi_count(dict(Counter(sizes)))
    print(f"  {sizes}: enumerated {count}, formula {formula}")

print("labeled cacti on 5 vertices, by polygon sizes:")
for sizes, count in sorted(census_cacti.items()):
    formula = cactus_count(dict(Counter(sizes)))
    print(f"  {sizes}: enumerated {count}, formula {formula}")

# Trees are the all-edges special case and recover Cayley's count.
print("\ntrees via block-size spec {2: n-1}:")
for m in range(2, 8):
    print(f"  n={m}: {husimi_count({2: m - 1})} (Cayley {m ** (m - 2)})")

# Pure-triangle cacti have their own closed form.
print("\ntriangular cacti:")
for nodes in (1, 3, 5, 7, 9):
    print(f"  {nodes} nodes: {triangular_cactus_count(nodes)}")
