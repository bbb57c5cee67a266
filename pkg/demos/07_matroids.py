"""
Matroids and the representability obstruction
=============================================

Graphic matroids (edges independent when they form a forest) are the
matroids diagrams naturally carry.  The Vamos matroid -- two elements per
diamond vertex, one four-element circuit per diamond edge -- cannot be
written as a matrix over any field, so finding it as a minor certifies
non-representability.
"""

from itertools import combinations

from bifgraph import (
    complete_graph, connected_graphs, cycle_graph, graphic_matroid,
    has_vamos_minor, matroid_minor, vamos,
)

# ---------------------------------------------------------------------------
# Graphic matroids
# ---------------------------------------------------------------------------

m = graphic_matroid(complete_graph(4))
print("graphic matroid of K4: rank", m.rank)
circuits = m.circuits()
print("circuits:", len(circuits),
      "sizes", sorted(len(c) for c in circuits))

triangle = graphic_matroid(cycle_graph(3))
contracted = matroid_minor(triangle, contract=[triangle.ground[0]])
print("triangle with one edge contracted: rank", contracted.rank,
      "on", len(contracted.ground), "elements (two parallel edges)")

# ---------------------------------------------------------------------------
# The Vamos matroid
# ---------------------------------------------------------------------------

v = vamos()
print("\nvamos rank:", v.rank)
dependent = [set(q) for q in combinations(v.ground, 4)
             if not v.is_independent(q)]
print("dependent quadruples:")
for q in dependent:
    print("  ", sorted(q))
print("the diagonal pair union stays independent:",
      v.is_independent({"c1", "c2", "d1", "d2"}))
print("vamos contains itself as a minor:", has_vamos_minor(v))

# ---------------------------------------------------------------------------
# Graphic matroids never contain it
# ---------------------------------------------------------------------------
# Graphic matroids are representable over every field, so the detector must
# come back empty on all of them; the sweep below confirms it by brute
# force rather than by citing that fact.

count = 0
for n in range(1, 7):
    for g in connected_graphs(n):
        assert not has_vamos_minor(graphic_matroid(g))
        count += 1
print(f"\nno vamos minor in any of the {count} graphic matroids "
      f"from connected graphs with <= 6 vertices")
