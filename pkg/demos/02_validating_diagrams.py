"""
Validating bifurcation diagrams
===============================

A diagram is a multigraph whose edges are orbit branches (colored by index,
optionally labeled by minimal period) and whose vertices are bifurcation
events.  ``validate_diagram`` runs the degree bound, conservation, the law
lookup, the junction two-index rule, cycle parity and -- when periods are
present -- period consistency.
"""

from bifgraph import (
    TERMINAL, Diagram, Edge, Vertex, builtin_table, check_cycle_parity,
    check_period_consistency, emit_diagram, nonadmissible_period_fixture,
    period_doubling, saddle_node, validate_diagram,
)

# ---------------------------------------------------------------------------
# A single doubling event: +1 splits into {0, +1}
# ---------------------------------------------------------------------------

doubling = Diagram(2, (
    Edge("parent", 1, (TERMINAL, "v"), period=3),
    Edge("survivor", 0, ("v", TERMINAL), period=3),
    Edge("doubled", 1, ("v", TERMINAL), period=6),
), (Vertex("v", period_doubling(), parent_edge="parent"),))

report = validate_diagram(doubling, k=1, table=builtin_table(2))
print("doubling diagram valid:", report.ok)

# The same event with parent index -1 is illegal in dimension 2 but fine in 3.
flipped = Diagram(2, (
    Edge("parent", -1, (TERMINAL, "v")),
    Edge("a", -1, ("v", TERMINAL)),
    Edge("b", 0, ("v", TERMINAL)),
), (Vertex("v", period_doubling(), parent_edge="parent"),))
print("-1 doubling in d=2:", [v.code for v in
                              validate_diagram(flipped, 1, builtin_table(2)).violations])
lifted = Diagram(3, flipped.edges, flipped.vertices)
print("-1 doubling in d=3 valid:", validate_diagram(lifted, 1, builtin_table(3)).ok)

# ---------------------------------------------------------------------------
# Cycle parity
# ---------------------------------------------------------------------------
# A cycle of saddle nodes must alternate +1/-1 (even length) in dimension 2;
# from dimension 3 an odd cycle is possible, but only all green.

def ring(d, colors):
    n = len(colors)
    edges = tuple(Edge(f"e{i}", colors[i], (f"s{i}", f"s{(i + 1) % n}"))
                  for i in range(n))
    return Diagram(d, edges, tuple(Vertex(f"s{i}", saddle_node()) for i in range(n)))

for d, colors in [(2, [1, -1, 1]), (2, [1, -1, 1, -1]), (3, [0, 0, 0])]:
    checks = check_cycle_parity(ring(d, colors))
    print(f"d={d} saddle-node ring {colors}: "
          + ("accepted" if all(c.ok for c in checks) else checks[0].reason))

# ---------------------------------------------------------------------------
# The period obstruction
# ---------------------------------------------------------------------------
# The shipped fixture is index-admissible in dimension 2, yet its period
# labels cannot be realized: a branch is doubled at both ends and the outer
# period-1 / period-4 branches get glued through saddle nodes.

fx = nonadmissible_period_fixture()
print("\nfixture document:")
print(emit_diagram(fx))
report = validate_diagram(fx, 1, builtin_table(2))
for violation in report.violations:
    print("violation:", violation.code, "-", violation.message)
periods = check_period_consistency(fx)
print("first violating edge pair:", periods.violations[0].edge_pair)
