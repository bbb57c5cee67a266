"""Representations of diagrams as vertex-colored graphs.

Both encodings interchange branch colors and vertices: every orbit branch
becomes one output vertex colored by its index, and each bifurcation event
contributes either a star (hub = the bifurcating branch) or a complete graph
on all incident branches.  A saddle node contributes a single edge in both.
"""

from __future__ import annotations

from itertools import combinations

from .classes import block_decomposition
from .diagram import Diagram
from .graphs import SimpleGraph
from .laws import SADDLE_NODE


def _branch_vertices(diagram: Diagram):
    order = [e.id for e in diagram.edges]
    pos = {eid: i for i, eid in enumerate(order)}
    colors = tuple(e.index for e in diagram.edges)
    names = tuple(str(eid) for eid in order)
    return pos, colors, names


def to_star(diagram: Diagram) -> SimpleGraph:
    """Star representation: one vertex per branch; each event joins its
    bifurcating branch (hub) to every child branch, a saddle node joins its
    pair.  The output is a tree exactly when the diagram is acyclic.
    Degenerate loops (an event both of whose slots hold the same branch)
    contribute no edge."""
    pos, colors, names = _branch_vertices(diagram)
    edges = set()
    for v in diagram.vertices:
        if v.kind.name == SADDLE_NODE:
            a, b = (e.id for e in diagram.incident_edges(v.id))
            if a != b:
                edges.add(tuple(sorted((pos[a], pos[b]))))
            continue
        hub = pos[v.parent_edge]
        for child in diagram.child_edges(v):
            if pos[child.id] != hub:
                edges.add(tuple(sorted((hub, pos[child.id]))))
    return SimpleGraph.from_edges(len(pos), edges, colors, names)


def to_clique(diagram: Diagram) -> SimpleGraph:
    """Clique representation: same vertices as the star form, but each event
    contributes a complete graph on all of its incident branches."""
    pos, colors, names = _branch_vertices(diagram)
    edges = set()
    for v in diagram.vertices:
        incident = sorted({pos[e.id] for e in diagram.incident_edges(v.id)})
        for a, b in combinations(incident, 2):
            edges.add((a, b))
    return SimpleGraph.from_edges(len(pos), edges, colors, names)


def line_graph(g: SimpleGraph) -> SimpleGraph:
    """Line graph: one vertex per edge of g, adjacent when the edges share
    an endpoint."""
    es = g.sorted_edges()
    pos = {e: i for i, e in enumerate(es)}
    out = set()
    for (e1, e2) in combinations(es, 2):
        if set(e1) & set(e2):
            out.add((pos[e1], pos[e2]))
    names = tuple(f"{u}-{v}" for u, v in es)
    return SimpleGraph.from_edges(len(es), out, names=names)


def block_intersection_graph(g: SimpleGraph) -> SimpleGraph:
    """Intersection graph of the biconnected components: one vertex per
    block, adjacent when two blocks share a cut vertex.  Always a block
    graph."""
    if not g.is_connected():
        raise ValueError("block intersection graph needs a connected input")
    dec = block_decomposition(g)
    out = set()
    for i, j in combinations(range(len(dec.blocks)), 2):
        if dec.blocks[i] & dec.blocks[j]:
            out.add((i, j))
    return SimpleGraph.from_edges(len(dec.blocks), out)
