"""File formats: the diagram JSON document, graph/matroid/tree documents,
and DOT export.

Parsing is schema-checked up front and failures name the JSON path of the
offending value.  Emission is canonical (fixed key order, ids sorted), so
identical inputs always produce byte-identical output.
"""

from __future__ import annotations

import json
from importlib import resources

from .diagram import TERMINAL, Diagram, Edge, Vertex
from .graphs import SimpleGraph
from .laws import COLOR_OF, BifurcationKind, junction, period_doubling, saddle_node, type_m

SCHEMA_VERSION = "1"


class SchemaError(ValueError):
    """Document violates the expected schema; ``path`` names the location."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def _as_doc(source) -> dict:
    if isinstance(source, dict):
        return source
    text = str(source)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"not valid JSON: {exc}") from exc


def _expect(cond: bool, path: str, message: str) -> None:
    if not cond:
        raise SchemaError(path, message)


# ---------------------------------------------------------------------------
# Diagram documents
# ---------------------------------------------------------------------------

def kind_to_json(kind: BifurcationKind):
    if kind.name in ("saddle_node", "period_doubling"):
        return kind.name
    return {kind.name: kind.param}


def kind_from_json(raw, path: str) -> BifurcationKind:
    if raw == "saddle_node":
        return saddle_node()
    if raw == "period_doubling":
        return period_doubling()
    if isinstance(raw, dict) and len(raw) == 1:
        (name, param), = raw.items()
        # type_m admits a null multiplier: the index laws do not depend on m,
        # only the period check does (and it demands a concrete m)
        if name == "type_m":
            _expect(param is None or isinstance(param, int), f"{path}.{name}",
                    "parameter must be an integer or null")
        else:
            _expect(isinstance(param, int), f"{path}.{name}",
                    "parameter must be an integer")
        try:
            if name == "type_m":
                return type_m(param)
            if name == "junction":
                return junction(param)
        except ValueError as exc:
            raise SchemaError(f"{path}.{name}", str(exc)) from exc
    raise SchemaError(path, f"unknown kind {raw!r}")


def parse_diagram(source) -> Diagram:
    """Parse and schema-check a diagram document (JSON text or dict)."""
    doc = _as_doc(source)
    _expect(isinstance(doc, dict), "$", "document must be an object")
    extra = set(doc) - {"schemaVersion", "dimension", "edges", "vertices", "comment"}
    _expect(not extra, "$", f"unknown keys {sorted(extra)}")
    _expect(doc.get("schemaVersion") == SCHEMA_VERSION,
            "$.schemaVersion", f"must be {SCHEMA_VERSION!r}")
    dim = doc.get("dimension")
    _expect(isinstance(dim, int) and dim >= 1, "$.dimension", "must be an integer >= 1")
    _expect(isinstance(doc.get("edges"), list), "$.edges", "must be a list")
    _expect(isinstance(doc.get("vertices"), list), "$.vertices", "must be a list")

    edges = []
    for i, item in enumerate(doc["edges"]):
        path = f"$.edges[{i}]"
        _expect(isinstance(item, dict), path, "must be an object")
        extra = set(item) - {"id", "index", "period", "endpoints"}
        _expect(not extra, path, f"unknown keys {sorted(extra)}")
        _expect(isinstance(item.get("id"), str) and item["id"], f"{path}.id",
                "must be a nonempty string")
        _expect(item.get("index") in (-1, 0, 1), f"{path}.index", "must be -1, 0 or 1")
        period = item.get("period")
        if period is not None:
            _expect(isinstance(period, int) and period >= 1, f"{path}.period",
                    "must be a positive integer")
        eps = item.get("endpoints")
        _expect(isinstance(eps, list) and len(eps) == 2, f"{path}.endpoints",
                "must be a two-element list")
        ends = tuple(TERMINAL if e == "terminal" else e for e in eps)
        for j, e in enumerate(ends):
            _expect(e is TERMINAL or (isinstance(e, str) and e),
                    f"{path}.endpoints[{j}]", 'must be a vertex id or "terminal"')
        edges.append(Edge(item["id"], item["index"], ends, period))

    vertices = []
    for i, item in enumerate(doc["vertices"]):
        path = f"$.vertices[{i}]"
        _expect(isinstance(item, dict), path, "must be an object")
        extra = set(item) - {"id", "kind", "parentEdge"}
        _expect(not extra, path, f"unknown keys {sorted(extra)}")
        _expect(isinstance(item.get("id"), str) and item["id"], f"{path}.id",
                "must be a nonempty string")
        kind = kind_from_json(item.get("kind"), f"{path}.kind")
        parent = item.get("parentEdge")
        if parent is not None:
            _expect(isinstance(parent, str), f"{path}.parentEdge", "must be an edge id")
        vertices.append(Vertex(item["id"], kind, parent))

    eids = [e.id for e in edges]
    _expect(len(set(eids)) == len(eids), "$.edges", "edge ids must be unique")
    vids = [v.id for v in vertices]
    _expect(len(set(vids)) == len(vids), "$.vertices", "vertex ids must be unique")
    return Diagram(dim, tuple(edges), tuple(vertices))


def emit_diagram(diagram: Diagram) -> str:
    """Canonical JSON for a diagram: fixed key order, ids sorted."""
    doc = {
        "schemaVersion": SCHEMA_VERSION,
        "dimension": diagram.dimension,
        "edges": [],
        "vertices": [],
    }
    for e in sorted(diagram.edges, key=lambda e: e.id):
        item = {"id": e.id, "index": e.index}
        if e.period is not None:
            item["period"] = e.period
        item["endpoints"] = ["terminal" if x is TERMINAL else x for x in e.ends]
        doc["edges"].append(item)
    for v in sorted(diagram.vertices, key=lambda v: v.id):
        item = {"id": v.id, "kind": kind_to_json(v.kind)}
        if v.parent_edge is not None:
            item["parentEdge"] = v.parent_edge
        doc["vertices"].append(item)
    return json.dumps(doc, indent=2) + "\n"


def nonadmissible_period_fixture() -> Diagram:
    """The shipped cyclic diagram that passes every index-based law in
    dimension 2 but carries an impossible period labeling: an index-1
    branch doubled at both ends, with the outer ends glued through two
    saddle nodes and a -1 edge."""
    data = resources.files("bifgraph").joinpath("data/nonadmissible_period.json")
    return parse_diagram(data.read_text(encoding="utf-8"))


# ---------------------------------------------------------------------------
# Graph / matroid / tree documents
# ---------------------------------------------------------------------------

def parse_graph(source) -> SimpleGraph:
    """Graph document: {"vertexCount": n, "edges": [[u, v], ...],
    "colors"?: [...]}"""
    doc = _as_doc(source)
    n = doc.get("vertexCount")
    _expect(isinstance(n, int) and n >= 0, "$.vertexCount", "must be an integer >= 0")
    raw = doc.get("edges")
    _expect(isinstance(raw, list), "$.edges", "must be a list")
    edges = []
    for i, e in enumerate(raw):
        _expect(isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e),
                f"$.edges[{i}]", "must be a pair of vertex numbers")
        edges.append(tuple(e))
    colors = doc.get("colors")
    if colors is not None:
        _expect(isinstance(colors, list) and len(colors) == n, "$.colors",
                "must list one color per vertex")
    try:
        return SimpleGraph.from_edges(n, edges, colors)
    except ValueError as exc:
        raise SchemaError("$.edges", str(exc)) from exc


def emit_graph(g: SimpleGraph) -> str:
    doc = {"vertexCount": g.n, "edges": [list(e) for e in g.sorted_edges()]}
    if g.colors is not None:
        doc["colors"] = list(g.colors)
    return json.dumps(doc, indent=2) + "\n"


def parse_matroid(source):
    """Matroid document: {"groundSet": [...], "bases": [[...], ...]}"""
    from .matroids import from_bases
    doc = _as_doc(source)
    ground = doc.get("groundSet")
    _expect(isinstance(ground, list) and ground, "$.groundSet", "must be a nonempty list")
    bases = doc.get("bases")
    _expect(isinstance(bases, list) and bases, "$.bases", "must be a nonempty list")
    try:
        return from_bases(ground, bases)
    except ValueError as exc:
        raise SchemaError("$.bases", str(exc)) from exc


def parse_tree(source) -> tuple:
    """Ordered tree as nested arrays: [] is a leaf, [c1, c2, ...] a node."""
    doc = _as_doc(source) if not isinstance(source, list) else source

    def conv(node, path):
        _expect(isinstance(node, list), path, "must be a list")
        return tuple(conv(c, f"{path}[{i}]") for i, c in enumerate(node))

    return conv(doc, "$")


def emit_tree(t) -> str:
    def conv(node):
        return [conv(c) for c in node]

    return json.dumps(conv(t)) + "\n"


def emit_binary_tree(t) -> str:
    """Binary slot tree as nested {"left": ..., "right": ...} objects."""

    def conv(node):
        kids = dict(node)
        return {"left": conv(kids[0]) if 0 in kids else None,
                "right": conv(kids[1]) if 1 in kids else None}

    return json.dumps(conv(t), indent=2) + "\n"


# ---------------------------------------------------------------------------
# DOT export
# ---------------------------------------------------------------------------

def _q(text) -> str:
    return str(text).replace("\\", "\\\\").replace('"', '\\"')


def emit_dot(obj, name: str = "g") -> str:
    """DOT text for a diagram or a (possibly vertex-colored) graph.

    Orbit indices use the fixed convention red = -1, green = 0, blue = +1;
    output ordering is deterministic.
    """
    if isinstance(obj, Diagram):
        return _diagram_dot(obj, name)
    return _graph_dot(obj, name)


def _graph_dot(g: SimpleGraph, name: str) -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        attrs = []
        if g.names is not None:
            attrs.append(f'label="{_q(g.names[v])}"')
        if g.colors is not None:
            attrs.append(f"color={COLOR_OF[g.colors[v]]}")
        lines.append(f"  n{v}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";")
    for u, v in g.sorted_edges():
        lines.append(f"  n{u} -- n{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _diagram_dot(diagram: Diagram, name: str) -> str:
    lines = [f"graph {name} {{"]
    for v in sorted(diagram.vertices, key=lambda v: v.id):
        label = v.kind.name if v.kind.param is None else f"{v.kind.name}({v.kind.param})"
        lines.append(f'  "{_q(v.id)}" [shape=box, label="{label}"];')
    terminal_count = 0
    for e in sorted(diagram.edges, key=lambda e: e.id):
        ends = []
        for x in e.ends:
            if x is TERMINAL:
                tid = f"__t{terminal_count}"
                terminal_count += 1
                lines.append(f'  "{tid}" [shape=point];')
                ends.append(tid)
            else:
                ends.append(x)
        attrs = [f"color={COLOR_OF[e.index]}", f'label="{_q(e.id)}"']
        if e.period is not None:
            attrs.append(f'taillabel="{e.period}"')
        lines.append(f'  "{_q(ends[0])}" -- "{_q(ends[1])}" [{", ".join(attrs)}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
