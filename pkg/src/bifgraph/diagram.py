"""Bifurcation diagrams as index-colored multigraphs, and the validators
every other module relies on.

A diagram's edges are orbit branches carrying an orbit index in {-1, 0, +1}
(and optionally a minimal period); its vertices are bifurcation events.
Branch ends that simply run out of the parameter window are marked with the
``TERMINAL`` sentinel and carry no constraints.

All types are immutable after construction and the validators are pure
functions, so everything here is safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

from .laws import (
    SADDLE_NODE, PERIOD_DOUBLING, TYPE_M, JUNCTION,
    BifurcationKind, LawTable, check_index, is_admissible_star,
)


class _Terminal:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "TERMINAL"


#: Marker for a branch end that reaches the boundary of the parameter window.
TERMINAL = _Terminal()


class DiagramError(ValueError):
    """Structural problem in a diagram (dangling reference, bad arity, ...)."""


# ---------------------------------------------------------------------------
# Orbit index from eigenvalue data
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EigenvalueSpec:
    """Eigenvalues of the return-map differential at a periodic orbit.

    ``reals`` lists the real eigenvalues; ``complex_pairs`` lists
    (modulus, argument) for each conjugate pair.  No entry may have modulus
    exactly 1 (that would be a bifurcation point, where the index is
    undefined).
    """

    reals: tuple[float, ...] = ()
    complex_pairs: tuple[tuple[float, float], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "reals", tuple(float(r) for r in self.reals))
        object.__setattr__(self, "complex_pairs",
                           tuple((float(m), float(a)) for m, a in self.complex_pairs))
        for r in self.reals:
            if abs(r) == 1.0:
                raise ValueError(f"real eigenvalue {r} has modulus 1: index undefined")
        for m, _ in self.complex_pairs:
            if m <= 0:
                raise ValueError("complex pair modulus must be positive")
            if m == 1.0:
                raise ValueError("complex pair on the unit circle: index undefined")


class IndexResult(NamedTuple):
    sigma_plus: int
    sigma_minus: int
    index: int


def index_from_eigenvalues(spec: EigenvalueSpec) -> IndexResult:
    """Count eigenvalues above 1 and below -1 and derive the orbit index.

    Complex pairs contribute to neither count.  The index is 0 when the
    below -1 count is odd, otherwise (-1) ** (above 1 count).
    """
    sigma_plus = sum(1 for r in spec.reals if r > 1)
    sigma_minus = sum(1 for r in spec.reals if r < -1)
    index = 0 if sigma_minus % 2 else (-1) ** sigma_plus
    return IndexResult(sigma_plus, sigma_minus, index)


# ---------------------------------------------------------------------------
# Diagram structure
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Edge:
    """An orbit branch: orbit index color, optional minimal period, and the
    two ends (vertex ids or TERMINAL)."""

    id: str
    index: int
    ends: tuple
    period: int | None = None

    def __post_init__(self):
        check_index(self.index)
        if len(self.ends) != 2:
            raise DiagramError(f"edge {self.id!r} needs exactly two ends")
        if self.period is not None and self.period < 1:
            raise DiagramError(f"edge {self.id!r} period must be a positive integer")


@dataclass(frozen=True)
class Vertex:
    """A bifurcation event.  Saddle nodes are symmetric (no parent); every
    other kind designates one incident edge as the bifurcating branch."""

    id: str
    kind: BifurcationKind
    parent_edge: str | None = None


@dataclass(frozen=True)
class Diagram:
    dimension: int
    edges: tuple[Edge, ...]
    vertices: tuple[Vertex, ...]

    def __post_init__(self):
        if self.dimension < 1:
            raise DiagramError("dimension must be >= 1")
        eids = [e.id for e in self.edges]
        if len(set(eids)) != len(eids):
            raise DiagramError("duplicate edge ids")
        vids = [v.id for v in self.vertices]
        if len(set(vids)) != len(vids):
            raise DiagramError("duplicate vertex ids")
        vset = set(vids)
        incident: dict[str, list[str]] = {v: [] for v in vids}
        for e in self.edges:
            for end in e.ends:
                if end is TERMINAL:
                    continue
                if end not in vset:
                    raise DiagramError(f"edge {e.id!r} references missing vertex {end!r}")
                incident[end].append(e.id)
        for v in self.vertices:
            inc = incident[v.id]
            if not inc:
                raise DiagramError(f"vertex {v.id!r} has no incident edge")
            if len(inc) != v.kind.degree:
                raise DiagramError(
                    f"vertex {v.id!r} ({v.kind.name}) needs degree {v.kind.degree}, has {len(inc)}")
            if v.kind.name == SADDLE_NODE:
                if v.parent_edge is not None:
                    raise DiagramError(f"saddle-node vertex {v.id!r} takes no parent edge")
            else:
                if v.parent_edge is None:
                    raise DiagramError(f"vertex {v.id!r} ({v.kind.name}) needs a parent edge")
                if v.parent_edge not in inc:
                    raise DiagramError(
                        f"parent edge {v.parent_edge!r} is not incident to vertex {v.id!r}")

    # -- lookups ----------------------------------------------------------

    def edge(self, edge_id: str) -> Edge:
        for e in self.edges:
            if e.id == edge_id:
                return e
        raise KeyError(edge_id)

    def vertex(self, vertex_id: str) -> Vertex:
        for v in self.vertices:
            if v.id == vertex_id:
                return v
        raise KeyError(vertex_id)

    def incident_edges(self, vertex_id: str) -> list[Edge]:
        """Incident edges with multiplicity (a loop appears twice)."""
        out = []
        for e in self.edges:
            for end in e.ends:
                if end == vertex_id:
                    out.append(e)
        return out

    def child_edges(self, vertex: Vertex) -> list[Edge]:
        """Incident edges minus one occurrence of the parent edge."""
        inc = self.incident_edges(vertex.id)
        if vertex.parent_edge is None:
            return inc
        out, dropped = [], False
        for e in inc:
            if not dropped and e.id == vertex.parent_edge:
                dropped = True
                continue
            out.append(e)
        return out

    def degree(self, vertex_id: str) -> int:
        return len(self.incident_edges(vertex_id))


# ---------------------------------------------------------------------------
# Conservation
# ---------------------------------------------------------------------------

class ConservationCheck(NamedTuple):
    ok: bool
    parent_sum: int
    child_sum: int


def check_index_conservation(diagram: Diagram, vertex_id: str) -> ConservationCheck:
    """Index bookkeeping across one bifurcation vertex.

    For a saddle node the two incident indices must sum to 0 (both orbit
    branches sit on one side of the event, nothing on the other).  For every
    parented kind the parent index must equal the sum of the child indices.
    """
    v = diagram.vertex(vertex_id)
    if v.kind.name == SADDLE_NODE:
        total = sum(e.index for e in diagram.incident_edges(vertex_id))
        return ConservationCheck(total == 0, total, 0)
    parent = diagram.edge(v.parent_edge).index
    kids = sum(e.index for e in diagram.child_edges(v))
    return ConservationCheck(parent == kids, parent, kids)


# ---------------------------------------------------------------------------
# Cycle parity
# ---------------------------------------------------------------------------

class CycleCheck(NamedTuple):
    edge_ids: tuple[str, ...]
    vertex_ids: tuple[str, ...]
    all_saddle_node: bool
    ok: bool
    reason: str


def _simple_cycles(diagram: Diagram):
    """Vertex-simple cycles of the underlying multigraph, including loops
    and parallel-edge 2-cycles. Desk-scale enumeration."""
    vids = sorted(v.id for v in diagram.vertices)
    between: dict[tuple[str, str], list[str]] = {}
    loops = []
    for e in diagram.edges:
        a, b = e.ends
        if a is TERMINAL or b is TERMINAL:
            continue
        if a == b:
            loops.append(e)
            continue
        key = (a, b) if str(a) <= str(b) else (b, a)
        between.setdefault(key, []).append(e.id)

    for e in loops:
        yield (e.id,), (e.ends[0],)
    for (a, b), eids in sorted(between.items()):
        if len(eids) >= 2:
            from itertools import combinations
            for e1, e2 in combinations(sorted(eids), 2):
                yield (e1, e2), (a, b)

    neighbors: dict[str, set[str]] = {v: set() for v in vids}
    for (a, b) in between:
        neighbors[a].add(b)
        neighbors[b].add(a)

    def edges_between(u, w):
        key = (u, w) if str(u) <= str(w) else (w, u)
        return sorted(between.get(key, []))

    def extend(start, path, used_edges, visited):
        u = path[-1]
        for w in sorted(neighbors[u]):
            if w == start and len(path) >= 3:
                if path[1] < path[-1]:  # kill the reversed traversal
                    for eid in edges_between(u, start):
                        yield tuple(used_edges) + (eid,), tuple(path)
            elif w > start and w not in visited:
                for eid in edges_between(u, w):
                    yield from extend(start, path + [w], used_edges + [eid], visited | {w})

    for s in vids:
        yield from extend(s, [s], [], {s})


def check_cycle_parity(diagram: Diagram) -> list[CycleCheck]:
    """Parity law for cycles made entirely of saddle-node vertices.

    In dimension <= 2 such a cycle must have even length with the two
    nonzero indices alternating; in dimension >= 3 an odd cycle passes only
    when every edge has index 0 (even cycles are unconstrained here -- the
    per-vertex laws still apply separately).
    """
    results = []
    kind_of = {v.id: v.kind.name for v in diagram.vertices}
    for eids, vset in _simple_cycles(diagram):
        all_sn = all(kind_of[v] == SADDLE_NODE for v in vset)
        if not all_sn:
            results.append(CycleCheck(eids, vset, False, True, "not all saddle-node"))
            continue
        colors = [diagram.edge(eid).index for eid in eids]
        odd = len(colors) % 2 == 1
        if diagram.dimension <= 2:
            alternating = (not odd and all(abs(c) == 1 for c in colors)
                           and all(colors[i] != colors[(i + 1) % len(colors)]
                                   for i in range(len(colors))))
            results.append(CycleCheck(
                eids, vset, True, alternating,
                "even alternating" if alternating else "saddle-node cycle must alternate +1/-1 with even length"))
        else:
            if odd:
                ok = all(c == 0 for c in colors)
                results.append(CycleCheck(
                    eids, vset, True, ok,
                    "odd all-zero" if ok else "odd saddle-node cycle must be all index 0"))
            else:
                results.append(CycleCheck(eids, vset, True, True, "even"))
    return results


# ---------------------------------------------------------------------------
# Period consistency
# ---------------------------------------------------------------------------

class PeriodViolation(NamedTuple):
    vertex_id: str
    edge_pair: tuple[str, str]
    message: str


class PeriodReport(NamedTuple):
    applicable: bool
    ok: bool
    violations: tuple[PeriodViolation, ...]


def _items(periods) -> tuple:
    from collections import Counter
    return tuple(sorted(Counter(periods).items()))


def _sub_multisets(items):
    """All sub-count-vectors of a (value, count) tuple, as item tuples."""
    if not items:
        yield ()
        return
    (val, cnt), rest = items[0], items[1:]
    for sub in _sub_multisets(rest):
        for take in range(cnt + 1):
            yield ((val, take),) + sub if take else sub


def _strip(items):
    return tuple((v, c) for v, c in items if c)


def _diff(items, sub):
    d = dict(items)
    for v, c in sub:
        d[v] -= c
    return tuple(sorted((v, c) for v, c in d.items() if c))


@lru_cache(maxsize=None)
def _doubling_leaves(p: int, items: tuple) -> bool:
    """Can a chain of period doublings rooted at period p produce exactly
    this leaf multiset?  Each event turns one leaf q into leaves {q, 2q}.

    Two exact prunes keep the search desk-fast: every leaf is p times a
    power of two, and the surviving chain leaves exactly one leaf at p.
    """
    if items == ((p, 1),):
        return True
    total = sum(c for _, c in items)
    if total < 2:
        return False
    counts = dict(items)
    if counts.get(p, 0) != 1:
        return False
    for v in counts:
        q, r = divmod(v, p)
        if r or q & (q - 1):
            return False
    for left in map(_strip, _sub_multisets(items)):
        if not left:
            continue
        right = _diff(items, left)
        if not right:
            continue
        if _doubling_leaves(p, left) and _doubling_leaves(2 * p, right):
            return True
    return False


@lru_cache(maxsize=None)
def _multiplying_leaves(p: int, items: tuple) -> bool:
    """Same for chains of three-way events q -> {q, mq, mq}, any m >= 3
    per event.

    Prunes (all exact): leaf counts are odd (each event adds two), every
    leaf is a multiple of the root period, and exactly one leaf stays at it.
    """
    if items == ((p, 1),):
        return True
    total = sum(c for _, c in items)
    if total < 3 or total % 2 == 0:
        return False
    counts = dict(items)
    if counts.get(p, 0) != 1:
        return False
    if any(v % p for v in counts):
        return False
    values = [v for v, _ in items]
    hi = max(values)
    for m in range(3, hi // p + 1):
        if not any(v % (m * p) == 0 for v in values):
            continue
        for keep in map(_strip, _sub_multisets(items)):
            if not keep:
                continue
            rest = _diff(items, keep)
            if sum(c for _, c in rest) < 2:
                continue
            if not _multiplying_leaves(p, keep):
                continue
            for part1 in map(_strip, _sub_multisets(rest)):
                if not part1:
                    continue
                part2 = _diff(rest, part1)
                if not part2 or part1 > part2:  # unordered halves
                    continue
                if _multiplying_leaves(m * p, part1) and _multiplying_leaves(m * p, part2):
                    return True
    return False


def junction_periods_consistent(parent_period: int, child_periods) -> bool:
    """True when the child periods arise from some decomposition of the
    junction into a chain of doublings or of m-fold multiplications."""
    items = _items(child_periods)
    return _doubling_leaves(parent_period, items) or _multiplying_leaves(parent_period, items)


def check_period_consistency(diagram: Diagram) -> PeriodReport:
    """Minimal-period bookkeeping per vertex.

    Saddle nodes preserve the period across the pair; a period doubling has
    one child at the parent period and one at exactly double; an m-fold
    multiplication keeps one child and multiplies two by m; a junction must
    be consistent with some decomposition (searched).  Applies only when
    every edge carries a period; partial labelings are rejected as
    ambiguous.
    """
    labels = [e.period for e in diagram.edges]
    if all(p is None for p in labels):
        return PeriodReport(False, True, ())
    if any(p is None for p in labels):
        raise ValueError("partial period labeling is ambiguous: label all edges or none")

    violations = []
    for v in diagram.vertices:
        if v.kind.name == SADDLE_NODE:
            e1, e2 = diagram.incident_edges(v.id)
            if e1.period != e2.period:
                violations.append(PeriodViolation(
                    v.id, (e1.id, e2.id),
                    f"saddle node joins periods {e1.period} and {e2.period}"))
            continue
        parent = diagram.edge(v.parent_edge)
        kids = diagram.child_edges(v)
        p = parent.period
        got = sorted(e.period for e in kids)
        if v.kind.name == PERIOD_DOUBLING:
            want = sorted((p, 2 * p))
            if got != want:
                violations.append(PeriodViolation(
                    v.id, (parent.id, kids[0].id),
                    f"doubling from period {p} must yield {{{p}, {2 * p}}}, got {got}"))
        elif v.kind.name == TYPE_M:
            m = v.kind.param
            if m is None:
                raise ValueError(f"vertex {v.id!r}: type_m multiplier required to check periods")
            want = sorted((p, m * p, m * p))
            if got != want:
                violations.append(PeriodViolation(
                    v.id, (parent.id, kids[0].id),
                    f"m-fold split from period {p} must yield {{{p}, {m}p x2}}, got {got}"))
        else:  # junction
            if not junction_periods_consistent(p, got):
                violations.append(PeriodViolation(
                    v.id, (parent.id, kids[0].id),
                    f"junction periods {got} admit no decomposition from period {p}"))
    return PeriodReport(True, not violations, tuple(violations))


# ---------------------------------------------------------------------------
# Full validation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    vertex_id: str | None = None
    edge_ids: tuple[str, ...] = ()


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_diagram(diagram: Diagram, k: int, table: LawTable) -> ValidationReport:
    """Full admissibility check against a law table and branching budget k.

    Runs the degree bound (k + 2), per-vertex index conservation, the law
    lookup per vertex, the junction two-index rule, cycle parity, and (when
    the diagram is fully period-labeled) period consistency.  Returns every
    violation found; an empty report means the diagram is admissible.
    """
    if table.dimension != diagram.dimension:
        raise ValueError(
            f"table dimension {table.dimension} != diagram dimension {diagram.dimension}")
    out: list[Violation] = []

    for v in diagram.vertices:
        deg = diagram.degree(v.id)
        if deg > k + 2:
            out.append(Violation("degree_bound",
                                 f"vertex {v.id!r} has degree {deg} > k+2 = {k + 2}",
                                 vertex_id=v.id))
        cons = check_index_conservation(diagram, v.id)
        if not cons.ok:
            out.append(Violation("conservation",
                                 f"vertex {v.id!r}: parent side {cons.parent_sum} != "
                                 f"child side {cons.child_sum}", vertex_id=v.id))
        if v.kind.name == SADDLE_NODE:
            pair = tuple(sorted(e.index for e in diagram.incident_edges(v.id)))
            if pair not in table.saddle_node_pairs():
                out.append(Violation("law",
                                     f"saddle-node pair {pair} not admissible in "
                                     f"dimension {table.dimension}", vertex_id=v.id))
            continue
        parent = diagram.edge(v.parent_edge).index
        kids = [e.index for e in diagram.child_edges(v)]
        if not is_admissible_star(table, v.kind, parent, kids):
            out.append(Violation("law",
                                 f"vertex {v.id!r}: {parent} -> {tuple(sorted(kids))} not "
                                 f"admissible for {v.kind.name} in dimension {table.dimension}",
                                 vertex_id=v.id))
        if v.kind.name == JUNCTION and len(set(kids)) > 2:
            out.append(Violation("junction_two_index",
                                 f"junction {v.id!r} uses more than two child indices",
                                 vertex_id=v.id))

    for cyc in check_cycle_parity(diagram):
        if not cyc.ok:
            out.append(Violation("cycle_parity", cyc.reason, edge_ids=cyc.edge_ids))

    try:
        period = check_period_consistency(diagram)
    except ValueError as exc:
        out.append(Violation("period_partial", str(exc)))
    else:
        for pv in period.violations:
            out.append(Violation("period", pv.message,
                                 vertex_id=pv.vertex_id, edge_ids=pv.edge_pair))

    return ValidationReport(tuple(out))
