"""Enumeration and exact counting of admissible colored trees.

A colored tree is the star-representation object: every node is an orbit
branch colored by its index, and a node with c children is an event of the
kind implied by c (1 = saddle-node pairing, 2 = doubling, 3 = m-fold
multiplication, >= 4 = junction).  A coloring is admissible when every
internal node's (color, child colors) passes the law table; leaves and the
root color are unconstrained.

Two counting conventions are supported and never mixed: PLANE trees give
children distinct positions among k+1 slots (the convention matched by the
k-ary counting formula), FREE trees identify reorderings of children.
Explicit enumeration is capped; the plane-mode count API uses memoized
dynamic programming over (size, root color) and is not.
"""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from math import comb, factorial

from .diagram import TERMINAL, Diagram, Edge, Vertex
from .laws import LawTable, builtin_table, check_index, kind_for_child_count, splits_for_child_count
from .trees import (
    EnumerationLimitError, TreeMode, _compositions, canonical_trees,
    count_kary_formula, count_shapes, enumerate_shapes, slot_trees,
)

DEFAULT_LIST_LIMIT = 1_000_000


@dataclass(frozen=True)
class ColoredTree:
    """Rooted tree with orbit-index colors; ``slots`` gives the child
    positions in plane mode and is None in free mode."""

    color: int
    children: tuple["ColoredTree", ...] = ()
    slots: tuple[int, ...] | None = None

    def __post_init__(self):
        check_index(self.color)
        if self.slots is not None and len(self.slots) != len(self.children):
            raise ValueError("slots must parallel children")

    @property
    def size(self) -> int:
        return 1 + sum(c.size for c in self.children)

    @property
    def kind(self):
        """Event kind at this node, or None at a leaf."""
        return kind_for_child_count(len(self.children)) if self.children else None

    def shape(self):
        """Uncolored shape in the carrier matching the tree's mode."""
        if self.slots is not None:
            return tuple((s, c.shape()) for s, c in zip(self.slots, self.children))
        return tuple(c.shape() for c in self.children)


def _ckey(t: ColoredTree):
    return (t.size, t.shape(), t.color, tuple(_ckey(c) for c in t.children))


@dataclass(frozen=True)
class EnumerationSpec:
    """Parameters of one enumeration run: branching budget k (at most k+1
    children per node), dimension d, node count n."""

    k: int
    d: int
    n: int
    mode: TreeMode = TreeMode.PLANE
    table: LawTable | None = None
    limit: int | None = None

    def __post_init__(self):
        if self.k < 1 or self.d < 1 or self.n < 1:
            raise ValueError("k, d and n must all be >= 1")
        object.__setattr__(self, "mode", TreeMode.coerce(self.mode))

    def resolved_table(self) -> LawTable:
        return self.table if self.table is not None else builtin_table(self.d)


# ---------------------------------------------------------------------------
# Explicit enumeration
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _ordered_color_tuples(table: LawTable, c: int, color: int) -> tuple:
    out = set()
    for mset in splits_for_child_count(table, c, color):
        out.update(permutations(mset))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _colored_plane(table: LawTable, arity: int, n: int, color: int) -> tuple:
    if n == 1:
        return (ColoredTree(color),)
    out = []
    for c in range(1, min(arity, n - 1) + 1):
        tuples = _ordered_color_tuples(table, c, color)
        if not tuples:
            continue
        for slots in combinations(range(arity), c):
            for colors in tuples:
                for sizes in _compositions(n - 1, c):
                    pools = [_colored_plane(table, arity, s, col)
                             for s, col in zip(sizes, colors)]
                    for kids in product(*pools):
                        out.append(ColoredTree(color, kids, slots))
    return tuple(out)


@lru_cache(maxsize=None)
def _colored_free(table: LawTable, max_children: int, n: int, color: int) -> tuple:
    if n == 1:
        return (ColoredTree(color),)
    out = set()
    for c in range(1, min(max_children, n - 1) + 1):
        tuples = _ordered_color_tuples(table, c, color)
        if not tuples:
            continue
        for colors in tuples:
            for sizes in _compositions(n - 1, c):
                pools = [_colored_free(table, max_children, s, col)
                         for s, col in zip(sizes, colors)]
                for kids in product(*pools):
                    ordered = tuple(sorted(kids, key=_ckey, reverse=True))
                    out.add(ColoredTree(color, ordered, None))
    return tuple(sorted(out, key=_ckey))


def enumerate_colored(spec: EnumerationSpec) -> tuple[ColoredTree, ...]:
    """All admissible colored trees for the spec, root color unconstrained.

    The explicit list is capped (``spec.limit``, default 10**6); use
    ``count_colored`` for sizes beyond the cap.
    """
    table = spec.resolved_table()
    limit = spec.limit if spec.limit is not None else DEFAULT_LIST_LIMIT
    if spec.mode is TreeMode.PLANE:
        total = count_colored(spec.k, spec.d, spec.n, spec.mode, table)
        if total > limit:
            raise EnumerationLimitError(f"{total} colored trees exceed limit {limit}")
        out = []
        for color in (-1, 0, 1):
            out.extend(_colored_plane(table, spec.k + 1, spec.n, color))
        return tuple(out)
    if count_shapes(spec.k, spec.n, TreeMode.FREE) > limit:
        raise EnumerationLimitError("shape count alone exceeds the limit")
    out = []
    for color in (-1, 0, 1):
        out.extend(_colored_free(table, spec.k + 1, spec.n, color))
    if len(out) > limit:
        raise EnumerationLimitError(f"{len(out)} colored trees exceed limit {limit}")
    return tuple(out)


def project_uncolored(trees) -> frozenset:
    """Strip colors (and kinds) from colored trees; returns the shape set."""
    return frozenset(t.shape() for t in trees)


def shape_coverage(spec: EnumerationSpec) -> tuple[int, int]:
    """How many shapes admit at least one admissible coloring, out of all
    shapes for the spec's budget.

    In dimension >= 4 with budgets 1 and 2 the coverage is full; for larger
    budgets (junction arities) and for lower dimensions the gap is reported
    here rather than papered over.
    """
    covered = project_uncolored(enumerate_colored(spec))
    return len(covered), count_shapes(spec.k, spec.n, spec.mode)


# ---------------------------------------------------------------------------
# Exact counts (plane mode: memoized DP, no materialization)
# ---------------------------------------------------------------------------

def _perm_count(mset) -> int:
    out = factorial(len(mset))
    for c in Counter(mset).values():
        out //= factorial(c)
    return out


@lru_cache(maxsize=None)
def _conv(table: LawTable, arity: int, mset: tuple, total: int) -> int:
    """Sized convolution: colored-forest count for one fixed color order."""
    if not mset:
        return 1 if total == 0 else 0
    head, rest = mset[0], mset[1:]
    out = 0
    for s in range(1, total - len(rest) + 1):
        f = _count_plane(table, arity, s, head)
        if f:
            out += f * _conv(table, arity, rest, total - s)
    return out


@lru_cache(maxsize=None)
def _count_plane(table: LawTable, arity: int, n: int, color: int) -> int:
    if n == 1:
        return 1
    total = 0
    for c in range(1, min(arity, n - 1) + 1):
        for mset in splits_for_child_count(table, c, color):
            total += comb(arity, c) * _perm_count(mset) * _conv(table, arity, mset, n - 1)
    return total


def count_colored(k: int, d: int, n: int, mode=TreeMode.PLANE,
                  table: LawTable | None = None) -> int:
    """Exact number of admissible colored trees on n nodes.

    Plane mode runs entirely in the DP; free mode is enumeration-backed and
    therefore practical only at desk scale.
    """
    table = table if table is not None else builtin_table(d)
    mode = TreeMode.coerce(mode)
    if mode is TreeMode.PLANE:
        return sum(_count_plane(table, k + 1, n, c) for c in (-1, 0, 1))
    return sum(len(_colored_free(table, k + 1, n, c)) for c in (-1, 0, 1))


# ---------------------------------------------------------------------------
# Ratio and share sequences
# ---------------------------------------------------------------------------

def ratio_sequence(k_low: int, k_high: int, d: int, n_max: int,
                   mode=TreeMode.PLANE, table: LawTable | None = None) -> list[Fraction | None]:
    """Exact count ratios (higher budget over lower) for n = 1..n_max.

    Entries with a zero denominator are flagged as None.
    """
    if k_low > k_high:
        raise ValueError("need k_low <= k_high")
    out = []
    for n in range(1, n_max + 1):
        lo = count_colored(k_low, d, n, mode, table)
        hi = count_colored(k_high, d, n, mode, table)
        out.append(Fraction(hi, lo) if lo else None)
    return out


def share_sequence(k: int, d_low: int, d_high: int, n_max: int,
                   mode=TreeMode.PLANE) -> list[Fraction | None]:
    """Exact count ratios (lower dimension over higher) for n = 1..n_max;
    each entry lies in (0, 1] because the law tables nest with dimension."""
    if d_low > d_high:
        raise ValueError("need d_low <= d_high")
    out = []
    for n in range(1, n_max + 1):
        lo = count_colored(k, d_low, n, mode)
        hi = count_colored(k, d_high, n, mode)
        out.append(Fraction(lo, hi) if hi else None)
    return out


def ratio_lower_bound(k: int, n: int) -> Fraction:
    """Lower bound on the n-th ratio entry between budgets k-1 and k:
    the (k+1)-ary shape count over 3^n times the k-ary shape count.

    Exact rational, no asymptotic approximation.
    """
    if k < 2:
        raise ValueError("bound needs k >= 2")
    return Fraction(count_kary_formula(k + 1, n), 3 ** n * count_kary_formula(k, n))


# ---------------------------------------------------------------------------
# Colored tree -> diagram bridge
# ---------------------------------------------------------------------------

def tree_to_diagram(tree: ColoredTree, dimension: int) -> Diagram:
    """Concrete diagram with one branch per tree node: each internal node
    becomes a bifurcation vertex whose parent edge is the node's own branch;
    the root's far end and all leaf ends are terminals."""
    edges: list[Edge] = []
    vertices: list[Vertex] = []
    counter = [0]

    def walk(node: ColoredTree, upper_end) -> None:
        eid = f"e{counter[0]}"
        counter[0] += 1
        if not node.children:
            edges.append(Edge(eid, node.color, (upper_end, TERMINAL)))
            return
        vid = f"v{eid}"
        edges.append(Edge(eid, node.color, (upper_end, vid)))
        kind = node.kind
        parent = None if kind.name == "saddle_node" else eid
        vertices.append(Vertex(vid, kind, parent_edge=parent))
        for child in node.children:
            walk(child, vid)

    walk(tree, TERMINAL)
    return Diagram(dimension, tuple(edges), tuple(vertices))


# ---------------------------------------------------------------------------
# Count bookkeeping
# ---------------------------------------------------------------------------

@dataclass
class CountTable:
    """Recorded exact counts keyed by (k, d, n, mode), append-only."""

    records: dict = field(default_factory=dict)

    def record(self, k: int, d: int, n: int, mode, count: int, provenance: str = "") -> None:
        if count < 0:
            raise ValueError("counts are nonnegative")
        key = (k, d, n, TreeMode.coerce(mode).value)
        if key in self.records and self.records[key][0] != count:
            raise ValueError(f"conflicting count for {key}")
        self.records.setdefault(key, (count, provenance))

    def get(self, k: int, d: int, n: int, mode) -> int | None:
        got = self.records.get((k, d, n, TreeMode.coerce(mode).value))
        return got[0] if got else None

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k", "d", "n", "mode", "count"])
        for (k, d, n, mode), (count, _) in sorted(self.records.items()):
            w.writerow([k, d, n, mode, str(count)])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "CountTable":
        table = cls()
        rows = list(csv.reader(io.StringIO(text)))
        for row in rows[1:]:
            if not row:
                continue
            k, d, n, mode, count = row
            table.record(int(k), int(d), int(n), mode, int(count), "csv")
        return table


__all__ = [
    "ColoredTree", "EnumerationSpec", "CountTable", "DEFAULT_LIST_LIMIT",
    "enumerate_colored", "project_uncolored", "count_colored",
    "ratio_sequence", "share_sequence", "ratio_lower_bound", "shape_coverage",
    "tree_to_diagram", "enumerate_shapes", "count_shapes",
    "count_kary_formula", "TreeMode", "EnumerationLimitError",
    "canonical_trees", "slot_trees",
]
