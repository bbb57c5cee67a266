"""Uncolored tree shapes: positional (slotted) trees counted by the k-ary
formula, rooted trees up to child reordering, unrooted free trees, and the
standard m-ary to binary conversion.

Three nested-tuple carriers are used:

* slot tree -- node = tuple of (slot, child) pairs with strictly increasing
  slot indices drawn from 0..arity-1.  Two trees differ if any child sits in
  a different slot.  This is the convention counted exactly by
  ``count_kary_formula``.
* ordered tree -- node = tuple of children; order matters, no slots.
* canonical tree -- node = sorted tuple of children; the canonical form of a
  rooted tree up to reordering ("free" mode of the enumerators).

A leaf is the empty tuple in every carrier.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache
from itertools import combinations
from math import comb

from .graphs import SimpleGraph


class TreeMode(Enum):
    PLANE = "plane"
    FREE = "free"

    @classmethod
    def coerce(cls, value) -> "TreeMode":
        if isinstance(value, TreeMode):
            return value
        return cls(str(value).lower())


class EnumerationLimitError(RuntimeError):
    """Raised when an explicit enumeration would exceed the configured cap."""


def count_kary_formula(k: int, n: int) -> int:
    """Number of k-ary trees on n nodes: binom(kn, n) / ((k-1)n + 1).

    The binomial is always divisible by (k-1)n + 1; the division is checked.
    """
    if k < 2:
        raise ValueError("k-ary count formula requires k >= 2")
    if n < 1:
        raise ValueError("need n >= 1")
    num = comb(k * n, n)
    den = (k - 1) * n + 1
    q, r = divmod(num, den)
    assert r == 0, "k-ary count formula produced a non-integer"
    return q


# ---------------------------------------------------------------------------
# Slot trees (positional children, "plane" mode)
# ---------------------------------------------------------------------------

def _compositions(total: int, parts: int):
    """Ordered tuples of positive integers of length ``parts`` summing to total."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def slot_trees(arity: int, n: int) -> tuple:
    """All slot trees on n nodes where each node has ``arity`` child positions."""
    if n < 1:
        return ()
    if n == 1:
        return ((),)
    out = []
    for c in range(1, min(arity, n - 1) + 1):
        for slots in combinations(range(arity), c):
            for sizes in _compositions(n - 1, c):
                out.extend(_assemble(slots, sizes, arity, 0, ()))
    return tuple(out)


def _assemble(slots, sizes, arity, i, acc):
    if i == len(slots):
        yield acc
        return
    for child in slot_trees(arity, sizes[i]):
        yield from _assemble(slots, sizes, arity, i + 1, acc + ((slots[i], child),))


def slot_tree_size(t) -> int:
    return 1 + sum(slot_tree_size(c) for _, c in t)


def strip_slots(t) -> tuple:
    """Forget slot positions, keeping child order: slot tree -> ordered tree."""
    return tuple(strip_slots(c) for _, c in t)


# ---------------------------------------------------------------------------
# Ordered trees (plane trees without slots)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def ordered_forests(total: int) -> tuple:
    if total == 0:
        return ((),)
    out = []
    for s in range(1, total + 1):
        for t in ordered_trees(s):
            for rest in ordered_forests(total - s):
                out.append((t,) + rest)
    return tuple(out)


def ordered_trees(n: int) -> tuple:
    """All plane trees on n nodes (ordered children, unbounded arity);
    there are Catalan(n-1) of them."""
    if n < 1:
        return ()
    return tuple(ordered_forests(n - 1))


def tree_size(t) -> int:
    """Node count of an ordered or canonical tree."""
    return 1 + sum(tree_size(c) for c in t)


# ---------------------------------------------------------------------------
# Canonical rooted trees (children as a multiset, "free" mode)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _bounded_forests(total: int, slots: int, max_children: int, max_key) -> tuple:
    """Non-increasing tuples of canonical trees: at most ``slots`` trees whose
    sizes sum to ``total``, each tree of branching at most ``max_children``,
    each no larger than ``max_key`` under the (size, structure) order."""
    if total == 0:
        return ((),)
    if slots == 0:
        return ()
    out = []
    for s in range(total, 0, -1):
        for t in canonical_trees(s, max_children):
            key = (s, t)
            if max_key is not None and key > max_key:
                continue
            for rest in _bounded_forests(total - s, slots - 1, max_children, key):
                out.append((t,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def canonical_trees(n: int, max_children: int | None = None) -> tuple:
    """Rooted trees on n nodes up to reordering of children, canonically
    encoded as non-increasing child tuples."""
    if n < 1:
        return ()
    mc = n if max_children is None else max_children
    if n == 1:
        return ((),)
    return _bounded_forests(n - 1, mc, mc, None)


def canonical_form(t) -> tuple:
    """Canonical (order-free) form of an ordered tree."""
    kids = sorted((canonical_form(c) for c in t), key=lambda c: (tree_size(c), c), reverse=True)
    return tuple(kids)


# ---------------------------------------------------------------------------
# Shape enumeration entry point
# ---------------------------------------------------------------------------

def count_shapes(k: int, n: int, mode=TreeMode.PLANE) -> int:
    """Exact shape count for branching budget k (at most k+1 children)."""
    mode = TreeMode.coerce(mode)
    if mode is TreeMode.PLANE:
        if n == 1:
            return 1
        return count_kary_formula(k + 1, n)
    return len(canonical_trees(n, k + 1))


def enumerate_shapes(k: int, n: int, mode=TreeMode.PLANE, limit: int | None = None) -> tuple:
    """All uncolored tree shapes on n nodes with at most k+1 children per node.

    PLANE mode returns slot trees (children occupy distinct positions among
    k+1 slots); the count then matches ``count_kary_formula(k + 1, n)``.
    FREE mode returns canonical rooted trees up to child reordering.
    """
    if k < 1 or n < 1:
        raise ValueError("need k >= 1 and n >= 1")
    mode = TreeMode.coerce(mode)
    if mode is TreeMode.PLANE:
        if limit is not None and count_kary_formula(max(k + 1, 2), n) > limit:
            raise EnumerationLimitError(
                f"{count_kary_formula(max(k + 1, 2), n)} shapes exceed limit {limit}")
        return slot_trees(k + 1, n)
    shapes = canonical_trees(n, k + 1)
    if limit is not None and len(shapes) > limit:
        raise EnumerationLimitError(f"{len(shapes)} shapes exceed limit {limit}")
    return shapes


# ---------------------------------------------------------------------------
# m-ary -> binary conversion (left child / right sibling)
# ---------------------------------------------------------------------------

def mary_to_binary(t) -> tuple:
    """Encode an ordered tree as a binary slot tree (slots: 0 = left, 1 = right).

    The leftmost child becomes the left child; each subsequent child becomes
    the right child of its previous sibling.  Injective on plane trees and
    node-count preserving.
    """

    def conv(node, siblings):
        pairs = ()
        if node:
            pairs += ((0, conv(node[0], node[1:])),)
        if siblings:
            pairs += ((1, conv(siblings[0], siblings[1:])),)
        return pairs

    if t == ():
        return ()
    return ((0, conv(t[0], t[1:])),)


def is_binary(t) -> bool:
    """True when a slot tree uses only slots 0 and 1."""
    return all(s in (0, 1) and is_binary(c) for s, c in t)


# ---------------------------------------------------------------------------
# Free (unrooted) trees
# ---------------------------------------------------------------------------

def _tree_edges(t) -> list[tuple[int, int]]:
    """Edge list of a canonical/ordered tree with BFS vertex numbering."""
    edges = []
    counter = [0]

    def walk(node, my_id):
        for child in node:
            counter[0] += 1
            cid = counter[0]
            edges.append((my_id, cid))
            walk(child, cid)

    walk(t, 0)
    return edges


def _centroids(n: int, edges) -> list[int]:
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    size = [1] * n
    order = []
    parent = [-1] * n
    stack = [0]
    seen = [False] * n
    seen[0] = True
    while stack:
        u = stack.pop()
        order.append(u)
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                stack.append(w)
    for u in reversed(order):
        if parent[u] >= 0:
            size[parent[u]] += size[u]
    best, cents = n + 1, []
    for v in range(n):
        heaviest = n - size[v]
        for w in adj[v]:
            if parent[w] == v:
                heaviest = max(heaviest, size[w])
        if heaviest < best:
            best, cents = heaviest, [v]
        elif heaviest == best:
            cents.append(v)
    return cents


def _rooted_key(n: int, edges, root: int) -> tuple:
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)

    def canon(v, par):
        kids = sorted((canon(w, v) for w in adj[v] if w != par), reverse=True)
        return tuple(kids)

    return canon(root, -1)


def free_tree_key(n: int, edges) -> tuple:
    """Isomorphism invariant of an unrooted tree: minimum rooted canonical
    form over its one or two centroids."""
    cents = _centroids(n, edges)
    return min(_rooted_key(n, edges, c) for c in cents)


@lru_cache(maxsize=None)
def free_trees(n: int) -> tuple[SimpleGraph, ...]:
    """All unrooted, unlabeled trees on n vertices, as SimpleGraphs."""
    if n < 1:
        return ()
    seen = {}
    for t in canonical_trees(n):
        edges = _tree_edges(t)
        key = free_tree_key(n, edges)
        if key not in seen:
            seen[key] = SimpleGraph.from_edges(n, edges)
    return tuple(seen.values())
