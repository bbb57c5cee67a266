"""Spanning-tree counting: determinant route, brute-force oracle, and the
deletion-contraction evaluation that equals the spanning-tree count on
connected graphs (and the product of per-component counts otherwise).

Counts are exact integers throughout; the determinant is taken with
fraction-free integer elimination rather than floating-point eigenvalues.
"""

from __future__ import annotations

from itertools import combinations

from .graphs import SimpleGraph


def _int_det(mat: list[list[int]]) -> int:
    """Fraction-free (Bareiss) determinant of an integer matrix."""
    n = len(mat)
    if n == 0:
        return 1
    m = [row[:] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def laplacian(g: SimpleGraph) -> list[list[int]]:
    """Degree matrix minus adjacency matrix: symmetric, zero row sums."""
    lap = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    return lap


def spanning_count_edges(n: int, edges) -> int:
    """Spanning-tree count of a multigraph given as an edge list (parallel
    edges allowed, loops ignored), via the reduced-Laplacian determinant."""
    if n <= 1:
        return 1
    lap = [[0] * n for _ in range(n)]
    for u, v in edges:
        if u == v:
            continue
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    minor = [row[1:] for row in lap[1:]]
    return _int_det(minor)


def spanning_count_kirchhoff(g: SimpleGraph) -> int:
    """Number of spanning trees via any principal minor of the Laplacian.

    Returns 0 on disconnected input (no spanning tree exists).
    """
    if g.n > 1 and not g.is_connected():
        return 0
    return spanning_count_edges(g.n, g.edges)


def spanning_enumerate_brute(g: SimpleGraph) -> list[tuple[tuple[int, int], ...]]:
    """All spanning trees as edge subsets, by direct search (<= 8 vertices)."""
    if g.n > 8:
        raise ValueError("brute-force spanning enumeration is limited to 8 vertices")
    if g.n <= 1:
        return [()]
    out = []
    for subset in combinations(g.sorted_edges(), g.n - 1):
        parent = list(range(g.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        acyclic = True
        for u, v in subset:
            ru, rv = find(u), find(v)
            if ru == rv:
                acyclic = False
                break
            parent[ru] = rv
        if acyclic:
            out.append(subset)
    return out


def _span_dc(n: int, edges: tuple) -> int:
    """Spanning-tree count by deletion-contraction on a multigraph; loops
    contribute a factor of one and are dropped."""
    edges = tuple(e for e in edges if e[0] != e[1])
    if n == 1:
        return 1
    if not edges:
        return 0
    u, v = edges[0]
    rest = edges[1:]
    deleted = _span_dc(n, rest)
    # contract (u, v): relabel v -> u and compact
    keep = [x for x in range(n) if x != v]
    pos = {x: i for i, x in enumerate(keep)}
    merged = []
    for a, b in rest:
        a2 = u if a == v else a
        b2 = u if b == v else b
        merged.append((pos[a2], pos[b2]))
    contracted = _span_dc(n - 1, tuple(merged))
    return deleted + contracted


def tutte_11(g: SimpleGraph) -> int:
    """Deletion-contraction count of maximal spanning forests: equals the
    spanning-tree count when g is connected, and the product of the
    per-component counts otherwise."""
    if len(g.edges) > 20:
        raise ValueError("deletion-contraction recursion is limited to 20 edges")
    total = 1
    for comp in g.components():
        sub = g.induced(comp)
        total *= _span_dc(sub.n, tuple(sub.sorted_edges()))
    return total
