"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with ``pytest -s tests/test_acceptance.py`` to see the per-criterion
report.  Every tolerance here is exact (integer or rational equality); the
stated wall-clock budgets are asserted too.
"""

import time
from collections import Counter
from itertools import product

from bifgraph import (
    EnumerationSpec, SimpleGraph, block_decomposition, builtin_table,
    cactus_count, check_cycle_parity, check_period_consistency, connected_graphs, count_kary_formula, enumerate_colored, enumerate_shapes,
    free_trees, graphic_matroid, has_vamos_minor, husimi_count, is_binary,
    is_block_graph, is_claw_free, line_graph, mary_to_binary,
    nonadmissible_period_fixture, ordered_trees, project_uncolored,
    ratio_lower_bound, ratio_sequence, share_sequence, slot_trees,
    spanning_count_kirchhoff, spanning_enumerate_brute, tree_size, tutte_11,
    validate_diagram, vamos,
)
from bifgraph.enumeration import count_colored
from bifgraph.matroids import VAMOS_CIRCUIT_QUADS
from bifgraph.trees import slot_tree_size
from helpers import labeled_graphs, sn_cycle


def report(num: int, message: str) -> None:
    print(f"PASS criterion {num:02d}: {message}")


def test_criterion_01_kary_formula_matches_enumeration():
    start = time.monotonic()
    for arity in (2, 3, 4):
        for n in range(1, 8):
            shapes = slot_trees(arity, n)
            assert len(shapes) == len(set(shapes))
            assert len(shapes) == count_kary_formula(arity, n), (arity, n)
    elapsed = time.monotonic() - start
    assert elapsed < 10
    report(1, f"slot-tree enumeration equals the k-ary closed form for "
              f"arity 2..4, n 1..7 ({elapsed:.1f}s)")


def test_criterion_02_colorings_cover_every_shape_in_dimension_four():
    start = time.monotonic()
    checked = 0
    for k in (1, 2):
        for n in range(1, 8):
            shapes = project_uncolored(enumerate_colored(EnumerationSpec(k, 4, n)))
            assert shapes == frozenset(enumerate_shapes(k, n)), (k, n)
            checked += len(shapes)
    elapsed = time.monotonic() - start
    assert elapsed < 60
    report(2, f"projected colorings cover all {checked} shapes for k in "
              f"{{1,2}}, n <= 7, dimension 4 ({elapsed:.1f}s)")


def test_criterion_03_growth_ratios_and_lower_bound():
    seq = ratio_sequence(1, 2, 4, 7)
    for i in range(2, 6):
        assert seq[i] < seq[i + 1], f"not strictly increasing at n={i + 1}"
    for k in (2, 3):
        ratios = ratio_sequence(k - 1, k, 4, 6)
        for n, value in enumerate(ratios, start=1):
            bound = ratio_lower_bound(k, n)
            assert value >= bound, (k, n, value, bound)
    report(3, "budget-growth ratios increase from n=3 and dominate the "
              "exact lower bound for k in {2,3}, n <= 6")


def test_criterion_04_dimension_monotonicity_and_shares():
    for k in (1, 2):
        for n in range(1, 8):
            c2 = count_colored(k, 2, n)
            c3 = count_colored(k, 3, n)
            c4 = count_colored(k, 4, n)
            assert c2 <= c3 <= c4, (k, n)
    for k in (1, 2):
        for d_low, d_high in ((2, 3), (3, 4), (2, 4)):
            for value in share_sequence(k, d_low, d_high, 7):
                assert value is not None and 0 < value <= 1
    report(4, "counts grow with dimension and every share lies in (0, 1]")


def test_criterion_05_one_dimensional_collapse():
    for n in range(1, 9):
        a = frozenset(enumerate_colored(EnumerationSpec(1, 1, n)))
        b = frozenset(enumerate_colored(EnumerationSpec(1, 2, n)))
        assert a == b, f"n={n}"
    report(5, "colored families for (k=1, d=1) and (k=1, d=2) coincide "
              "for n <= 8")


def test_criterion_06_cycle_parity_law():
    rejected = accepted = 0
    for length in range(3, 8):
        for colors in product((-1, 0, 1), repeat=length):
            checks = check_cycle_parity(sn_cycle(2, list(colors)))
            if length % 2 == 1:
                assert not all(c.ok for c in checks), (length, colors)
                rejected += 1
            else:
                alternating = all(abs(c) == 1 for c in colors) and all(
                    colors[i] != colors[(i + 1) % length] for i in range(length))
                assert all(c.ok for c in checks) == alternating
    for d in (3, 4):
        for length in (3, 5, 7):
            checks = check_cycle_parity(sn_cycle(d, [0] * length))
            assert all(c.ok for c in checks)
            accepted += 1
    for length in (4, 6):
        colors = [1, -1] * (length // 2)
        assert all(c.ok for c in check_cycle_parity(sn_cycle(2, colors)))
        accepted += 1
    report(6, f"parity law rejects {rejected} odd saddle-node colorings in "
              f"d=2 and accepts the {accepted} admissible reference cycles")


def test_criterion_07_period_obstruction_fixture():
    fx = nonadmissible_period_fixture()
    table = builtin_table(2)
    full = validate_diagram(fx, 1, table)
    assert {v.code for v in full.violations} == {"period"}
    period = check_period_consistency(fx)
    assert period.applicable and not period.ok
    stripped = fx.__class__(
        fx.dimension,
        tuple(e.__class__(e.id, e.index, e.ends, None) for e in fx.edges),
        fx.vertices)
    assert validate_diagram(stripped, 1, table).ok
    report(7, "shipped fixture passes every index-based law yet fails the "
              "period check (saddle node s2 joins periods 1 and 4)")


def test_criterion_08_matrix_tree_theorem():
    start = time.monotonic()
    graphs = [g for n in range(1, 7) for g in connected_graphs(n)]
    assert sum(1 for g in graphs if g.n == 6) == 112
    for g in graphs:
        kirchhoff = spanning_count_kirchhoff(g)
        assert kirchhoff == len(spanning_enumerate_brute(g))
        assert kirchhoff == tutte_11(g)
    elapsed = time.monotonic() - start
    assert elapsed < 120
    report(8, f"determinant, brute force and deletion-contraction agree on "
              f"all {len(graphs)} connected graphs with <= 6 vertices "
              f"({elapsed:.1f}s)")


def test_criterion_09_line_graphs_of_trees():
    total = 0
    for n in range(2, 10):
        for tree in free_trees(n):
            lg = line_graph(tree)
            assert is_block_graph(lg) and is_claw_free(lg)
            total += 1
    report(9, f"line graphs of all {total} free trees with <= 9 vertices "
              f"are claw-free block graphs")


def test_criterion_10_counting_formulas_against_labeled_enumeration():
    for n in range(2, 10):
        assert husimi_count({2: n - 1}) == n ** (n - 2)
    block_census: Counter = Counter()
    cactus_census: Counter = Counter()
    for n in range(2, 7):
        for edges in labeled_graphs(n):
            g = SimpleGraph.from_edges(n, edges)
            if not g.is_connected():
                continue
            dec = block_decomposition(g)
            sizes = tuple(sorted(len(b) for b in dec.blocks))
            clique_blocks = all(
                len(es) == len(vs) * (len(vs) - 1) // 2
                for vs, es in zip(dec.blocks, dec.block_edges))
            cycle_blocks = all(
                len(es) in (1, len(vs))
                for vs, es in zip(dec.blocks, dec.block_edges))
            if clique_blocks:
                block_census[sizes] += 1
            if cycle_blocks:
                cactus_census[sizes] += 1
    assert block_census and cactus_census
    for sizes, count in block_census.items():
        assert husimi_count(dict(Counter(sizes))) == count, sizes
    for sizes, count in cactus_census.items():
        assert cactus_count(dict(Counter(sizes))) == count, sizes
    assert cactus_count({2: 1}) == 1  # size-2 polygons carry no half factor
    report(10, f"closed forms match labeled enumeration on "
               f"{len(block_census)} block specs and {len(cactus_census)} "
               f"cactus specs with <= 6 vertices")


def test_criterion_11_vamos_obstruction():
    start = time.monotonic()
    v = vamos()
    assert v.is_independent({"c1", "c2", "d1", "d2"})
    for quad in VAMOS_CIRCUIT_QUADS:
        assert not v.is_independent(quad)
    assert has_vamos_minor(v)
    checked = 0
    for n in range(1, 7):
        for g in connected_graphs(n):
            assert not has_vamos_minor(graphic_matroid(g)), sorted(g.edges)
            checked += 1
    elapsed = time.monotonic() - start
    assert elapsed < 300
    report(11, f"vamos self-test positive; no vamos minor in any of the "
               f"{checked} graphic matroids from connected graphs with <= 6 "
               f"vertices ({elapsed:.0f}s)")


def test_criterion_12_binary_conversion():
    seen = {}
    total = 0
    for n in range(1, 9):
        for t in ordered_trees(n):
            b = mary_to_binary(t)
            assert is_binary(b)
            assert slot_tree_size(b) == tree_size(t) == n
            assert b not in seen
            seen[b] = t
            total += 1
    report(12, f"left-child/right-sibling conversion is injective, "
               f"size-preserving and binary on all {total} plane trees "
               f"with <= 8 nodes")
