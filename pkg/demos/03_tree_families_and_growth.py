"""
Counting admissible colored trees
=================================

Acyclic diagrams in their star form are rooted colored trees.  This script
enumerates the admissible families exactly, then reproduces the growth
comparison between branching budgets: allowing one more child per event
makes the family larger by a factor that grows without bound in n, already
visible at desk scale against the exact lower bound.
"""

from fractions import Fraction

from bifgraph import (
    EnumerationSpec, count_colored, count_kary_formula, enumerate_colored,
    enumerate_shapes, project_uncolored, ratio_lower_bound, ratio_sequence,
    share_sequence,
)

# ---------------------------------------------------------------------------
# Shapes and colorings
# ---------------------------------------------------------------------------
# Branching budget k means at most k+1 children per node; plane mode gives
# children distinct slots, so shape counts follow the k-ary formula.

for n in range(1, 8):
    print(f"n={n}: binary-slot shapes={len(enumerate_shapes(1, n))} "
          f"(formula {count_kary_formula(2, n)})")

trees = enumerate_colored(EnumerationSpec(1, 4, 3))
print(f"\ncolored trees, k=1 d=4 n=3: {len(trees)}")
print("shapes covered:", len(project_uncolored(trees)), "of",
      len(enumerate_shapes(1, 3)))

# In dimension 4 every shape is colorable; in dimension 2 the index-0 child
# of a doubling can never split again, so some shapes become uncolorable.
full = frozenset(enumerate_shapes(1, 5))
low = project_uncolored(enumerate_colored(EnumerationSpec(1, 2, 5)))
print(f"d=2 coverage at n=5: {len(low)} of {len(full)} shapes")

# ---------------------------------------------------------------------------
# Exact counts scale far beyond explicit lists
# ---------------------------------------------------------------------------

print("\nexact counts, k=2 d=4 (plane):")
for n in (5, 10, 15, 20):
    print(f"  n={n}: {count_colored(2, 4, n)}")

# ---------------------------------------------------------------------------
# Relative growth across budgets and dimensions
# ---------------------------------------------------------------------------

seq = ratio_sequence(1, 2, 4, 7)
print("\nratio |k=2 family| / |k=1 family| in d=4:")
for n, value in enumerate(seq, start=1):
    print(f"  n={n}: {value} ~ {float(value):.3f}")

print("\nexact lower bound for the k=2 over k=1 step:")
for n in range(1, 7):
    bound = ratio_lower_bound(2, n)
    print(f"  n={n}: ratio {seq[n - 1]} >= bound {bound}")

print("\nshare of lower dimensions inside d=4 (k=2):")
for d in (2, 3):
    values = share_sequence(2, d, 4, 7)
    tail = values[-1]
    print(f"  d={d}: " + " ".join(str(v) for v in values)
          + f"  (n=7 entry ~ {float(tail):.4f})")

# The one-dimensional family equals the two-dimensional one at k=1: with at
# most two children there is no three-way splitting to distinguish them.
assert share_sequence(1, 1, 2, 8) == [Fraction(1)] * 8
print("\nk=1 share of d=1 inside d=2: identically 1")
