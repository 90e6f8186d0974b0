"""Chains without a unique equilibrium: classes, vertices, polytopes.

All of the minor weights vanish exactly when the chain has two or more
closed communicating classes.  That is not a failure: each closed class
carries its own equilibrium, and the set of all stationary vectors is the
convex hull of those per-class vertices.
"""

from fractions import Fraction as F

from equilib import (
    communicating_classes,
    equilibrium_polytope,
    is_irreducible,
    minor_weights,
    stationary,
    verify_equilibrium,
)

# Two absorbing states with a leaky middle state.
P = [[F(1), F(0), F(0)],
     [F(1, 3), F(1, 3), F(1, 3)],
     [F(0), F(0), F(1)]]

print("irreducible?      ->", is_irreducible(P))
print("minor weights     ->", list(minor_weights(P)))

report = communicating_classes(P)
for cls, closed in zip(report.classes, report.closed_flags):
    print(f"class {cls} closed -> {closed}")
print("transitory states ->", report.transitory_states)

# stationary() notices the vanishing weights and hands back the full
# decomposition instead of a vector.
res = stationary(P)
print("unique?           ->", res.unique)
for v in res.decomposition.vertex_equilibria:
    print("vertex            ->", list(v))

# Every convex combination of the vertices is itself stationary.
v1, v2 = res.decomposition.vertex_equilibria
for lam in (F(1, 4), F(1, 2), F(7, 9)):
    mix = lam * v1 + (1 - lam) * v2
    print(f"lambda={lam}: residual of mix ->", verify_equilibrium(mix, P))

# A block structure plus an absorbing singleton: the 2x2 block keeps its
# own equilibrium, embedded with a zero for the third state.
P2 = [[F(2, 3), F(1, 3), F(0)],
      [F(1, 2), F(1, 2), F(0)],
      [F(0), F(0), F(1)]]
report = equilibrium_polytope(P2)
print("\nblock + singleton vertices:")
for v in report.vertex_equilibria:
    print("  ", list(v))

# The identity chain is the extreme case: every state is its own closed
# class and the polytope is the whole probability simplex.
identity = [[F(int(i == j)) for j in range(4)] for i in range(4)]
report = equilibrium_polytope(identity)
print("\nidentity chain vertices:")
for v in report.vertex_equilibria:
    print("  ", list(v))
