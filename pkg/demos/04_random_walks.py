"""Random walks on graphs: the all-integer fast path.

A walker at node i follows one of the a_ij outgoing edges uniformly at
random, so P = D^-1 A with D the diagonal of out-degrees.  Instead of
working with the rational matrix I - P one can take minors of the integer
matrix D - A:

    pi_i  is proportional to  d_i * principal_minor(D - A, i)

Numerators and denominator are integers; the one division happens last.
"""

from equilib import (
    Graph,
    degree_vector,
    graph_stationary,
    stationary,
    walk_matrix,
)

# A path on three nodes: 1 -- 2 -- 3 (symmetric adjacency).
path = Graph([[0, 1, 0],
              [1, 0, 1],
              [0, 1, 0]])
print("degrees     ->", list(degree_vector(path)))

ge = graph_stationary(path)
print("numerators  ->", ge.numerators)
print("denominator ->", ge.denominator)
print("pi          ->", list(ge.result.pi))

# For a connected undirected graph the answer is degree-proportional:
# the middle node has twice the degree, hence twice the mass.

# The integer route and the rational route agree exactly.
res = stationary(walk_matrix(path))
print("matches matrix route? ->", list(ge.result.pi) == list(res.pi))

# Multi-edges count: doubling one edge drags mass toward its endpoints.
multi = Graph([[0, 2, 0],
               [2, 0, 1],
               [0, 1, 0]])
print("\nmulti-edge path pi    ->",
      list(graph_stationary(multi).result.pi))

# Directed graphs work the same way; a directed cycle is perfectly fair.
cycle = Graph([[0, 1, 0],
               [0, 0, 1],
               [1, 0, 0]])
print("directed 3-cycle pi   ->",
      list(graph_stationary(cycle).result.pi))

# An asymmetric directed graph: no degree shortcut here, the minors of
# D - A do the real work, still entirely in integers.
digraph = Graph([[0, 2, 1],
                 [1, 0, 1],
                 [3, 0, 0]])
ge = graph_stationary(digraph)
print("digraph numerators    ->", ge.numerators)
print("digraph pi            ->", list(ge.result.pi))

# A disconnected graph has no unique equilibrium; the report lists the
# per-component vertices just like any other reducible chain.
two_triangles = Graph([
    [0, 1, 1, 0, 0, 0],
    [1, 0, 1, 0, 0, 0],
    [1, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 1],
    [0, 0, 0, 1, 0, 1],
    [0, 0, 0, 1, 1, 0],
])
ge = graph_stationary(two_triangles)
print("\ndisconnected unique?  ->", ge.unique)
for v in ge.result.decomposition.vertex_equilibria:
    print("vertex                ->", list(v))
