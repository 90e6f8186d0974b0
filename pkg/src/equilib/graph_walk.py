"""Random walks on (multi-)graphs through pure integer arithmetic.

For an adjacency matrix ``A`` of nonnegative integers and out-degree matrix
``D``, the walk matrix is ``P = D^-1 A`` and the stationary weights can be
taken from the integer matrix ``D - A`` instead of the rational ``I - P``:

    pi_i  proportional to  d_i * principal_minor(D - A, i)

Every numerator and the common denominator are integers; the only division
happens once, at the very end.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .matrix_core import int_determinant, StochasticMatrix
from .equilibrium import EquilibriumResult
from .reducibility import equilibrium_polytope


class ZeroOutDegreeError(ValueError):
    """A node has no outgoing edges, so the walk matrix is undefined."""

    def __init__(self, node):
        self.node = node
        super().__init__(
            f"node index {node} has zero out-degree; the random walk "
            f"leaving it is undefined")


class Graph:
    """Directed multigraph stored as a dense integer adjacency matrix.

    ``adjacency[i][j]`` counts the edges from node ``i`` to node ``j``;
    multi-edges and self-loops are allowed.  An undirected graph is simply
    a symmetric adjacency matrix.
    """

    def __init__(self, adjacency):
        a = np.asarray(adjacency)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"adjacency must be square, got {a.shape}")
        rows = []
        for i in range(a.shape[0]):
            row = []
            for j in range(a.shape[1]):
                x = a[i, j]
                if isinstance(x, (float, np.floating)):
                    if x != int(x):
                        raise ValueError(
                            f"adjacency entry ({i + 1}, {j + 1}) = {x} "
                            f"is not an integer")
                x = int(x)
                if x < 0:
                    raise ValueError(
                        f"adjacency entry ({i + 1}, {j + 1}) is negative")
                row.append(x)
            rows.append(row)
        self.adjacency = rows
        self.n = len(rows)

    @classmethod
    def from_edges(cls, n, edges):
        """Build from ``(i, j)`` or ``(i, j, multiplicity)`` tuples, 0-based."""
        a = [[0] * n for _ in range(n)]
        for edge in edges:
            i, j, *rest = edge
            m = rest[0] if rest else 1
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) out of range for n={n}")
            a[i][j] += int(m)
        return cls(a)

    def __repr__(self):
        return f"Graph(n={self.n})"


def degree_vector(g):
    """Out-degrees ``d_i = sum_j a_ij``; every one must be positive."""
    degrees = [sum(row) for row in g.adjacency]
    for i, d in enumerate(degrees):
        if d == 0:
            raise ZeroOutDegreeError(i)
    return np.array(degrees, dtype=object)


def walk_matrix(g):
    """The exact stochastic matrix ``P = D^-1 A`` of the simple random walk."""
    degrees = degree_vector(g)
    rows = [[Fraction(a, int(d)) for a in row]
            for row, d in zip(g.adjacency, degrees)]
    return StochasticMatrix(rows)


@dataclass
class GraphEquilibrium:
    """Stationary distribution of a graph walk with its integer pieces.

    ``numerators[i] == d_i * principal_minor(D - A, i)`` and
    ``denominator`` is their sum; ``result.pi`` (when unique) equals
    ``numerators / denominator`` reduced to lowest terms.
    """

    numerators: list
    denominator: int
    result: EquilibriumResult

    @property
    def unique(self):
        return self.result.unique


def graph_stationary(g):
    """Stationary distribution of the random walk on ``g``.

    All minors are evaluated over the integers from ``D - A``; the single
    rational division happens only when normalizing at the end.

    Returns
    -------
    GraphEquilibrium
        Holds the raw integer numerators and denominator next to the
        :class:`~equilib.equilibrium.EquilibriumResult`, whose weights are
        the exact minor weights of the walk matrix.
    """
    degrees = degree_vector(g)
    n = g.n
    d_minus_a = [[(int(degrees[i]) if i == j else 0) - g.adjacency[i][j]
                  for j in range(n)] for i in range(n)]
    minors = []
    for i in range(n):
        sub = [row[:i] + row[i + 1:]
               for k, row in enumerate(d_minus_a) if k != i]
        minors.append(int_determinant(sub))
    numerators = [int(d) * m for d, m in zip(degrees, minors)]
    total = sum(numerators)
    prod_d = math.prod(int(d) for d in degrees)
    weights = np.array([Fraction(num, prod_d) for num in numerators],
                       dtype=object)
    if total > 0:
        pi = np.array([Fraction(num, total) for num in numerators],
                      dtype=object)
        result = EquilibriumResult(weights=weights, pi=pi)
    else:
        report = equilibrium_polytope(walk_matrix(g))
        result = EquilibriumResult(weights=weights, decomposition=report)
    return GraphEquilibrium(numerators, total, result)
