"""Combinatorial structure of a chain: communicating classes and, when the
equilibrium is not unique, the vertices of the polytope of equilibria.

States communicate when each is reachable from the other through edges
``i -> j`` with ``p_ij`` structurally nonzero (exact mode: nonzero; float
mode: above a configurable threshold).  A class is closed when no edge
leaves it; states in non-closed classes are transitory and carry no
stationary mass.
"""

from dataclasses import dataclass, field, replace
from fractions import Fraction

import numpy as np

from .matrix_core import EXACT, StochasticMatrix

# float entries at or below this are not treated as edges
DEFAULT_EDGE_THRESHOLD = 1e-14


class InconsistentDecompositionError(RuntimeError):
    """A closed-class restriction failed to produce a unique equilibrium.

    This cannot happen for a genuine communicating class; raising it
    signals a bug rather than a property of the input.
    """


@dataclass
class DecompositionReport:
    """Communicating-class decomposition of a chain.

    ``classes`` partitions the states (0-based indices, each class sorted,
    classes ordered by their smallest state).  ``vertex_equilibria`` holds
    one stationary vector per closed class, supported exactly on that
    class; it is ``None`` until filled by :func:`equilibrium_polytope`.
    """

    classes: list = field(default_factory=list)
    closed_flags: list = field(default_factory=list)
    transitory_states: list = field(default_factory=list)
    vertex_equilibria: list = None

    @property
    def closed_classes(self):
        return [c for c, ok in zip(self.classes, self.closed_flags) if ok]

    @property
    def n_closed(self):
        return sum(self.closed_flags)


def _structural_adjacency(sm, edge_threshold):
    """Neighbor lists of the transition digraph (self-loops included)."""
    p = sm.p
    n = sm.n
    if sm.mode == EXACT:
        return [[j for j in range(n) if p[i, j] != 0] for i in range(n)]
    return [[j for j in range(n) if p[i, j] > edge_threshold]
            for i in range(n)]


def _strongly_connected_components(adj):
    """Tarjan's algorithm, iteratively, over neighbor lists."""
    n = len(adj)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack = []
    comps = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        work = [(root, iter(adj[root]))]
        while work:
            v, neighbors = work[-1]
            advanced = False
            for w in neighbors:
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(adj[w])))
                    advanced = True
                    break
                if on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            if advanced:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
    comps.sort(key=lambda c: c[0])
    return comps


def communicating_classes(p, *, edge_threshold=DEFAULT_EDGE_THRESHOLD):
    """Partition the states into communicating classes.

    Returns a :class:`DecompositionReport` with ``vertex_equilibria`` left
    unfilled.  A class is flagged closed when no structural edge leaves it.
    """
    sm = StochasticMatrix.coerce(p)
    adj = _structural_adjacency(sm, edge_threshold)
    classes = _strongly_connected_components(adj)
    closed_flags = []
    for cls in classes:
        members = set(cls)
        closed_flags.append(
            all(w in members for v in cls for w in adj[v]))
    transitory = sorted(
        v for cls, ok in zip(classes, closed_flags) if not ok for v in cls)
    return DecompositionReport(classes, closed_flags, transitory)


def is_irreducible(p, *, edge_threshold=DEFAULT_EDGE_THRESHOLD):
    """True iff the whole state space is one communicating class."""
    report = communicating_classes(p, edge_threshold=edge_threshold)
    return len(report.classes) == 1


def _embed(vec, indices, n, mode):
    if mode == EXACT:
        out = np.array([Fraction(0)] * n, dtype=object)
    else:
        out = np.zeros(n)
    for k, i in enumerate(indices):
        out[i] = vec[k]
    return out


def equilibrium_polytope(p, *, edge_threshold=DEFAULT_EDGE_THRESHOLD):
    """Vertices of the polytope of stationary vectors.

    Each closed class, restricted to itself, is an irreducible stochastic
    matrix with a unique equilibrium; embedding those back into the full
    state space (zeros elsewhere) gives the vertex set whose convex hull is
    the complete solution set of ``pi @ P == pi``.  A chain with a unique
    equilibrium yields a single vertex.
    """
    from .equilibrium import stationary  # deferred; see module note below

    sm = StochasticMatrix.coerce(p)
    report = communicating_classes(sm, edge_threshold=edge_threshold)
    vertices = []
    for cls, closed in zip(report.classes, report.closed_flags):
        if not closed:
            continue
        sub = StochasticMatrix(sm.p[np.ix_(cls, cls)], mode=sm.mode)
        res = stationary(sub, edge_threshold=edge_threshold)
        if not res.unique:
            raise InconsistentDecompositionError(
                f"closed class {cls} did not produce a unique equilibrium")
        vertices.append(_embed(res.pi, cls, sm.n, sm.mode))
    return replace(report, vertex_equilibria=vertices)


# equilibrium.stationary reports degeneracy through this module while the
# polytope construction needs stationary for each closed class; the import
# above is deferred to keep module loading acyclic.
