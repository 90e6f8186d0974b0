"""Stationary distributions from the principal minors of ``I - P``.

For a row-stochastic matrix ``P`` the weights ``w_i`` are the principal
minors of ``I - P``, which are always nonnegative because each is the
determinant of a Z-matrix with nonnegative row sums.  When the weights do
not all vanish, ``pi = w / sum(w)`` is the unique stationary vector; when
they all vanish the chain has several closed classes and the full solution
set is reported instead of an error.

The closed-form functions for 2..5 states evaluate the same weights from
explicit formulas in the banded parameterization (see
:func:`matrix_from_bands`) and exist chiefly as independent cross-checks of
the general minor construction.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .matrix_core import (
    EXACT,
    FLOAT,
    FLOAT_SIGN_SLACK,
    StochasticMatrix,
    clear_denominators,
    int_determinant,
    determinant,
    principal_minor,
)
from .reducibility import (
    DEFAULT_EDGE_THRESHOLD,
    DecompositionReport,
    communicating_classes,
    equilibrium_polytope,
)


@dataclass
class EquilibriumResult:
    """Outcome of a stationary-distribution computation.

    Exactly one of the two shapes occurs:

    * unique: ``pi`` is the stationary probability vector and
      ``decomposition`` is ``None``;
    * degenerate: ``pi`` is ``None`` and ``decomposition`` carries the
      closed-class breakdown with one vertex equilibrium per closed class.

    ``weights`` always holds the unnormalized minor weights.
    """

    weights: np.ndarray
    pi: np.ndarray = None
    decomposition: DecompositionReport = None

    @property
    def unique(self):
        return self.pi is not None


def _as_stochastic(p, mode=None):
    return StochasticMatrix.coerce(p, mode)


def minor_weights(p):
    """The weight vector ``w_i = principal_minor(I - P, i)``.

    The exact path clears denominators of ``I - P`` once and takes integer
    minors, dividing the row factors back out per weight; this is
    equivalent to ``n`` independent rational minors but much cheaper.
    Float weights are clamped to zero within ``1e-12`` (the true values are
    nonnegative).
    """
    sm = _as_stochastic(p)
    a = sm.i_minus_p()
    n = sm.n
    if sm.mode == EXACT:
        if n == 1:
            return np.array([Fraction(1)], dtype=object)
        rows, factors = clear_denominators(a)
        prod_all = math.prod(factors)
        w = []
        for i in range(n):
            sub = [r[:i] + r[i + 1:] for k, r in enumerate(rows) if k != i]
            w.append(Fraction(int_determinant(sub) * factors[i], prod_all))
        return np.array(w, dtype=object)
    w = np.array([principal_minor(a, i) for i in range(n)])
    w[(w < 0) & (w > -FLOAT_SIGN_SLACK)] = 0.0
    return np.clip(w, 0.0, None)


def _degenerate_weight_threshold(sm):
    a = sm.i_minus_p()
    return sm.n * 1e-12 * (1.0 + float(np.abs(a).max())) ** (sm.n - 1)


def _result_from_weights(w, sm, edge_threshold):
    total = w.sum()
    if sm.mode == EXACT:
        degenerate = total == 0
    else:
        # near-vanishing weight sums are decided structurally: the class
        # decomposition is tolerance-free and outranks the numerics
        if total <= _degenerate_weight_threshold(sm):
            report = communicating_classes(sm, edge_threshold=edge_threshold)
            degenerate = report.n_closed >= 2
        else:
            degenerate = False
    if degenerate:
        report = equilibrium_polytope(sm, edge_threshold=edge_threshold)
        return EquilibriumResult(weights=w, decomposition=report)
    if total == 0:
        raise ValueError(
            "minor weights vanished numerically for a structurally "
            "irreducible chain; use exact mode or adjust edge_threshold")
    return EquilibriumResult(weights=w, pi=w / total)


def stationary(p, *, edge_threshold=DEFAULT_EDGE_THRESHOLD):
    """Stationary distribution of a stochastic matrix.

    Parameters
    ----------
    p : StochasticMatrix or array-like
        Row-stochastic matrix; lists, ndarrays and Fractions are accepted.
    edge_threshold : float, optional
        Structural-zero cutoff used by the degeneracy analysis in float
        mode.

    Returns
    -------
    EquilibriumResult
        Unique vector when the minor weights have a positive sum, otherwise
        a degeneracy report with the closed classes and all vertex
        equilibria.  Degeneracy is a result, not an error.
    """
    sm = _as_stochastic(p)
    w = minor_weights(sm)
    return _result_from_weights(w, sm, edge_threshold)


def relative_probability(p, i, j):
    """The stationary ratio ``pi_i / pi_j`` as a ratio of two minors.

    Only the two principal minors are evaluated, no normalization over the
    full state space.  Raises ``ZeroDivisionError`` when state ``j`` has a
    vanishing weight (zero stationary mass or a degenerate chain).
    """
    sm = _as_stochastic(p)
    a = sm.i_minus_p()
    w_j = principal_minor(a, j)
    if w_j == 0:
        raise ZeroDivisionError(
            f"state {j} has zero minor weight; ratio undefined")
    return principal_minor(a, i) / w_j


def verify_equilibrium(pi, p):
    """Max-norm residual ``max_i |(pi @ P - pi)_i|``.

    Exact mode returns the exact rational residual (0 for a true stationary
    vector).  Mixed modes are compared in float.
    """
    sm = _as_stochastic(p)
    v = np.asarray(pi, dtype=object if sm.mode == EXACT else float)
    if v.ndim != 1 or v.shape[0] != sm.n:
        raise ValueError(
            f"vector of length {v.shape} does not match n={sm.n}")
    if sm.mode == EXACT and any(
        isinstance(x, (float, np.floating)) for x in v.flat
    ):
        sm = sm.to_float()
        v = v.astype(float)
    elif sm.mode == EXACT:
        v = np.array([Fraction(x) for x in v], dtype=object)
    resid = v @ sm.p - v
    return max(abs(x) for x in resid)


# ---------------------------------------------------------------------------
# closed forms in the banded parameterization
# ---------------------------------------------------------------------------

_BAND_LETTERS = "pqrst"


def matrix_from_bands(bands, mode=None):
    """Build a stochastic matrix from off-diagonal parameters, row by row.

    ``bands[i]`` holds the ``n - 1`` off-diagonal entries of row ``i``,
    starting just right of the diagonal and wrapping around; the diagonal
    is one minus their sum.  For three states with rows ``(p1, p2)``,
    ``(q1, q2)``, ``(r1, r2)``::

            [ 1-p1-p2   p1      p2    ]
        P = [ q2       1-q1-q2  q1    ]
            [ r1        r2     1-r1-r2]

    This is the parameter-order convention of every ``closed_form_*``
    function.
    """
    n = len(bands)
    rows = [[None] * n for _ in range(n)]
    for i, band in enumerate(bands):
        band = list(band)
        if len(band) != n - 1:
            raise ValueError(
                f"row {i + 1} needs {n - 1} off-diagonal parameters")
        rows[i][i] = 1 - sum(band)
        for k, x in enumerate(band, start=1):
            rows[i][(i + k) % n] = x
    return StochasticMatrix(rows, mode=mode)


def _coerce_params(values):
    """Bring scalar parameters into one mode: float wins over exact."""
    if any(isinstance(v, (float, np.floating)) for v in values):
        return [float(v) for v in values], FLOAT
    return [Fraction(v) for v in values], EXACT


def _check_bands(bands, mode):
    lo = 0 if mode == EXACT else -FLOAT_SIGN_SLACK
    hi_one = 1 if mode == EXACT else 1 + FLOAT_SIGN_SLACK
    n = len(bands) + 1
    for i, band in enumerate(bands):
        letter = _BAND_LETTERS[i]
        for k, x in enumerate(band, start=1):
            if not (lo <= x <= hi_one):
                raise ValueError(
                    f"parameter {letter}{k} = {x} outside [0, 1]")
        if not sum(band) <= (1 if mode == EXACT else 1 + n * 1e-9):
            raise ValueError(
                f"row parameters {letter}1..{letter}{n - 1} sum to "
                f"{sum(band)}, must be at most 1")


def closed_form_2(p, q):
    """Two-state equilibrium ``[q, p] / (p + q)``.

    ``p`` is the probability of leaving state 0, ``q`` of leaving state 1.
    ``p + q == 0`` means the identity chain, where every probability vector
    is stationary, and a degenerate result is returned.
    """
    (p, q), mode = _coerce_params([p, q])
    _check_bands([[p], [q]], mode)
    w = _weight_array([q, p], mode)
    return _result_from_weights(
        w, matrix_from_bands([[p], [q]], mode), DEFAULT_EDGE_THRESHOLD)


def closed_form_3(p1, p2, q1, q2, r1, r2):
    """Three-state equilibrium from the quadratic weight formulas.

    Parameters follow the banded layout of :func:`matrix_from_bands` with
    rows ``(p1, p2)``, ``(q1, q2)``, ``(r1, r2)``.  The weights are

        w1 = q1 r1 + q2 r1 + q2 r2
        w2 = r1 p1 + r2 p1 + r2 p2
        w3 = p1 q1 + p2 q1 + p2 q2

    and each is the matching principal minor of ``I - P``.
    """
    (p1, p2, q1, q2, r1, r2), mode = _coerce_params(
        [p1, p2, q1, q2, r1, r2])
    bands = [[p1, p2], [q1, q2], [r1, r2]]
    _check_bands(bands, mode)
    w1 = q1 * r1 + q2 * r1 + q2 * r2
    w2 = r1 * p1 + r2 * p1 + r2 * p2
    w3 = p1 * q1 + p2 * q1 + p2 * q2
    w = _weight_array([w1, w2, w3], mode)
    return _result_from_weights(
        w, matrix_from_bands(bands, mode), DEFAULT_EDGE_THRESHOLD)


# the 16 monomials of the first four-state weight, as (a, b, c) exponents
# meaning band2[a] * band3[b] * band4[c] with 1-based positions; the other
# three weights follow by cycling the bands one row forward at a time
_W4_FIRST_WEIGHT_TERMS = (
    (1, 1, 1), (1, 2, 1), (1, 2, 2), (1, 2, 3),
    (2, 1, 1), (2, 2, 1), (2, 2, 3), (2, 3, 1),
    (3, 1, 1), (3, 1, 2), (3, 2, 1), (3, 2, 2),
    (3, 2, 3), (3, 3, 1), (3, 3, 2), (3, 3, 3),
)


def closed_form_4(p1, p2, p3, q1, q2, q3, r1, r2, r3, s1, s2, s3):
    """Four-state equilibrium from the 16-term cubic weight sums.

    Parameters follow the banded layout of :func:`matrix_from_bands` with
    rows ``(p1..p3)``, ``(q1..q3)``, ``(r1..r3)``, ``(s1..s3)``.  Weight
    ``w_i`` is a sum of 16 products of one parameter from each of the other
    three rows; the rows rotate cyclically from one weight to the next.
    """
    params, mode = _coerce_params(
        [p1, p2, p3, q1, q2, q3, r1, r2, r3, s1, s2, s3])
    bands = [params[0:3], params[3:6], params[6:9], params[9:12]]
    _check_bands(bands, mode)
    w = []
    for i in range(4):
        a, b, c = (bands[(i + 1) % 4], bands[(i + 2) % 4],
                   bands[(i + 3) % 4])
        w.append(sum(a[x - 1] * b[y - 1] * c[z - 1]
                     for x, y, z in _W4_FIRST_WEIGHT_TERMS))
    w = _weight_array(w, mode)
    return _result_from_weights(
        w, matrix_from_bands(bands, mode), DEFAULT_EDGE_THRESHOLD)


def closed_form_5(p1, p2, p3, p4, q1, q2, q3, q4, r1, r2, r3, r4,
                  s1, s2, s3, s4, t1, t2, t3, t4):
    """Five-state equilibrium from five explicit 4x4 determinants.

    Parameters follow the banded layout of :func:`matrix_from_bands` with
    rows ``(p1..p4)`` through ``(t1..t4)``.  Each weight is written out as
    the determinant of the corresponding 4x4 principal submatrix of
    ``I - P``; expanding them would give five quartic polynomials of 125
    terms each, which is why the determinant form is used.
    """
    params, mode = _coerce_params(
        [p1, p2, p3, p4, q1, q2, q3, q4, r1, r2, r3, r4,
         s1, s2, s3, s4, t1, t2, t3, t4])
    p = params[0:4]
    q = params[4:8]
    r = params[8:12]
    s = params[12:16]
    t = params[16:20]
    bands = [p, q, r, s, t]
    _check_bands(bands, mode)
    sp, sq, sr, ss, st = (sum(x) for x in bands)
    p1, p2, p3, p4 = p
    q1, q2, q3, q4 = q
    r1, r2, r3, r4 = r
    s1, s2, s3, s4 = s
    t1, t2, t3, t4 = t
    minors = [
        [[sq, -q1, -q2, -q3],
         [-r4, sr, -r1, -r2],
         [-s3, -s4, ss, -s1],
         [-t2, -t3, -t4, st]],
        [[sp, -p2, -p3, -p4],
         [-r3, sr, -r1, -r2],
         [-s2, -s4, ss, -s1],
         [-t1, -t3, -t4, st]],
        [[sp, -p1, -p3, -p4],
         [-q4, sq, -q2, -q3],
         [-s2, -s3, ss, -s1],
         [-t1, -t2, -t4, st]],
        [[sp, -p1, -p2, -p4],
         [-q4, sq, -q1, -q3],
         [-r3, -r4, sr, -r2],
         [-t1, -t2, -t3, st]],
        [[sp, -p1, -p2, -p3],
         [-q4, sq, -q1, -q2],
         [-r3, -r4, sr, -r1],
         [-s2, -s3, -s4, ss]],
    ]
    w = _weight_array([determinant(m) for m in minors], mode)
    return _result_from_weights(
        w, matrix_from_bands(bands, mode), DEFAULT_EDGE_THRESHOLD)


def _weight_array(values, mode):
    if mode == EXACT:
        return np.array([Fraction(v) for v in values], dtype=object)
    w = np.array([float(v) for v in values])
    w[(w < 0) & (w > -FLOAT_SIGN_SLACK)] = 0.0
    return np.clip(w, 0.0, None)
