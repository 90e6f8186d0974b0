"""Dense linear algebra primitives shared by the rest of the package.

Matrices live in one of two scalar modes:

* ``"exact"``  -- entries are :class:`fractions.Fraction` values held in an
  ``object``-dtype numpy array.  All results are bit-exact; determinants are
  computed by fraction-free (Bareiss) elimination over unbounded integers
  after clearing denominators row by row.
* ``"float"``  -- entries are ``float64``.  Determinants use Gaussian
  elimination with partial pivoting; a pivot smaller than ``1e-14`` times the
  matrix row norm is treated as a structural zero.

A computation never mixes the two modes.
"""

import math
from fractions import Fraction

import numpy as np

EXACT = "exact"
FLOAT = "float"

# pivot below this multiple of the matrix row norm counts as structurally zero
FLOAT_PIVOT_RTOL = 1e-14
# slack used by float-mode sign tests (Z-matrix check, weight clamping)
FLOAT_SIGN_SLACK = 1e-12
# StochasticMatrix validation tolerances (float mode)
ENTRY_ATOL = 1e-12
ROW_SUM_ATOL = 1e-9

# above this size the adjugate switches from n^2 minors to a solve when the
# matrix is nonsingular; the minor path stays available for det = 0
_ADJUGATE_MINOR_LIMIT = 12


def _to_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, (float, np.floating)):
        return Fraction(float(x))
    return Fraction(x)


def as_exact_array(data):
    """Coerce to an object-dtype ndarray of Fractions."""
    a = np.asarray(data, dtype=object)
    out = np.empty(a.shape, dtype=object)
    for idx, x in np.ndenumerate(a):
        out[idx] = _to_fraction(x)
    return out


def as_float_array(data):
    """Coerce to a float64 ndarray."""
    a = np.asarray(data)
    if a.dtype == object:
        return np.array([[float(x) for x in row] for row in a], dtype=float) \
            if a.ndim == 2 else np.array([float(x) for x in a], dtype=float)
    return a.astype(float)


def matrix_mode(a):
    """Scalar mode of an ndarray: ``"exact"`` for object/integer dtypes."""
    a = np.asarray(a)
    return FLOAT if np.issubdtype(a.dtype, np.floating) else EXACT


def _square(data, mode=None):
    """Coerce to a square ndarray in a single scalar mode."""
    a = np.asarray(data)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if mode is None:
        mode = matrix_mode(a)
        if a.dtype == object and any(
            isinstance(x, (float, np.floating)) for x in a.flat
        ):
            mode = FLOAT
    return as_float_array(a) if mode == FLOAT else as_exact_array(a)


def identity_matrix(n, mode=EXACT):
    if mode == FLOAT:
        return np.eye(n)
    out = np.full((n, n), Fraction(0), dtype=object)
    for i in range(n):
        out[i, i] = Fraction(1)
    return out


def int_determinant(rows):
    """Determinant of an integer matrix by fraction-free elimination.

    Every intermediate value is an integer (the Bareiss update divides
    exactly), so the result is exact for entries of any size.

    Parameters
    ----------
    rows : sequence of sequences of int

    Returns
    -------
    int
        ``det(rows)``; the empty 0x0 matrix has determinant 1.
    """
    n = len(rows)
    if n == 0:
        return 1
    m = [[int(x) for x in row] for row in rows]
    if any(len(r) != n for r in m):
        raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot_row = m[k]
        pivot = pivot_row[k]
        for i in range(k + 1, n):
            row = m[i]
            lead = row[k]
            if lead == 0 and all(v == 0 for v in row[k + 1:]):
                continue
            for j in range(k + 1, n):
                row[j] = (row[j] * pivot - lead * pivot_row[j]) // prev
            row[k] = 0
        prev = pivot
    return sign * m[-1][-1]


def clear_denominators(a):
    """Scale each row of a rational matrix to integers.

    Returns ``(rows, factors)`` where ``rows[i] == factors[i] * a[i]``
    entrywise and ``factors[i]`` is the lcm of the row's denominators.
    """
    rows = []
    factors = []
    for row in a:
        fr = [_to_fraction(x) for x in row]
        f = 1
        for x in fr:
            f = math.lcm(f, x.denominator)
        rows.append([int(x.numerator) * (f // x.denominator) for x in fr])
        factors.append(f)
    return rows, factors


def _exact_determinant(a):
    rows, factors = clear_denominators(a)
    return Fraction(int_determinant(rows), math.prod(factors))


def _float_determinant(a):
    n = a.shape[0]
    if n == 0:
        return 1.0
    m = np.array(a, dtype=float)
    norm = np.abs(m).sum(axis=1).max()
    if norm == 0.0:
        return 0.0
    cutoff = FLOAT_PIVOT_RTOL * norm
    det = 1.0
    for k in range(n):
        piv = k + int(np.argmax(np.abs(m[k:, k])))
        if abs(m[piv, k]) <= cutoff:
            return 0.0
        if piv != k:
            m[[k, piv]] = m[[piv, k]]
            det = -det
        det *= m[k, k]
        if k + 1 < n:
            m[k + 1:, k:] -= np.outer(m[k + 1:, k] / m[k, k], m[k, k:])
    return float(det)


def determinant(m):
    """Determinant of a square matrix in its scalar mode.

    Exact mode returns a :class:`~fractions.Fraction` computed without any
    rounding; float mode returns a ``float`` from partially pivoted
    elimination.  The 0x0 determinant is 1 by convention.
    """
    a = _square(m)
    if matrix_mode(a) == EXACT:
        return _exact_determinant(a)
    return _float_determinant(a)


def submatrix_without(m, i, j):
    """Copy of ``m`` with row ``i`` and column ``j`` removed."""
    a = np.asarray(m)
    return np.delete(np.delete(a, i, axis=0), j, axis=1)


def minor(m, i, j):
    """The (i, j) matrix minor: det of ``m`` without row i and column j."""
    a = _square(m)
    n = a.shape[0]
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"minor index ({i}, {j}) out of range for n={n}")
    return determinant(submatrix_without(a, i, j))


def principal_minor(m, i):
    """The i-th principal minor: det of ``m`` with row i and column i deleted.

    Indices are 0-based.  For a 1x1 matrix the deleted matrix is empty and
    the minor is 1.
    """
    return minor(m, i, i)


def _exact_inverse(a):
    """Gauss-Jordan inverse over Fractions. Raises on a singular matrix."""
    n = a.shape[0]
    m = [[_to_fraction(a[i, j]) for j in range(n)] for i in range(n)]
    inv = [[Fraction(i == j) for j in range(n)] for i in range(n)]
    for k in range(n):
        piv = next((r for r in range(k, n) if m[r][k] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        m[k], m[piv] = m[piv], m[k]
        inv[k], inv[piv] = inv[piv], inv[k]
        scale = m[k][k]
        m[k] = [x / scale for x in m[k]]
        inv[k] = [x / scale for x in inv[k]]
        for r in range(n):
            if r == k or m[r][k] == 0:
                continue
            f = m[r][k]
            m[r] = [x - f * y for x, y in zip(m[r], m[k])]
            inv[r] = [x - f * y for x, y in zip(inv[r], inv[k])]
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            out[i, j] = inv[i][j]
    return out


def adjugate(m):
    """Adjugate (classical adjoint): transpose of the cofactor matrix.

    Satisfies ``adjugate(m) @ m == m @ adjugate(m) == det(m) * I``.  Small
    matrices use the n^2 minor definition directly; larger nonsingular ones
    are solved from the factorization, and the minor path is kept for the
    singular case (where the adjugate has rank at most 1).
    """
    a = _square(m)
    n = a.shape[0]
    exact = matrix_mode(a) == EXACT
    if n == 0:
        return a.copy()
    if n == 1:
        return (np.array([[Fraction(1)]], dtype=object) if exact
                else np.array([[1.0]]))
    d = determinant(a)
    if n <= _ADJUGATE_MINOR_LIMIT or d == 0:
        adj = np.empty((n, n), dtype=object if exact else float)
        for i in range(n):
            for j in range(n):
                cof = minor(a, i, j)
                adj[j, i] = cof if (i + j) % 2 == 0 else -cof
        return adj
    if exact:
        inv = _exact_inverse(a)
        out = np.empty((n, n), dtype=object)
        for idx, x in np.ndenumerate(inv):
            out[idx] = d * x
        return out
    return np.linalg.solve(a, d * np.eye(n))


def is_z_matrix(m):
    """True iff the diagonal is nonnegative and off-diagonals nonpositive.

    Float mode allows ``1e-12`` of slack on both sign tests.
    """
    a = _square(m)
    n = a.shape[0]
    if matrix_mode(a) == EXACT:
        for i in range(n):
            for j in range(n):
                if i == j and a[i, j] < 0:
                    return False
                if i != j and a[i, j] > 0:
                    return False
        return True
    for i in range(n):
        for j in range(n):
            if i == j and a[i, j] < -FLOAT_SIGN_SLACK:
                return False
            if i != j and a[i, j] > FLOAT_SIGN_SLACK:
                return False
    return True


class StochasticMatrix:
    """A dense row-stochastic matrix with a fixed scalar mode.

    Exact mode demands nonnegative entries and unit row sums exactly.
    Float mode clamps entries in ``[-1e-12, 0)`` to zero and renormalizes
    rows whose sums are within ``1e-9`` of 1; anything worse is rejected.

    Attributes
    ----------
    p : numpy.ndarray
        The transition matrix.
    n : int
        Number of states.
    mode : str
        ``"exact"`` or ``"float"``.
    """

    def __init__(self, rows, mode=None):
        p = _square(rows, mode)
        n = p.shape[0]
        if n == 0:
            raise ValueError("a stochastic matrix needs at least one state")
        if matrix_mode(p) == EXACT:
            for i in range(n):
                s = Fraction(0)
                for j in range(n):
                    if p[i, j] < 0:
                        raise ValueError(
                            f"negative entry at row {i + 1}, column {j + 1}")
                    s += p[i, j]
                if s != 1:
                    raise ValueError(f"row {i + 1} sums to {s}, expected 1")
            self.mode = EXACT
        else:
            bad = np.argwhere(p < -ENTRY_ATOL)
            if bad.size:
                i, j = bad[0]
                raise ValueError(
                    f"negative entry at row {i + 1}, column {j + 1}")
            p = np.clip(p, 0.0, None)
            sums = p.sum(axis=1)
            off = np.abs(sums - 1.0)
            if off.max() > ROW_SUM_ATOL:
                i = int(np.argmax(off))
                raise ValueError(
                    f"row {i + 1} sums to {float(sums[i])!r}, expected 1")
            p = p / sums[:, None]
            self.mode = FLOAT
        self.p = p
        self.n = n

    @classmethod
    def coerce(cls, obj, mode=None):
        if isinstance(obj, cls):
            if mode is None or obj.mode == mode:
                return obj
            return obj.to_float() if mode == FLOAT else obj.to_exact()
        return cls(obj, mode)

    def to_float(self):
        if self.mode == FLOAT:
            return self
        return StochasticMatrix(as_float_array(self.p), mode=FLOAT)

    def to_exact(self):
        if self.mode == EXACT:
            return self
        return StochasticMatrix(as_exact_array(self.p), mode=EXACT)

    def i_minus_p(self):
        """The singular Z-matrix ``I - P`` in the matrix's own mode."""
        return identity_matrix(self.n, self.mode) - self.p

    def __repr__(self):
        return f"StochasticMatrix(n={self.n}, mode={self.mode!r})"
