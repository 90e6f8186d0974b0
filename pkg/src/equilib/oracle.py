"""Independent reference methods for cross-checking the minor construction.

Three routes that share no code with the minor-weight path:

* :func:`power_method` squares the matrix repeatedly; when the dominant
  eigenvalue 1 is simple and everything else is strictly inside the unit
  circle, the powers converge to the rank-1 matrix whose rows all equal the
  stationary vector.
* :func:`linear_solve_stationary` solves the defining linear system
  directly, with one redundant column of ``I - P`` replaced by the
  normalization constraint.
* :func:`perturb` mixes the chain with the uniform one, which makes every
  subdominant eigenvalue strictly smaller than 1 and so lifts any
  degeneracy by an arbitrarily small amount.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .matrix_core import EXACT, FLOAT, StochasticMatrix, as_float_array

# spread ratios at least this close to 1 count as a stalled squaring
_STALL_RATIO = 1.0 - 1e-9
_STALL_LIMIT = 5


class SingularSystemError(ValueError):
    """The stationary linear system is rank deficient (reducible chain)."""


@dataclass
class PowerMethodReport:
    """What repeated squaring did.

    ``iterations`` counts squarings, so the final matrix is ``P`` raised to
    ``2**iterations``.  ``final_spread`` is the largest max-minus-min entry
    difference down any column; it vanishes exactly when all rows agree.
    ``converged`` is true only when the spread met the tolerance.
    """

    iterations: int
    final_spread: float
    pi_estimate: np.ndarray
    converged: bool


def _column_spread(a):
    return float((a.max(axis=0) - a.min(axis=0)).max())


def power_method(p, tol=1e-12, max_squarings=60):
    """Estimate the stationary vector by repeated squaring.

    Squares ``P`` (in float) until every column is constant to within
    ``tol`` or ``max_squarings`` is hit.  Squaring fixed points and stalled
    spreads stop the iteration early with ``converged=False``; permutation
    matrices and reducible chains land there, and that is a legitimate
    outcome rather than an error.  The estimate is the average row of the
    final power, renormalized.
    """
    sm = StochasticMatrix.coerce(p).to_float()
    a = np.array(sm.p, dtype=float)
    spread = _column_spread(a)
    iterations = 0
    converged = spread <= tol
    stalls = 0
    while not converged and iterations < max_squarings:
        b = a @ a
        # row sums drift multiplicatively under squaring; renormalizing
        # keeps the iterates stochastic at working precision
        b /= b.sum(axis=1, keepdims=True)
        iterations += 1
        new_spread = _column_spread(b)
        if np.array_equal(b, a):
            spread = new_spread
            converged = spread <= tol
            break
        stalls = stalls + 1 if spread > 0 and new_spread >= spread * _STALL_RATIO else 0
        a, spread = b, new_spread
        if spread <= tol:
            converged = True
        elif stalls >= _STALL_LIMIT:
            break
    pi = np.clip(a.mean(axis=0), 0.0, None)
    pi /= pi.sum()
    return PowerMethodReport(iterations, spread, pi, converged)


def perturb(p, epsilon):
    """Mix ``P`` with the uniform chain: ``(1 - eps) P + (eps / n) J``.

    The result is strictly positive and stochastic for any ``eps`` in
    ``(0, 1)``, so its stationary vector is unique; as ``eps`` shrinks it
    tracks an equilibrium of the original chain.  With an exact matrix and
    a rational ``eps`` the perturbation is exact; a float ``eps`` switches
    the computation to float mode.
    """
    sm = StochasticMatrix.coerce(p)
    if isinstance(epsilon, (float, np.floating)):
        mode = FLOAT
    else:
        epsilon = Fraction(epsilon)
        mode = sm.mode
    if not 0 < epsilon < 1:
        raise ValueError(f"epsilon must be in (0, 1), got {epsilon}")
    if mode == FLOAT:
        a = as_float_array(sm.p)
        eps = float(epsilon)
        mixed = (1.0 - eps) * a + eps / sm.n
    else:
        share = epsilon / sm.n
        mixed = [[(1 - epsilon) * sm.p[i, j] + share for j in range(sm.n)]
                 for i in range(sm.n)]
    return StochasticMatrix(mixed, mode=mode)


def _solve_exact(rows, rhs):
    """Gaussian elimination over Fractions; raises when singular."""
    n = len(rows)
    m = [[Fraction(x) for x in row] + [Fraction(b)]
         for row, b in zip(rows, rhs)]
    for k in range(n):
        piv = next((r for r in range(k, n) if m[r][k] != 0), None)
        if piv is None:
            raise SingularSystemError(
                "stationary system is singular; the chain is reducible")
        m[k], m[piv] = m[piv], m[k]
        for r in range(k + 1, n):
            if m[r][k] == 0:
                continue
            f = m[r][k] / m[k][k]
            m[r] = [x - f * y for x, y in zip(m[r], m[k])]
    x = [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        s = m[k][n] - sum(m[k][j] * x[j] for j in range(k + 1, n))
        x[k] = s / m[k][k]
    return x


def linear_solve_stationary(p):
    """Solve ``pi (I - P) = 0`` with ``sum(pi) = 1`` directly.

    The last column of ``I - P`` is redundant (the columns sum to the zero
    vector) and is replaced by the all-ones normalization column.  Exact
    mode returns exact rationals.  The caller is expected to pass an
    irreducible chain; a reducible one leaves the system singular and
    raises :class:`SingularSystemError`.
    """
    sm = StochasticMatrix.coerce(p)
    n = sm.n
    a = sm.i_minus_p()
    if sm.mode == EXACT:
        rows = [[a[i, j] for i in range(n)] for j in range(n - 1)]
        rows.append([Fraction(1)] * n)
        rhs = [Fraction(0)] * (n - 1) + [Fraction(1)]
        return np.array(_solve_exact(rows, rhs), dtype=object)
    system = np.array(a, dtype=float)
    system[:, n - 1] = 1.0
    rhs = np.zeros(n)
    rhs[n - 1] = 1.0
    try:
        x = np.linalg.solve(system.T, rhs)
    except np.linalg.LinAlgError as exc:
        raise SingularSystemError(
            "stationary system is singular; the chain is reducible"
        ) from exc
    # LAPACK only raises on an exactly zero pivot; catch the
    # numerically singular case through the residual
    if not np.isfinite(x).all() or np.abs(system.T @ x - rhs).max() > 1e-8:
        raise SingularSystemError(
            "stationary system is numerically singular; "
            "the chain is reducible")
    return x
