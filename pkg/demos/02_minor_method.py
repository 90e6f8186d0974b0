"""The general construction: stationary weights are principal minors.

I - P is singular (rows sum to zero) and is a Z-matrix: nonnegative
diagonal, nonpositive off-diagonal.  Its adjugate has rank one, and every
row of that adjugate is the same nonnegative weight vector
w_i = principal_minor(I - P, i).  Normalizing w gives the stationary
distribution, no eigensolver and no iteration involved.
"""

from fractions import Fraction as F

import numpy as np

from equilib import (
    StochasticMatrix,
    adjugate,
    is_z_matrix,
    minor_weights,
    principal_minor,
    relative_probability,
    stationary,
    verify_equilibrium,
)

P = StochasticMatrix([
    [F(1, 2), F(1, 4), F(1, 4), F(0)],
    [F(1, 3), F(1, 3), F(0), F(1, 3)],
    [F(0), F(1, 2), F(1, 4), F(1, 4)],
    [F(1, 5), F(0), F(2, 5), F(2, 5)],
])

A = P.i_minus_p()
print("I - P is a Z-matrix?   ->", is_z_matrix(A))

# The four principal minors, each the determinant of a 3x3 submatrix.
w = minor_weights(P)
print("weights                ->", list(w))
print("first minor direct     ->", principal_minor(A, 0))

# The adjugate of I - P is rank one: all rows identical, equal to w.
adj = adjugate(A)
print("adjugate rows equal?   ->",
      all(list(adj[i]) == list(w) for i in range(P.n)))

res = stationary(P)
print("pi                     ->", list(res.pi))
print("residual pi P - pi     ->", verify_equilibrium(res.pi, P))

# Relative probabilities need only two minors, not the whole vector.
ratio = relative_probability(P, 0, 3)
print("pi[0] / pi[3]          ->", ratio)
print("consistent with pi?    ->", ratio == res.pi[0] / res.pi[3])

# The same machinery in float mode; answers match to working precision.
Pf = P.to_float()
res_f = stationary(Pf)
print("\nfloat-mode pi          ->", np.round(res_f.pi, 12))
print("max |exact - float|    ->",
      max(abs(float(a) - b) for a, b in zip(res.pi, res_f.pi)))
