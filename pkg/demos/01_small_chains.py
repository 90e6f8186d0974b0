"""Closed-form stationary distributions for chains with 2 to 5 states.

A row-stochastic matrix P moves probability mass around; a stationary
vector pi satisfies pi @ P == pi.  For small chains the answer can be
written down explicitly, and this script walks through those formulas.
"""

from fractions import Fraction as F

from equilib import (
    closed_form_2,
    closed_form_3,
    closed_form_4,
    closed_form_5,
    matrix_from_bands,
    minor_weights,
    stationary,
)

# --- two states -------------------------------------------------------------
# P = [[1-p, p], [q, 1-q]]: state 0 leaves with rate p, state 1 with rate q.
# The equilibrium is [q, p] / (p + q): you spend time where you leave slowly.

p, q = F(1, 3), F(2, 3)
res = closed_form_2(p, q)
print("two states, p=1/3, q=2/3      ->", list(res.pi))

# When p = q = 0 the chain is the identity and *every* probability vector
# is stationary; the result is a degeneracy report rather than a vector.
res = closed_form_2(F(0), F(0))
print("identity chain unique?        ->", res.unique)
print("vertex equilibria             ->",
      [list(v) for v in res.decomposition.vertex_equilibria])

# --- three states -----------------------------------------------------------
# Parameters are laid out band by band (see matrix_from_bands): row i lists
# its off-diagonal entries starting right of the diagonal, wrapping around.
# The three weights are short quadratic sums:
#   w1 = q1 r1 + q2 r1 + q2 r2   (and cyclic images for w2, w3)

params = (F(1, 2), F(0), F(0), F(1, 3), F(1, 4), F(0))
res = closed_form_3(*params)
print("\nthree states", params)
print("weights                       ->", list(res.weights))
print("pi                            ->", list(res.pi))

# The same numbers drop out of the general construction: the weights are
# the principal minors of I - P.
P = matrix_from_bands([[F(1, 2), F(0)], [F(0), F(1, 3)], [F(1, 4), F(0)]])
print("minor weights of I - P        ->", list(minor_weights(P)))
print("general stationary            ->", list(stationary(P).pi))

# --- four and five states ----------------------------------------------------
# The same pattern continues: each weight is a sum of 16 cubic terms at
# n=4 and of 125 quartic terms at n=5.  The closed forms stay exact.

res4 = closed_form_4(*[F(1, 6)] * 12)
print("\nsymmetric four-state chain    ->", list(res4.pi))

res5 = closed_form_5(*[F(1, 8)] * 20)
print("symmetric five-state chain    ->", list(res5.pi))

# An asymmetric five-state example, checked against the minor method.
bands = [[F(1, 10), F(1, 5), F(0), F(1, 10)],
         [F(1, 4), F(0), F(1, 4), F(0)],
         [F(0), F(1, 2), F(0), F(1, 6)],
         [F(1, 3), F(0), F(0), F(1, 3)],
         [F(1, 8), F(1, 8), F(1, 8), F(1, 8)]]
flat = [x for band in bands for x in band]
res5 = closed_form_5(*flat)
general = stationary(matrix_from_bands(bands))
print("asymmetric five-state chain   ->", list(res5.pi))
print("matches the general method?   ->",
      list(res5.pi) == list(general.pi))
