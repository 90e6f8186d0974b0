"""Independent reference methods, and when each one breaks down.

Three ways to the same vector: the direct minor construction, a linear
solve of the defining system, and the power method by repeated squaring
P -> P^2 -> P^4 -> ...  The first two are exact in rational arithmetic;
the third needs the subdominant eigenvalues strictly inside the unit
circle, which a small uniform perturbation can always arrange.
"""

from fractions import Fraction as F

import numpy as np

from equilib import (
    linear_solve_stationary,
    perturb,
    power_method,
    stationary,
)

rng = np.random.default_rng(0)
P = rng.uniform(0.05, 1.0, size=(5, 5))
P /= P.sum(axis=1, keepdims=True)

pi_minor = stationary(P).pi
pi_solve = linear_solve_stationary(P)
report = power_method(P, tol=1e-12)

print("minor method ->", np.round(pi_minor, 10))
print("linear solve ->", np.round(pi_solve, 10))
print("power method ->", np.round(report.pi_estimate, 10),
      f"({report.iterations} squarings)")
print("max disagreement ->",
      max(np.max(np.abs(pi_minor - pi_solve)),
          np.max(np.abs(pi_minor - report.pi_estimate))))

# The power method fails on a permutation matrix: P^2 = I, P^4 = I, ...
# oscillates forever, and the squaring stalls without converging.
swap = np.array([[0.0, 1.0], [1.0, 0.0]])
report = power_method(swap)
print("\nswap chain converged? ->", report.converged,
      f"(spread stuck at {report.final_spread})")

# The minor method has no such restriction: a periodic chain still has a
# perfectly good unique equilibrium.
print("swap chain by minors  ->", list(stationary(swap).pi))

# Perturbing toward the uniform chain restores power-method convergence
# without moving the answer far.
lifted = perturb(swap, 1e-6)
report = power_method(lifted, tol=1e-12)
print("perturbed swap        ->", np.round(report.pi_estimate, 8),
      f"converged={report.converged} in {report.iterations} squarings")

# In exact arithmetic the perturbation is exact too: mixing the identity
# with the uniform chain gives exactly the uniform equilibrium for every
# epsilon, however small.
identity = [[F(1), F(0)], [F(0), F(1)]]
for eps in (F(1, 100), F(1, 10 ** 6)):
    res = stationary(perturb(identity, eps))
    print(f"identity + eps={eps} ->", list(res.pi))
