"""The Heisenberg group: composition, embedding, one-forms and fields.

Shows the twisted composition law and its central extension behavior,
the symplectic embedding as an exact homomorphism, evaluation of the
left-invariant one-forms, invariance of the metric under left
translation, and the bracket [P*, Q*] = -2 R* of the fundamental fields.
"""

import numpy as np

from jacobigeom import (
    HeisenbergElement,
    h_compose,
    h_embed,
    h_fvf,
    h_identity,
    h_inverse,
    h_metric,
    h_oneforms,
    is_symplectic,
)

np.set_printoptions(precision=4, suppress=True)

n = 2
g = HeisenbergElement([1.0, 0.0], [0.0, 0.0], 0.0)
h = HeisenbergElement([0.0, 0.0], [1.0, 0.0], 0.0)
print("g = (e1, 0, 0), h = (0, e1, 0)")
print("g o h has center", h_compose(g, h).kappa, " while h o g has center",
      h_compose(h, g).kappa, " (non-commutative)")
print()

gh = h_compose(g, h)
print("the embedding is an exact homomorphism:")
print("   ||embed(g o h) - embed(g) embed(h)|| =",
      np.max(np.abs(h_embed(gh) - h_embed(g) @ h_embed(h))))
print("   embed(g) is symplectic of degree n + 1:", is_symplectic(h_embed(g)))
print("   embed(g^{-1}) = embed(g)^{-1}:",
      np.max(np.abs(h_embed(h_inverse(g)) - np.linalg.inv(h_embed(g)))) < 1e-12)
print()

rng = np.random.default_rng(2)
point = HeisenbergElement(rng.normal(size=n), rng.normal(size=n), rng.normal())
tangent = (rng.normal(size=n), rng.normal(size=n), rng.normal())
lp, lq, lr = h_oneforms(point, tangent)
print("one-forms at a random point: l^p =", lp, " l^q =", lq, " l^r =", lr)
print("metric value:", h_metric(point, tangent))

shift = HeisenbergElement(rng.normal(size=n), rng.normal(size=n), rng.normal())
pushed = (tangent[0], tangent[1],
          tangent[2] + shift.lam @ tangent[1] - shift.mu @ tangent[0])
print("after left translation (exact affine pushforward):",
      h_metric(h_compose(shift, point), pushed))
print()

print("fundamental fields at the identity-like point (0, e1, 0):")
base = HeisenbergElement(np.zeros(n), np.array([1.0, 0.0]), 0.0)
print("   P1* =", h_fvf(("P", 0), base), "  (kappa component is mu_1)")
print("   R*  =", h_fvf("R", base))

# commutator of the exact flows of P1* and Q1*: the quadratic term is -2 R*
s = 1e-4
def flow(gen, pt, t):
    lam = np.zeros(n); mu = np.zeros(n); kap = 0.0
    if gen == "R":
        kap = t
    elif gen[0] == "P":
        lam[gen[1]] = t
    else:
        mu[gen[1]] = t
    return h_compose(HeisenbergElement(lam, mu, kap), pt)

e = h_identity(n)
loop = flow(("Q", 0), flow(("P", 0), flow(("Q", 0), flow(("P", 0), e, s), s), -s), -s)
print("flow commutator of (P1*, Q1*): kappa / s^2 =", loop.kappa / s**2,
      " -> [P1*, Q1*] = -2 R*")
