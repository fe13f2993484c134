"""Symplectic matrices, their closed-form inverse, and pre-Iwasawa factors.

Walks through: membership tests, the blockwise inverse, factoring a
random symplectic matrix in both pre-Iwasawa variants, the relation
between the two variants, and the compatibility of the chart action with
the fractional-linear (Moebius) action on the Siegel upper half space.
"""

import numpy as np

from jacobigeom import (
    act_modified_chart,
    check_block_relations,
    is_symplectic,
    j_matrix,
    m_point,
    mobius_act,
    modified_pre_iwasawa,
    pre_iwasawa,
    pre_iwasawa_compose,
    sp_inverse,
)
from jacobigeom.sampling import rand_symplectic

np.set_printoptions(precision=4, suppress=True)
rng = np.random.default_rng(1)

n = 2
m = rand_symplectic(rng, n)
print("random symplectic M (n = 2):")
print(m)
print("M^t J M = J residual test:", is_symplectic(m))
print("block relations agree:", check_block_relations(m))
print()

minv = sp_inverse(m)
print("closed-form inverse [[d^t, -b^t], [-c^t, a^t]]; ||M M^{-1} - I|| =",
      np.max(np.abs(m @ minv - np.eye(2 * n))))
print()

print("plain pre-Iwasawa factors: M = [[I, x], [0, I]] [[y, 0], [0, y^-1]] [[X, Y], [-Y, X]]")
f = pre_iwasawa(m)
print("x =", f.x.ravel(), " y eigenvalues =", np.linalg.eigvalsh(f.y))
print("recomposition error:", np.max(np.abs(pre_iwasawa_compose(f) - m)))

fm = modified_pre_iwasawa(m)
print("modified variant has y_mod = y_plain^2:",
      np.max(np.abs(fm.y - f.y @ f.y)) < 1e-12,
      " and the same x, X, Y:",
      np.max(np.abs(fm.x - f.x)) < 1e-12)
print()

print("the (x, y) block of the modified chart action equals the Moebius image:")
chart = (fm.x, fm.y, fm.X, fm.Y)
g = rand_symplectic(rng, n)
x1, y1, X1, Y1 = act_modified_chart(g, chart)
v1 = mobius_act(g, fm.x + 1j * fm.y)
print("   difference:", np.max(np.abs(x1 + 1j * y1 - v1)))

print()
print("transitivity: the shear-dilation matrix of (x, y) sends iI to x + iy")
x = np.array([[0.3, -0.1], [-0.1, 0.8]])
y = np.array([[1.5, 0.2], [0.2, 0.9]])
v = mobius_act(m_point(x, y), 1j * np.eye(n))
print("   reached:", np.max(np.abs(v - (x + 1j * y))) < 1e-12)
print()
print("J itself is symplectic:", is_symplectic(j_matrix(n)),
      "and decomposes with x = 0, y = I, (X, Y) = (0, I):")
fj = pre_iwasawa(j_matrix(n))
print("   X =", fj.X.ravel(), " Y =", fj.Y.ravel())
