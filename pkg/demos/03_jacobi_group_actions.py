"""The Jacobi group: embedding, Lie algebra, and actions on its spaces.

Builds random elements, checks the embedding homomorphism, prints the
degree-1 bracket table, acts on Siegel-Jacobi points in all charts, and
runs the group coordinatization (modified factors plus Heisenberg part)
round trip.
"""

import numpy as np

from jacobigeom import (
    act_extended,
    act_pq,
    act_xjn,
    chart_convert,
    commutator_table,
    gj_basis_labels,
    gj_compose,
    gj_embed,
    gj_inverse,
    is_symplectic,
    sn_chart,
    sn_chart_inverse,
)
from jacobigeom.sampling import rand_jacobi, rand_pq_point

np.set_printoptions(precision=4, suppress=True)
rng = np.random.default_rng(3)

n = 2
g, h = rand_jacobi(rng, n), rand_jacobi(rng, n)
print("embedding of a product vs product of embeddings:",
      np.max(np.abs(gj_embed(gj_compose(g, h)) - gj_embed(g) @ gj_embed(h))))
print("embedded element is symplectic of degree n + 1:", is_symplectic(gj_embed(g), 1e-9))
print("inverse row/column bookkeeping: ||embed(g^{-1}) - embed(g)^{-1}|| =",
      np.max(np.abs(gj_embed(gj_inverse(g)) - np.linalg.inv(gj_embed(g)))))
print()

labels, table = commutator_table(1)
print("degree-1 structure constants (basis", labels, "):")
for i, li in enumerate(labels):
    for j in range(i + 1, len(labels)):
        terms = {labels[k]: table[i, j, k] for k in range(len(labels)) if table[i, j, k]}
        if terms:
            print(f"   [{li},{labels[j]}] =", terms)
print()

point = rand_pq_point(rng, n)
print("action on (x, y, p, q); the chart map u = p v + q intertwines it with (v, u):")
moved = act_pq(g, point)
vu_then = chart_convert(moved, "pq", "vu")
then_vu = act_xjn(g, chart_convert(point, "pq", "vu"))
print("   consistency:", max(np.max(np.abs(a - b)) for a, b in zip(vu_then, then_vu)))

ext = point + (0.25,)
e1 = act_extended(gj_compose(g, h), ext)
e2 = act_extended(g, act_extended(h, ext))
print("   left action law on the extended space:",
      max(np.max(np.abs(np.asarray(a) - np.asarray(b))) for a, b in zip(e1, e2)))
print()

chart = sn_chart(g)
print("group coordinatization (x, y, X, Y, p, q, kappa) of g:")
print("   x =", chart.x.ravel())
print("   p =", chart.p, " q =", chart.q, " kappa =", chart.kappa)
back = sn_chart_inverse(chart)
print("   round trip error:",
      max(np.max(np.abs(back.M - g.M)), np.max(np.abs(back.lam - g.lam))))
g1 = rand_jacobi(rng, 1)
print("degree 1 reduces to the classical angle coordinates: theta =",
      sn_chart(g1).theta())
