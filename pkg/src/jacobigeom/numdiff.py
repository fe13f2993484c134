"""Central-difference machinery for pushforwards and field brackets.

Differential-geometric cross-checks in this package avoid symbolic
Jacobians: tangents are pushed through smooth maps by central differences
along curves.  Straight-line curves are used for unconstrained
components; the orthogonal-pair components of an S_n chart move along
``U exp(t K)`` so the curve stays exactly on the manifold.
"""

import numpy as np
from scipy.linalg import expm

from .jacobi import SnChart

DEFAULT_STEP = 1e-6


def tuple_line(point, tangent, t):
    """Straight-line curve point + t * tangent, componentwise over a tuple."""
    return tuple(np.asarray(p) + t * np.asarray(d) if np.ndim(p) else p + t * d
                 for p, d in zip(point, tangent))


def fd_push(f, point, tangent, step=DEFAULT_STEP):
    """Central-difference pushforward of ``tangent`` through ``f``.

    ``f`` maps tuples of components to tuples of components; all
    components must support scalar multiplication and subtraction.
    """
    plus = f(tuple_line(point, tangent, step))
    minus = f(tuple_line(point, tangent, -step))
    return tuple((np.asarray(a) - np.asarray(b)) / (2 * step) if np.ndim(a)
                 else (a - b) / (2 * step)
                 for a, b in zip(plus, minus))


def sn_chart_curve(chart, tangent, t):
    """Curve through an SnChart point with the given velocity.

    (x, y, p, q, kappa) move linearly; (X, Y) along U exp(t K) with
    K = U^dagger (dX + i dY), which reproduces the velocity (dX, dY) at
    t = 0 and keeps the pair exactly orthogonal-symplectic.
    """
    dx, dy, dX, dY, dp, dq, dk = tangent
    u = chart.X + 1j * chart.Y
    k = u.conj().T @ (dX + 1j * dY)
    ut = u @ expm(t * k)
    return SnChart(chart.x + t * dx, chart.y + t * dy, ut.real, ut.imag,
                   chart.p + t * dp, chart.q + t * dq, chart.kappa + t * dk)


def sn_chart_to_tuple(chart):
    return (chart.x, chart.y, chart.X, chart.Y, chart.p, chart.q, chart.kappa)


def fd_push_sn(f, chart, tangent, step=DEFAULT_STEP):
    """Pushforward through a map SnChart -> SnChart by central differences."""
    plus = sn_chart_to_tuple(f(sn_chart_curve(chart, tangent, step)))
    minus = sn_chart_to_tuple(f(sn_chart_curve(chart, tangent, -step)))
    return tuple((np.asarray(a) - np.asarray(b)) / (2 * step)
                 for a, b in zip(plus, minus))


def _flatten(parts):
    return np.concatenate([np.atleast_1d(np.asarray(p, dtype=float)).ravel()
                           for p in parts])


def _unflatten(vec, template):
    out = []
    k = 0
    for p in template:
        arr = np.atleast_1d(np.asarray(p, dtype=float))
        size = arr.size
        out.append(vec[k:k + size].reshape(arr.shape) if np.ndim(p) else float(vec[k]))
        k += size
    return tuple(out)


def fd_bracket(field1, field2, point, step=1e-5):
    """Commutator of two vector fields by nested central differences.

    Fields are functions point-tuple -> tangent-tuple on the same chart;
    the bracket is  J(W) V - J(V) W  with Jacobians formed column by
    column from central differences.
    """
    p0 = _flatten(point)
    template = point

    def as_vec(field, pvec):
        return _flatten(field(_unflatten(pvec, template)))

    v0 = as_vec(field1, p0)
    w0 = as_vec(field2, p0)
    dim = p0.size
    jac_v = np.zeros((dim, dim))
    jac_w = np.zeros((dim, dim))
    for i in range(dim):
        e = np.zeros(dim)
        e[i] = step
        jac_v[:, i] = (as_vec(field1, p0 + e) - as_vec(field1, p0 - e)) / (2 * step)
        jac_w[:, i] = (as_vec(field2, p0 + e) - as_vec(field2, p0 - e)) / (2 * step)
    return _unflatten(jac_w @ v0 - jac_v @ w0, template)
