"""The real Jacobi group of degree n: semidirect product of the Heisenberg
group with the symplectic group.

An element is stored canonically as (M, lambda, mu, kappa); the Heisenberg
parameters (p, q) := (lambda, mu) M^{-1} tied to the matrix embedding are
derived on demand, which avoids keeping two copies of the same state in
sync.  Composition:

    (M, (l, m), k) o (M', (l', m'), k')
        = (M M', (lt + l', mt + m'), k + k' + lt m'^t - mt l'^t),
    (lt, mt) := (l, m) M'.

The embedding into the degree-(n+1) symplectic group uses block rows and
columns of sizes (n, 1, n, 1):

    [ a   0   b   q^t  ]
    [ l   1   m   kappa]
    [ c   0   d  -p^t  ]
    [ 0   0   0   1    ]

and is an exact group homomorphism.
"""

from dataclasses import dataclass

import numpy as np

from .exceptions import BadShape, BasisClosureFailure, ProjectionResidual
from .heisenberg import HeisenbergElement
from .linalg import check_spd, check_symmetric, symmetrize
from .symplectic import (
    PreIwasawaFactors,
    blocks,
    check_symplectic,
    modified_pre_iwasawa,
    mobius_act,
    pre_iwasawa_compose,
    sp_inverse,
)


def _row(v):
    return np.asarray(v, dtype=float).ravel()


@dataclass(frozen=True)
class JacobiElement:
    M: np.ndarray
    lam: np.ndarray
    mu: np.ndarray
    kappa: float

    def __post_init__(self):
        object.__setattr__(self, "M", check_symplectic(self.M))
        object.__setattr__(self, "lam", _row(self.lam))
        object.__setattr__(self, "mu", _row(self.mu))
        object.__setattr__(self, "kappa", float(self.kappa))
        n = self.M.shape[0] // 2
        if self.lam.shape != (n,) or self.mu.shape != (n,):
            raise BadShape("lambda/mu length must match the degree of M")

    @property
    def n(self):
        return self.M.shape[0] // 2

    def heisenberg_part(self):
        return HeisenbergElement(self.lam, self.mu, self.kappa)


def gj_identity(n):
    return JacobiElement(np.eye(2 * n), np.zeros(n), np.zeros(n), 0.0)


def gj_compose(g, gp):
    if g.n != gp.n:
        raise BadShape(f"degree mismatch: {g.n} vs {gp.n}")
    ap, bp, cp, dp = blocks(gp.M)
    lt = g.lam @ ap + g.mu @ cp
    mt = g.lam @ bp + g.mu @ dp
    kappa = g.kappa + gp.kappa + float(lt @ gp.mu) - float(mt @ gp.lam)
    return JacobiElement(g.M @ gp.M, lt + gp.lam, mt + gp.mu, kappa)


def pq_from_lm(lam, mu, m):
    """(p, q) = (lambda, mu) M^{-1} = (lambda d^t - mu c^t, -lambda b^t + mu a^t)."""
    lam, mu = _row(lam), _row(mu)
    a, b, c, d = blocks(m)
    return lam @ d.T - mu @ c.T, -(lam @ b.T) + mu @ a.T


def lm_from_pq(p, q, m):
    """(lambda, mu) = (p, q) M = (p a + q c, p b + q d)."""
    p, q = _row(p), _row(q)
    a, b, c, d = blocks(m)
    return p @ a + q @ c, p @ b + q @ d


def gj_inverse(g):
    """g^{-1} = (M^{-1}, -(p, q), -kappa) with (p, q) = (lambda, mu) M^{-1}."""
    p, q = pq_from_lm(g.lam, g.mu, g.M)
    return JacobiElement(sp_inverse(g.M), -p, -q, -g.kappa)


def gj_embed(g):
    """Embedding into the degree-(n+1) symplectic group (homomorphism)."""
    n = g.n
    a, b, c, d = blocks(g.M)
    p, q = pq_from_lm(g.lam, g.mu, g.M)
    out = np.zeros((2 * n + 2, 2 * n + 2))
    out[:n, :n] = a
    out[:n, n + 1:2 * n + 1] = b
    out[:n, 2 * n + 1] = q
    out[n, :n] = g.lam
    out[n, n] = 1.0
    out[n, n + 1:2 * n + 1] = g.mu
    out[n, 2 * n + 1] = g.kappa
    out[n + 1:2 * n + 1, :n] = c
    out[n + 1:2 * n + 1, n + 1:2 * n + 1] = d
    out[n + 1:2 * n + 1, 2 * n + 1] = -p
    out[2 * n + 1, 2 * n + 1] = 1.0
    return out


def gj_from_embedding(mat, tol=1e-8):
    """Recover (M, lambda, mu, kappa) from an embedded matrix.

    Checks the structural zeros and the consistency of the (p, q) column
    entries with (lambda, mu) M^{-1}; raises ProjectionResidual if the
    matrix does not have the Jacobi block form.
    """
    mat = np.asarray(mat, dtype=float)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1] or mat.shape[0] % 2:
        raise BadShape(f"expected even square matrix, got {mat.shape}")
    n = (mat.shape[0] - 2) // 2
    a = mat[:n, :n]
    b = mat[:n, n + 1:2 * n + 1]
    c = mat[n + 1:2 * n + 1, :n]
    d = mat[n + 1:2 * n + 1, n + 1:2 * n + 1]
    m = np.block([[a, b], [c, d]])
    lam = mat[n, :n]
    mu = mat[n, n + 1:2 * n + 1]
    kappa = mat[n, 2 * n + 1]
    g = JacobiElement(m, lam, mu, kappa)
    res = np.max(np.abs(mat - gj_embed(g)))
    if res > tol * max(1.0, np.max(np.abs(mat))):
        raise ProjectionResidual(f"matrix is not a Jacobi embedding, residual {res:.3e}")
    return g


# ---------------------------------------------------------------------------
# Lie algebra


@dataclass(frozen=True)
class JacobiAlgebraElement:
    """Element of the Jacobi algebra in block coordinates (a, b, c, p, q, r).

    Embedded matrix (block sizes (n, 1, n, 1)):

        [ a   0   b    q^t ]
        [ p   0   q    r   ]
        [ c   0  -a^t -p^t ]
        [ 0   0   0    0   ]

    b and c are symmetric; a is unrestricted.
    """

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    p: np.ndarray
    q: np.ndarray
    r: float

    def __post_init__(self):
        object.__setattr__(self, "a", np.asarray(self.a, dtype=float))
        object.__setattr__(self, "b", check_symmetric(self.b, rtol=1e-9))
        object.__setattr__(self, "c", check_symmetric(self.c, rtol=1e-9))
        object.__setattr__(self, "p", _row(self.p))
        object.__setattr__(self, "q", _row(self.q))
        object.__setattr__(self, "r", float(self.r))

    @property
    def n(self):
        return self.a.shape[0]

    def to_matrix(self):
        n = self.n
        out = np.zeros((2 * n + 2, 2 * n + 2))
        out[:n, :n] = self.a
        out[:n, n + 1:2 * n + 1] = self.b
        out[:n, 2 * n + 1] = self.q
        out[n, :n] = self.p
        out[n, n + 1:2 * n + 1] = self.q
        out[n, 2 * n + 1] = self.r
        out[n + 1:2 * n + 1, :n] = self.c
        out[n + 1:2 * n + 1, n + 1:2 * n + 1] = -self.a.T
        out[n + 1:2 * n + 1, 2 * n + 1] = -self.p
        return out

    @classmethod
    def from_matrix(cls, z, tol=1e-10):
        """Project an embedded matrix back onto block coordinates.

        Duplicated blocks (a vs -a^t, the two copies of p and q) are
        averaged, which makes this the orthogonal projection onto the
        algebra; the remaining residual must vanish up to ``tol`` or
        ProjectionResidual is raised.
        """
        z = np.asarray(z, dtype=float)
        n = (z.shape[0] - 2) // 2
        elem = cls(
            a=0.5 * (z[:n, :n] - z[n + 1:2 * n + 1, n + 1:2 * n + 1].T),
            b=symmetrize(z[:n, n + 1:2 * n + 1]),
            c=symmetrize(z[n + 1:2 * n + 1, :n]),
            p=0.5 * (z[n, :n] - z[n + 1:2 * n + 1, 2 * n + 1]),
            q=0.5 * (z[n, n + 1:2 * n + 1] + z[:n, 2 * n + 1]),
            r=z[n, 2 * n + 1],
        )
        res = np.max(np.abs(z - elem.to_matrix()))
        if res > tol * max(1.0, np.max(np.abs(z))):
            raise ProjectionResidual(f"not in the Jacobi algebra, residual {res:.3e}")
        return elem

    def coefficients(self):
        """Coordinates over the ordered basis of :func:`gj_basis`.

        The expansion of an algebra element carries weight 2 on the
        off-diagonal F/G generators (b = sum of b_ij (E_ij + E_ji) while
        2 F_ij has block E_ij + E_ji), so the F-coordinate of b is
        2 b_ij for i < j and b_ii on the diagonal; likewise for G.
        """
        n = self.n
        coeffs = []
        for i in range(n):
            for j in range(n):
                coeffs.append(self.a[i, j])
        for i in range(n):
            for j in range(i, n):
                coeffs.append(self.b[i, j] * (2.0 if i != j else 1.0))
        for i in range(n):
            for j in range(i, n):
                coeffs.append(self.c[i, j] * (2.0 if i != j else 1.0))
        coeffs.extend(self.p)
        coeffs.extend(self.q)
        coeffs.append(self.r)
        return np.array(coeffs)


def gj_basis_labels(n):
    labels = [f"H{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    labels += [f"F{i + 1}{j + 1}" for i in range(n) for j in range(i, n)]
    labels += [f"G{i + 1}{j + 1}" for i in range(n) for j in range(i, n)]
    labels += [f"P{p + 1}" for p in range(n)]
    labels += [f"Q{q + 1}" for q in range(n)]
    labels += ["R"]
    return labels


def gj_basis_elements(n):
    """Basis of the Jacobi algebra as JacobiAlgebraElement values.

    Order: H_ij (all i, j), F_ij (i <= j), G_ij (i <= j), P_p, Q_q, R.
    Count: (n + 1)(2n + 1).
    """
    zero = np.zeros((n, n))
    zrow = np.zeros(n)
    elems = []
    for i in range(n):
        for j in range(n):
            a = np.zeros((n, n))
            a[i, j] = 1.0
            elems.append(JacobiAlgebraElement(a, zero, zero, zrow, zrow, 0.0))
    for i in range(n):
        for j in range(i, n):
            b = np.zeros((n, n))
            b[i, j] += 0.5
            b[j, i] += 0.5
            elems.append(JacobiAlgebraElement(zero, b, zero, zrow, zrow, 0.0))
    for i in range(n):
        for j in range(i, n):
            c = np.zeros((n, n))
            c[i, j] += 0.5
            c[j, i] += 0.5
            elems.append(JacobiAlgebraElement(zero, zero, c, zrow, zrow, 0.0))
    for p in range(n):
        row = np.zeros(n)
        row[p] = 1.0
        elems.append(JacobiAlgebraElement(zero, zero, zero, row, zrow, 0.0))
    for q in range(n):
        row = np.zeros(n)
        row[q] = 1.0
        elems.append(JacobiAlgebraElement(zero, zero, zero, zrow, row, 0.0))
    elems.append(JacobiAlgebraElement(zero, zero, zero, zrow, zrow, 1.0))
    return elems


def gj_basis(n):
    """Embedded (2n+2) x (2n+2) basis matrices, ordered as in gj_basis_labels."""
    return [e.to_matrix() for e in gj_basis_elements(n)]


def gj_bracket(z1, z2):
    """Lie bracket: matrix commutator of the embeddings, projected back.

    Raises BasisClosureFailure if the commutator leaves the algebra span
    (which cannot happen for valid inputs).
    """
    comm = z1.to_matrix() @ z2.to_matrix() - z2.to_matrix() @ z1.to_matrix()
    try:
        return JacobiAlgebraElement.from_matrix(comm)
    except ProjectionResidual as exc:
        raise BasisClosureFailure(str(exc)) from exc


def commutator_table(n, snap_tol=1e-9):
    """Structure constants over the gj_basis order, snapped to the k/4 grid.

    All constants are exact quarter-integers: the off-diagonal F/G
    generators carry a 1/2 block normalization, so products of two of
    them contribute multiples of 1/4; the Heisenberg sector ([P_p, Q_q] =
    2 delta_pq R and friends) is integer.  Any coefficient farther than
    ``snap_tol`` from the grid raises BasisClosureFailure.
    """
    elems = gj_basis_elements(n)
    dim = len(elems)
    table = np.zeros((dim, dim, dim))
    for i in range(dim):
        for j in range(i + 1, dim):
            coeffs = gj_bracket(elems[i], elems[j]).coefficients()
            snapped = np.round(coeffs * 4.0) / 4.0
            if np.max(np.abs(coeffs - snapped)) > snap_tol:
                raise BasisClosureFailure(
                    f"constants of [{i},{j}] not on the quarter-integer grid"
                )
            table[i, j] = snapped
            table[j, i] = -snapped
    return gj_basis_labels(n), table


# ---------------------------------------------------------------------------
# actions on the Siegel-Jacobi spaces


def act_xjn(g, point):
    """Action on (v, u): v Moebius-transformed, u -> (u + lambda v + mu)(c v + d)^{-1}."""
    v, u = point
    v = np.asarray(v, dtype=complex)
    u = np.asarray(u, dtype=complex).ravel()
    a, b, c, d = blocks(g.M)
    v1 = mobius_act(g.M, v)
    den = c @ v + d
    u1 = np.linalg.solve(den.T, (u + g.lam @ v + g.mu).T).T
    return v1, u1


def act_pq(g, point):
    """Action on (x, y, p, q): Moebius on x + iy, affine on (p, q).

    (p1, q1) = (p, q)_g + (p', q') M^{-1} = (p_g + p' d^t - q' c^t,
                                             q_g - p' b^t + q' a^t).
    """
    x, y, p, q = point
    gp, gq = pq_from_lm(g.lam, g.mu, g.M)
    a, b, c, d = blocks(g.M)
    v1 = mobius_act(g.M, check_symmetric(x) + 1j * np.asarray(check_spd(y), dtype=float))
    p = _row(p)
    q = _row(q)
    p1 = gp + p @ d.T - q @ c.T
    q1 = gq - p @ b.T + q @ a.T
    return v1.real, v1.imag, p1, q1


def act_extended(g, point):
    """Action on (x, y, p, q, kappa); kappa picks up lambda q'^t - mu p'^t."""
    x, y, p, q, kappa = point
    x1, y1, p1, q1 = act_pq(g, (x, y, p, q))
    k1 = g.kappa + float(kappa) + float(g.lam @ _row(q)) - float(g.mu @ _row(p))
    return x1, y1, p1, q1, k1


# ---------------------------------------------------------------------------
# the S_n coordinatization of the group


@dataclass(frozen=True)
class SnChart:
    """Coordinates (x, y, X, Y, p, q, kappa) of a Jacobi group element.

    (x, y, X, Y) are the modified pre-Iwasawa factors of the symplectic
    part and (p, q) = (lambda, mu) M^{-1}.  For n = 1 the pair (X, Y) is
    (cos theta, sin theta) of the classical S-coordinates.
    """

    x: np.ndarray
    y: np.ndarray
    X: np.ndarray
    Y: np.ndarray
    p: np.ndarray
    q: np.ndarray
    kappa: float

    def __post_init__(self):
        f = PreIwasawaFactors(self.x, self.y, self.X, self.Y, "modified")
        object.__setattr__(self, "x", f.x)
        object.__setattr__(self, "y", f.y)
        object.__setattr__(self, "X", f.X)
        object.__setattr__(self, "Y", f.Y)
        object.__setattr__(self, "p", _row(self.p))
        object.__setattr__(self, "q", _row(self.q))
        object.__setattr__(self, "kappa", float(self.kappa))

    @property
    def n(self):
        return self.x.shape[0]

    def theta(self):
        """Angle for n = 1: X = cos(theta), Y = sin(theta)."""
        if self.n != 1:
            raise BadShape("theta is only defined for degree 1")
        return float(np.arctan2(self.Y[0, 0], self.X[0, 0]))


def sn_chart_identity(n):
    return SnChart(np.zeros((n, n)), np.eye(n), np.eye(n), np.zeros((n, n)),
                   np.zeros(n), np.zeros(n), 0.0)


def sn_chart(g):
    f = modified_pre_iwasawa(g.M)
    p, q = pq_from_lm(g.lam, g.mu, g.M)
    return SnChart(f.x, f.y, f.X, f.Y, p, q, g.kappa)


def sn_chart_inverse(chart):
    m = pre_iwasawa_compose(
        PreIwasawaFactors(chart.x, chart.y, chart.X, chart.Y, "modified")
    )
    lam, mu = lm_from_pq(chart.p, chart.q, m)
    return JacobiElement(m, lam, mu, chart.kappa)


# ---------------------------------------------------------------------------
# point charts on the Siegel-Jacobi space

CHARTS = ("vu", "pq", "xirho", "chipsi")


def chart_convert(point, src, dst):
    """Convert a Siegel-Jacobi point between the four charts.

    vu:     (v, u) complex, u = p v + q;
    pq:     (x, y, p, q) real rows;
    xirho:  (x, y, xi, rho) with u = xi + i rho, so p = rho y^{-1} and
            q = xi - rho y^{-1} x (the transformation has non-vanishing
            Jacobian for y SPD);
    chipsi: (x, y, chi, psi) columns with chi = q^t, psi = p^t.
    """
    if src not in CHARTS or dst not in CHARTS:
        raise ValueError(f"charts must be one of {CHARTS}")
    if src == dst:
        return point
    # normalize through the pq chart
    if src == "vu":
        v, u = point
        v = np.asarray(v, dtype=complex)
        u = np.asarray(u, dtype=complex).ravel()
        x, y = v.real, check_spd(v.imag)
        rho = u.imag
        p = np.linalg.solve(y.T, rho.T).T
        q = u.real - p @ x
        pq = (x, y, p, q)
    elif src == "xirho":
        x, y, xi, rho = point
        y = check_spd(y)
        p = np.linalg.solve(np.asarray(y, dtype=float).T, _row(rho).T).T
        q = _row(xi) - p @ np.asarray(x, dtype=float)
        pq = (np.asarray(x, dtype=float), np.asarray(y, dtype=float), p, q)
    elif src == "chipsi":
        x, y, chi, psi = point
        pq = (np.asarray(x, dtype=float), np.asarray(check_spd(y), dtype=float),
              _row(psi), _row(chi))
    else:
        x, y, p, q = point
        pq = (np.asarray(x, dtype=float), np.asarray(check_spd(y), dtype=float),
              _row(p), _row(q))

    x, y, p, q = pq
    if dst == "pq":
        return x, y, p, q
    if dst == "vu":
        v = x + 1j * y
        return v, p @ v + q
    if dst == "xirho":
        return x, y, p @ x + q, p @ y
    return x, y, q.copy(), p.copy()  # chipsi: columns stored as 1-d arrays
