"""The real symplectic group, the Siegel upper half space, and pre-Iwasawa factorizations.

A degree-n symplectic matrix is a 2n x 2n real matrix M with
``M^t J M = J`` where ``J = [[0, I], [-I, 0]]``.  Throughout, the block
splitting is ``M = [[a, b], [c, d]]`` with n x n blocks.

Two factorizations of M are provided:

* plain:     ``M = [[I, x], [0, I]] [[y, 0], [0, y^-1]] [[X, Y], [-Y, X]]``
  with ``y = (d d^t + c c^t)^{-1/2}`` and ``X - iY = y (d + i c)``;
* modified:  same shape but with ``y^{1/2}`` in the diagonal factor, so
  ``y_modified = y_plain^2`` while x and (X, Y) coincide.

The modified variant is the one that matches the fractional-linear
(Moebius) action on the Siegel upper half space: the (x, y) factor of
``M M'`` equals the Moebius image of ``x' + i y'`` under M.
"""

from dataclasses import dataclass

import numpy as np

from .exceptions import (
    BadShape,
    NotSymplectic,
    NotUnitaryPair,
    SingularDenominator,
)
from .linalg import check_spd, check_symmetric, sqrtm_spd, sym_residual, symmetrize

SP_TOL = 1e-10
DET_TOL = 1e-8


def j_matrix(n):
    """The standard symplectic form J_n = [[0, I], [-I, 0]]."""
    j = np.zeros((2 * n, 2 * n))
    j[:n, n:] = np.eye(n)
    j[n:, :n] = -np.eye(n)
    return j


def blocks(m):
    """Split a 2n x 2n matrix into its (a, b, c, d) blocks."""
    m = np.asarray(m)
    n = m.shape[0] // 2
    return m[:n, :n], m[:n, n:], m[n:, :n], m[n:, n:]


def from_blocks(a, b, c, d):
    return np.block([[np.asarray(a), np.asarray(b)], [np.asarray(c), np.asarray(d)]])


def symplectic_residual(m):
    """Max-norm of M^t J M - J.  Raises BadShape for non-even-dimensional input."""
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] % 2:
        raise BadShape(f"expected an even-dimensional square matrix, got {m.shape}")
    j = j_matrix(m.shape[0] // 2)
    return np.max(np.abs(m.T @ j @ m - j))


def is_symplectic(m, tol=SP_TOL):
    """True iff ``M^t J M = J`` holds within ``tol`` (max-norm)."""
    return symplectic_residual(m) <= tol


def check_symplectic(m, tol=SP_TOL, det_tol=DET_TOL):
    """Validate the symplectic invariants (residual and det = 1); return M."""
    m = np.asarray(m, dtype=float)
    res = symplectic_residual(m)
    if res > tol:
        raise NotSymplectic(f"symplectic residual {res:.3e} exceeds {tol:.3e}")
    det = np.linalg.det(m)
    if abs(det - 1.0) > det_tol * max(1.0, abs(det)):
        raise NotSymplectic(f"determinant {det!r} differs from 1")
    return m


def sp_inverse(m, tol=SP_TOL):
    """Closed-form inverse  [[d^t, -b^t], [-c^t, a^t]]  of a symplectic matrix."""
    m = check_symplectic(m, tol)
    a, b, c, d = blocks(m)
    return from_blocks(d.T, -b.T, -c.T, a.T)


def check_block_relations(m, tol=SP_TOL):
    """True iff both equivalent sets of block relations hold within ``tol``.

    Set one:  a b^t = b a^t,  a d^t - b c^t = I,  c d^t = d c^t.
    Set two:  a^t c = c^t a,  a^t d - c^t b = I,  b^t d = d^t b.

    Agrees with :func:`is_symplectic` (the second set is M^t J M = J
    written out; the first is M J M^t = J).
    """
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] % 2:
        raise BadShape(f"expected an even-dimensional square matrix, got {m.shape}")
    a, b, c, d = blocks(m)
    n = a.shape[0]
    eye = np.eye(n)
    rels = [
        a @ b.T - b @ a.T,
        a @ d.T - b @ c.T - eye,
        c @ d.T - d @ c.T,
        a.T @ c - c.T @ a,
        a.T @ d - c.T @ b - eye,
        b.T @ d - d.T @ b,
    ]
    return all(np.max(np.abs(r)) <= tol for r in rels)


@dataclass(frozen=True)
class SpAlgebraElement:
    """Element (a, b; c, -a^t) of sp(n, R); b and c symmetric."""

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "a", np.asarray(self.a, dtype=float))
        object.__setattr__(self, "b", check_symmetric(self.b))
        object.__setattr__(self, "c", check_symmetric(self.c))

    @property
    def n(self):
        return self.a.shape[0]

    def to_matrix(self):
        return from_blocks(self.a, self.b, self.c, -self.a.T)

    @classmethod
    def from_matrix(cls, z):
        a, b, c, d = blocks(z)
        if np.max(np.abs(d + a.T)) > 1e-10 * max(1.0, np.max(np.abs(z))):
            raise BadShape("lower-right block is not -a^t")
        return cls(a, symmetrize(b), symmetrize(c))


def sp_basis(n):
    """Generators H_ij (all i, j), F_ij and G_ij (i <= j) of sp(n, R).

    H_ij has a-block E_ij; 2 F_ij has b-block E_ij + E_ji; 2 G_ij has
    c-block E_ij + E_ji.  Count: 2 n^2 + n.
    """
    gens = []
    zero = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            a = np.zeros((n, n))
            a[i, j] = 1.0
            gens.append(SpAlgebraElement(a, zero, zero))
    for i in range(n):
        for j in range(i, n):
            b = np.zeros((n, n))
            b[i, j] += 0.5
            b[j, i] += 0.5
            gens.append(SpAlgebraElement(zero, b, zero))
    for i in range(n):
        for j in range(i, n):
            c = np.zeros((n, n))
            c[i, j] += 0.5
            c[j, i] += 0.5
            gens.append(SpAlgebraElement(zero, zero, c))
    return gens


# ---------------------------------------------------------------------------
# orthogonal-symplectic pairs <-> U(n)

UP_TOL = 1e-10


def unitary_pair_residual(x, y):
    """Max violation of the four pair relations X^tX+Y^tY = XX^t+YY^t = I,
    X^tY = Y^tX, YX^t = XY^t."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    n = x.shape[0]
    eye = np.eye(n)
    rels = [
        x.T @ x + y.T @ y - eye,
        x @ x.T + y @ y.T - eye,
        x.T @ y - y.T @ x,
        y @ x.T - x @ y.T,
    ]
    return max(np.max(np.abs(r)) for r in rels)


def check_unitary_pair(x, y, tol=UP_TOL):
    res = unitary_pair_residual(x, y)
    if res > tol:
        raise NotUnitaryPair(f"pair residual {res:.3e} exceeds {tol:.3e}")
    return np.asarray(x, dtype=float), np.asarray(y, dtype=float)


def pair_to_symplectic(x, y):
    """Embed the pair as the orthogonal symplectic matrix [[X, Y], [-Y, X]]."""
    return from_blocks(x, y, -y, x)


def unitary_iso(x, y, tol=UP_TOL):
    """Group isomorphism  [[X, Y], [-Y, X]] -> X + iY  onto U(n)."""
    x, y = check_unitary_pair(x, y, tol)
    return x + 1j * y


def unitary_iso_inverse(u, tol=UP_TOL):
    """Inverse isomorphism: unitary U -> pair (Re U, Im U)."""
    u = np.asarray(u, dtype=complex)
    res = np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0])))
    if res > tol:
        raise NotUnitaryPair(f"matrix is not unitary, residual {res:.3e}")
    return u.real.copy(), u.imag.copy()


# ---------------------------------------------------------------------------
# the Siegel upper half space and the Moebius action


def check_siegel(v, tol=1e-10):
    """Validate a Siegel point v = x + iy: v symmetric, Im v SPD."""
    v = np.asarray(v, dtype=complex)
    if sym_residual(v.real) > tol or sym_residual(v.imag) > tol:
        raise NotSymmetric("Siegel point must be a symmetric matrix")
    check_spd(v.imag)
    return v


def siegel_base_point(n):
    """The distinguished point i I_n."""
    return 1j * np.eye(n)


def mobius_act(m, v, tol=SP_TOL):
    """Fractional-linear action  v -> (a v + b)(c v + d)^{-1}  on the Siegel space.

    Equals ``(v c^t + d^t)^{-1} (v a^t + b^t)``; the action is a left
    action and is transitive.  ``c v + d`` is provably invertible for a
    symplectic M and a genuine Siegel point; a numerically singular
    denominator therefore raises SingularDenominator to flag an
    input-contract violation.
    """
    m = check_symplectic(m, tol)
    v = check_siegel(v)
    a, b, c, d = blocks(m)
    den = c @ v + d
    num = a @ v + b
    try:
        # right division: num @ inv(den) via a transposed solve
        v1 = np.linalg.solve(den.T, num.T).T
    except np.linalg.LinAlgError as exc:
        raise SingularDenominator(str(exc)) from exc
    if not np.all(np.isfinite(v1)):
        raise SingularDenominator("non-finite entries in the Moebius image")
    v1 = 0.5 * (v1 + v1.T)
    check_spd(v1.imag)
    return v1


def m_point(x, y):
    """The symplectic matrix [[sqrt(y), x sqrt(y)^-1], [0, sqrt(y)^-1]].

    Sends the base point iI to x + iy under :func:`mobius_act`.
    """
    x = check_symmetric(x)
    s = sqrtm_spd(y)
    si = np.linalg.inv(s)
    n = x.shape[0]
    return from_blocks(s, x @ si, np.zeros((n, n)), si)


# ---------------------------------------------------------------------------
# pre-Iwasawa decompositions


@dataclass(frozen=True)
class PreIwasawaFactors:
    """Factors (x, y, X, Y) of a pre-Iwasawa decomposition.

    ``variant`` is "plain" or "modified"; the two are related by
    ``y_modified = y_plain^2`` with identical x and (X, Y).
    """

    x: np.ndarray
    y: np.ndarray
    X: np.ndarray
    Y: np.ndarray
    variant: str

    def __post_init__(self):
        if self.variant not in ("plain", "modified"):
            raise ValueError(f"unknown variant {self.variant!r}")
        object.__setattr__(self, "x", check_symmetric(self.x))
        object.__setattr__(self, "y", np.asarray(check_spd(self.y), dtype=float))
        x_, y_ = check_unitary_pair(self.X, self.Y)
        object.__setattr__(self, "X", x_)
        object.__setattr__(self, "Y", y_)

    @property
    def n(self):
        return self.x.shape[0]


def pre_iwasawa(m, tol=SP_TOL):
    """Plain pre-Iwasawa factors of a symplectic matrix.

    ``y = (d d^t + c c^t)^{-1/2}``, ``X - iY = y (d + i c)``, and
    ``x = (d d^t + c c^t)^{-1} (d b^t + c a^t)``.  All factors are unique.
    """
    m = check_symplectic(m, tol)
    a, b, c, d = blocks(m)
    s = symmetrize(d @ d.T + c @ c.T)
    s_inv = check_spd(np.linalg.inv(s))
    y = sqrtm_spd(s_inv)
    x = s_inv @ (d @ b.T + c @ a.T)
    # symmetry of x is a theorem for symplectic input; assert, then clean up
    x = check_symmetric(x, rtol=1e-8)
    return PreIwasawaFactors(symmetrize(x), y, y @ d, -(y @ c), "plain")


def modified_pre_iwasawa(m, tol=SP_TOL):
    """Modified pre-Iwasawa factors: ``y = (d d^t + c c^t)^{-1}``,
    ``X - iY = y^{1/2} (d + i c)``, ``x = y (d b^t + c a^t)``."""
    m = check_symplectic(m, tol)
    a, b, c, d = blocks(m)
    s = symmetrize(d @ d.T + c @ c.T)
    y = check_spd(np.linalg.inv(s))
    root = sqrtm_spd(y)
    x = y @ (d @ b.T + c @ a.T)
    x = check_symmetric(x, rtol=1e-8)
    return PreIwasawaFactors(symmetrize(x), y, root @ d, -(root @ c), "modified")


def pre_iwasawa_compose(factors):
    """Recompose a symplectic matrix from pre-Iwasawa factors (either variant).

    Plain:    a = y X - x y^{-1} Y,  b = y Y + x y^{-1} X,
              c = -y^{-1} Y,         d = y^{-1} X.
    Modified: the same formulas with y replaced by y^{1/2}.
    """
    f = factors
    r = f.y if f.variant == "plain" else sqrtm_spd(f.y)
    ri = np.linalg.inv(r)
    a = r @ f.X - f.x @ ri @ f.Y
    b = r @ f.Y + f.x @ ri @ f.X
    c = -(ri @ f.Y)
    d = ri @ f.X
    return from_blocks(a, b, c, d)


def act_modified_chart(m, chart, tol=SP_TOL):
    """Action of M on a modified-chart point (x', y', X', Y').

    Returns (x1, y1, X1, Y1) where x1 + i y1 is the Moebius image of
    x' + i y' (the compatibility statement tested in the suite) and
    (X1, Y1) is the transported orthogonal pair:

        y1 = A^{-1},  x1 = A^{-1} N,
        A  = c(y' + x' y'^-1 x')c^t + d y'^-1 d^t + c x' y'^-1 d^t + d y'^-1 x' c^t,
        N  = c(y' + x' y'^-1 x')a^t + c x' y'^-1 b^t + d y'^-1 x' a^t + d y'^-1 b^t,
        X1 - i Y1 = y1^{1/2} {(c x' + d) y'^{-1/2} X' + c y'^{1/2} Y'
                    + i [c y'^{1/2} X' - (c x' + d) y'^{-1/2} Y']}.
    """
    m = check_symplectic(m, tol)
    a, b, c, d = blocks(m)
    xp, yp, xu, yu = chart
    xp = check_symmetric(xp)
    yp = np.asarray(check_spd(yp), dtype=float)
    xu, yu = check_unitary_pair(xu, yu)
    ypi = np.linalg.inv(yp)
    core = yp + xp @ ypi @ xp
    big_a = c @ core @ c.T + d @ ypi @ d.T + c @ xp @ ypi @ d.T + d @ ypi @ xp @ c.T
    big_n = c @ core @ a.T + c @ xp @ ypi @ b.T + d @ ypi @ xp @ a.T + d @ ypi @ b.T
    y1 = check_spd(np.linalg.inv(symmetrize(big_a)))
    x1 = symmetrize(y1 @ big_n)
    s1 = sqrtm_spd(y1)
    sp = sqrtm_spd(yp)
    spi = np.linalg.inv(sp)
    cxd = c @ xp + d
    x_new = s1 @ (cxd @ spi @ xu + c @ sp @ yu)
    y_new = s1 @ (cxd @ spi @ yu - c @ sp @ xu)
    return x1, y1, x_new, y_new
