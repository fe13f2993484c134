"""Structured linear-algebra primitives.

Symmetric/SPD validation, vec/vech calculus with duplication and
elimination matrices, Kronecker product and sum, dense Sylvester solves,
and the principal square root of an SPD matrix together with its
directional derivative (Frechet derivative along a symmetric direction).

Conventions fixed here and relied on everywhere else:

* ``vec`` stacks columns (column-major).
* ``vech`` stacks the lower triangle column by column.
* ``kron_sum(A, B) = A (x) I_m + I_n (x) B``, so the operator of the
  Sylvester equation ``A X + X B = C`` is ``kron_sum(B^t, A)`` acting on
  ``vec(X)``.
"""

import numpy as np

from .exceptions import BadShape, NotSpd, NotSymmetric, SingularSylvester

SYM_RTOL = 1e-12    # relative max-norm tolerance for symmetry checks
SPD_EIG_RTOL = 1e-10  # smallest/largest eigenvalue ratio for the SPD test


def sym_residual(a):
    """Max-norm asymmetry of ``a`` relative to max(1, ||a||_max)."""
    a = np.asarray(a)
    return np.max(np.abs(a - a.T)) / max(1.0, np.max(np.abs(a)))


def check_symmetric(a, rtol=SYM_RTOL):
    """Return ``a`` if symmetric within ``rtol``, else raise NotSymmetric."""
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise BadShape(f"expected a square matrix, got shape {a.shape}")
    res = sym_residual(a)
    if res > rtol:
        raise NotSymmetric(f"asymmetry {res:.3e} exceeds tolerance {rtol:.3e}")
    return a


def symmetrize(a):
    return 0.5 * (np.asarray(a) + np.asarray(a).T)


def check_spd(a, rtol=SYM_RTOL, eig_rtol=SPD_EIG_RTOL):
    """Return ``a`` if symmetric positive definite, else raise NotSpd.

    Positive definiteness is a strict inequality on paper; numerically we
    require the smallest eigenvalue to exceed ``eig_rtol`` times the
    largest.
    """
    try:
        a = check_symmetric(a, rtol)
    except NotSymmetric as exc:
        raise NotSpd(str(exc)) from exc
    w = np.linalg.eigvalsh(symmetrize(a))
    if w[0] <= eig_rtol * max(w[-1], 0.0):
        raise NotSpd(f"eigenvalue range [{w[0]:.3e}, {w[-1]:.3e}] is not SPD")
    return a


def kron(a, b):
    """Kronecker product; thin wrapper kept for a uniform namespace."""
    return np.kron(np.asarray(a), np.asarray(b))


def kron_sum(a, b):
    """Kronecker sum  A (x) I_m + I_n (x) B  of square matrices A (n x n), B (m x m).

    Oriented so that ``kron_sum(B^t, A) vec(X) = vec(A X + X B)``.
    Eigenvalues are all sums lambda_i(A) + mu_j(B).
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise BadShape(f"first operand must be square, got {a.shape}")
    if b.ndim != 2 or b.shape[0] != b.shape[1]:
        raise BadShape(f"second operand must be square, got {b.shape}")
    n, m = a.shape[0], b.shape[0]
    return np.kron(a, np.eye(m)) + np.kron(np.eye(n), b)


def vec(a):
    """Column-stacking vectorization (column-major)."""
    return np.asarray(a).flatten(order="F")


def unvec(v, n, m=None):
    """Inverse of :func:`vec` for an ``n x m`` matrix."""
    if m is None:
        m = n
    return np.asarray(v).reshape((n, m), order="F")


def _vech_indices(n):
    # lower triangle, column by column: (0,0),(1,0),...,(n-1,0),(1,1),...
    return [(i, j) for j in range(n) for i in range(j, n)]


def vech(a, rtol=SYM_RTOL):
    """Half-vectorization of a symmetric matrix (lower triangle, column-major)."""
    a = check_symmetric(a, rtol)
    n = a.shape[0]
    return np.array([a[i, j] for i, j in _vech_indices(n)])


def unvech(v, n):
    """Symmetric matrix from its half-vectorization."""
    a = np.zeros((n, n))
    for k, (i, j) in enumerate(_vech_indices(n)):
        a[i, j] = v[k]
        a[j, i] = v[k]
    return a


def duplication_matrix(n):
    """D_n with  vec(A) = D_n vech(A)  for symmetric A.  Shape n^2 x n(n+1)/2."""
    idx = _vech_indices(n)
    d = np.zeros((n * n, len(idx)))
    for k, (i, j) in enumerate(idx):
        d[j * n + i, k] = 1.0
        d[i * n + j, k] = 1.0  # same cell when i == j
    return d


def elimination_matrix(n):
    """L_n with  vech(A) = L_n vec(A).  Satisfies L_n D_n = I exactly."""
    idx = _vech_indices(n)
    ell = np.zeros((len(idx), n * n))
    for k, (i, j) in enumerate(idx):
        ell[k, j * n + i] = 1.0
    return ell


def sylvester_solve(a, b, c, residual_rtol=1e-8):
    """Solve  A X + X B = C  by dense Kronecker linearization.

    The linear system is ``(I_m (x) A + B^t (x) I_n) vec(X) = vec(C)``,
    solvable iff the spectra of A and -B are disjoint.  Matrix sizes here
    are small (n, m of order 10), so the dense n*m x n*m solve is exact
    enough and no Schur-based algorithm is needed.

    Raises
    ------
    SingularSylvester
        If the Kronecker-sum operator is singular (exactly or numerically,
        judged by the residual of the candidate solution).
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    c = np.asarray(c, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise BadShape(f"A must be square, got {a.shape}")
    if b.ndim != 2 or b.shape[0] != b.shape[1]:
        raise BadShape(f"B must be square, got {b.shape}")
    n, m = a.shape[0], b.shape[0]
    if c.shape != (n, m):
        raise BadShape(f"C must be {n}x{m}, got {c.shape}")
    op = kron_sum(b.T, a)
    try:
        x = np.linalg.solve(op, vec(c))
    except np.linalg.LinAlgError as exc:
        raise SingularSylvester(f"Kronecker-sum operator is singular: {exc}") from exc
    x = unvec(x, n, m)
    res = np.linalg.norm(a @ x + x @ b - c)
    if res > residual_rtol * max(1.0, np.linalg.norm(c)):
        raise SingularSylvester(
            f"residual {res:.3e} indicates a (near-)singular system"
        )
    return x


def sqrtm_spd(a, rtol=SYM_RTOL, eig_rtol=SPD_EIG_RTOL):
    """Principal square root of an SPD matrix via symmetric eigendecomposition.

    Deterministic and accurate at the target scale; Newton iterations are
    not used.  The result S is SPD and satisfies ``S S = A`` to roundoff.
    """
    a = check_spd(a, rtol, eig_rtol)
    w, u = np.linalg.eigh(symmetrize(a))
    return symmetrize(u @ np.diag(np.sqrt(w)) @ u.T)


def dsqrtm(a, da, rtol=SYM_RTOL):
    """Directional derivative of the SPD square root.

    Solves ``X A^{1/2} + A^{1/2} X = dA`` for X, i.e. applies the inverse
    Kronecker sum ``(A^{1/2} (+) A^{1/2})^{-1}`` to ``vec(dA)``.  X is
    symmetric whenever ``da`` is.
    """
    s = sqrtm_spd(a)  # raises NotSpd on bad input
    da = check_symmetric(da, rtol)
    x = sylvester_solve(s, s, da)
    return symmetrize(x)


def odot(a, b):
    """Symmetrized outer product  (a . b)_ij = a_i b_j + a_j b_i - a_i b_j delta_ij."""
    a = np.asarray(a, dtype=float).ravel()
    b = np.asarray(b, dtype=float).ravel()
    if a.shape != b.shape:
        raise BadShape(f"vector lengths differ: {a.shape} vs {b.shape}")
    out = np.outer(a, b) + np.outer(b, a)
    np.fill_diagonal(out, a * b)
    return out


def sym_mask(n):
    """Coefficient matrix  e_ij = (1 + delta_ij)/2.

    Weights relating naive entrywise derivatives of a symmetric matrix to
    derivatives in the independent lower-triangle variables; the inverse
    weights are ``2 - delta_ij``.
    """
    return 0.5 * (np.ones((n, n)) + np.eye(n))


def pairwise_delta_derivative(i, j, p, q):
    """d w_ij / d w_pq for a symmetric matrix w with independent lower triangle."""
    return float((i == p) * (j == q) + (i == q) * (j == p) - (i == j) * (p == q) * (i == p))
