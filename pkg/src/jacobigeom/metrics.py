"""Invariant metrics on the Jacobi group and its homogeneous spaces.

The 4-parameter group metric is the sum of squares of the six weighted
invariant one-form families

    l1 = sqrt(alpha) (F + G),  l2 = sqrt(alpha) H,  l3 = sqrt(beta) (F - G),
    l4 = sqrt(gamma) P,        l5 = sqrt(gamma) Q,  l6 = sqrt(delta) R,

where matrix families are squared in the Frobenius sense tr(A A^t) (for
the possibly non-symmetric H this is a documented choice).  Setting
parameters to zero specializes the metric to the Siegel space (beta =
gamma = delta = 0), the symplectic group (gamma = delta = 0), the
Siegel-Jacobi space (beta = delta = 0) and its extension (beta = 0).

On the Siegel-Jacobi space itself the two-parameter metric has the three
closed coordinate expressions implemented in :func:`metric_xjn`; adding
``delta (dkappa - p dq^t + q dp^t)^2`` gives the three-parameter metric
on the extended space (:func:`metric_extended`).

Kaehler two-forms on the ball and upper-half-space models, the partial
Cayley transform and the normalized/un-normalized coordinate change on
the ball complete the picture; :func:`invariance_report` is the seeded
verification engine used by the acceptance suite.
"""

from dataclasses import dataclass

import numpy as np

from .exceptions import ContractionViolation
from .jacobi import act_extended, act_pq, act_xjn, chart_convert, gj_compose, sn_chart, sn_chart_inverse
from .linalg import check_spd, sym_residual
from .numdiff import fd_push, fd_push_sn
from .forms import oneforms_sn
from .symplectic import blocks


def _row(v):
    return np.asarray(v).ravel()


@dataclass(frozen=True)
class MetricParams:
    """Weights of the group metric; alpha strictly positive, others >= 0
    (zeros select the specializations)."""

    alpha: float = 1.0
    beta: float = 1.0
    gamma: float = 1.0
    delta: float = 1.0

    def __post_init__(self):
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")
        if min(self.beta, self.gamma, self.delta) < 0:
            raise ValueError("beta, gamma, delta must be nonnegative")


@dataclass(frozen=True)
class KahlerParams:
    """k indexes the holomorphic discrete series weight, nu the Heisenberg
    representation; both positive."""

    k: float
    nu: float

    def __post_init__(self):
        if self.k <= 0 or self.nu <= 0:
            raise ValueError("k and nu must be positive")


def _fro2(a):
    return float(np.sum(np.asarray(a) * np.asarray(a)))


def metric_group_quad(params, chart, tangent):
    """Quadratic form of the 4-parameter group metric on one tangent."""
    lf = oneforms_sn(chart, tangent)
    val = params.alpha * (_fro2(lf.F + lf.G) + _fro2(lf.H))
    val += params.beta * _fro2(lf.F - lf.G)
    val += params.gamma * (float(lf.P @ lf.P) + float(lf.Q @ lf.Q))
    val += params.delta * lf.R * lf.R
    return val


def metric_group(params, chart, t1, t2):
    """Polarized group metric  g(t1, t2) = (Q(t1+t2) - Q(t1-t2)) / 4."""
    plus = tuple(np.asarray(a) + np.asarray(b) if np.ndim(a) else a + b
                 for a, b in zip(t1, t2))
    minus = tuple(np.asarray(a) - np.asarray(b) if np.ndim(a) else a - b
                  for a, b in zip(t1, t2))
    return 0.25 * (metric_group_quad(params, chart, plus)
                   - metric_group_quad(params, chart, minus))


XJN_CHARTS = ("pq", "chipsi", "xirho")


def metric_xjn(alpha, gamma, chart, point, t1, t2):
    """Two-parameter invariant metric on the Siegel-Jacobi space.

    Coordinate expressions (bilinear forms; the quadratic versions are
    the stated displays):

    pq:     alpha tr[(y^-1 dx)^2 + (y^-1 dy)^2]
            + gamma [dp (x y^-1 x + y) dp^t + dq y^-1 dq^t + 2 dp x y^-1 dq^t]
    chipsi: the same with dpsi = dp^t, dchi = dq^t;
    xirho:  alpha part + gamma [r y^-1 r^t + s y^-1 s^t] with
            r = dxi - rho y^-1 dx und s = drho - rho y^-1 dy.

    All three agree under the chart conversions.
    """
    if chart not in XJN_CHARTS:
        raise ValueError(f"chart must be one of {XJN_CHARTS}")
    x, y = np.asarray(point[0], dtype=float), np.asarray(point[1], dtype=float)
    check_spd(y)
    yi = np.linalg.inv(y)
    dx1, dy1 = np.asarray(t1[0], dtype=float), np.asarray(t1[1], dtype=float)
    dx2, dy2 = np.asarray(t2[0], dtype=float), np.asarray(t2[1], dtype=float)
    val = alpha * float(np.trace(yi @ dx1 @ yi @ dx2) + np.trace(yi @ dy1 @ yi @ dy2))

    if chart in ("pq", "chipsi"):
        # chipsi stores the transposed rows; the bilinear form is identical
        dp1, dq1 = (_row(t1[2]), _row(t1[3])) if chart == "pq" else (_row(t1[3]), _row(t1[2]))
        dp2, dq2 = (_row(t2[2]), _row(t2[3])) if chart == "pq" else (_row(t2[3]), _row(t2[2]))
        core = x @ yi @ x + y
        cross = x @ yi
        val += gamma * (float(dp1 @ core @ dp2)
                        + float(dq1 @ yi @ dq2)
                        + float(dp1 @ cross @ dq2) + float(dp2 @ cross @ dq1))
        return val

    rho = _row(point[3])
    r1 = _row(t1[2]) - rho @ yi @ dx1
    s1 = _row(t1[3]) - rho @ yi @ dy1
    r2 = _row(t2[2]) - rho @ yi @ dx2
    s2 = _row(t2[3]) - rho @ yi @ dy2
    val += gamma * (float(r1 @ yi @ r2) + float(s1 @ yi @ s2))
    return val


def lambda_r(point_pq_kappa, tangent):
    """The invariant one-form  dkappa - p dq^t + q dp^t  on the extended space."""
    p, q = _row(point_pq_kappa[2]), _row(point_pq_kappa[3])
    dp, dq, dk = _row(tangent[2]), _row(tangent[3]), float(tangent[4])
    return dk - float(p @ dq) + float(q @ dp)


def metric_extended(alpha, gamma, delta, point, t1, t2):
    """Three-parameter metric on the extended space: the pq metric plus
    delta * lambda_R (x) lambda_R.  Point and tangents carry kappa last."""
    base = metric_xjn(alpha, gamma, "pq", point[:4], t1[:4], t2[:4])
    return base + delta * lambda_r(point, t1) * lambda_r(point, t2)


# ---------------------------------------------------------------------------
# ball model, partial Cayley transform, FC coordinate change


def check_ball_point(w, z=None, tol=1e-10):
    w = np.asarray(w, dtype=complex)
    if sym_residual(w) > tol:
        raise ContractionViolation("W must be symmetric")
    contraction = np.eye(w.shape[0]) - w @ w.conj()
    wmin = np.linalg.eigvalsh(0.5 * (contraction + contraction.conj().T))[0]
    if wmin <= tol:
        raise ContractionViolation(f"I - W conj(W) not positive, min eig {wmin:.3e}")
    return w


def fc_transform(w, z):
    """Coordinate change z -> eta on the ball: eta = (I - W Wbar)^{-1} (z^t + W zbar^t)."""
    w = check_ball_point(w)
    z = np.asarray(z, dtype=complex).ravel()
    m = np.linalg.inv(np.eye(w.shape[0]) - w @ w.conj())
    return m @ (z + w @ z.conj())


def fc_inverse(w, eta):
    """Inverse change eta -> z:  z^t = eta - W etabar."""
    w = check_ball_point(w)
    eta = np.asarray(eta, dtype=complex).ravel()
    return eta - w @ eta.conj()


def cayley(v, u):
    """Partial Cayley transform to the ball:  W = (v - iI)(v + iI)^{-1},
    z^t = 2i (v + iI)^{-1} u^t.  Sends iI to the center."""
    v = np.asarray(v, dtype=complex)
    u = np.asarray(u, dtype=complex).ravel()
    check_spd(v.imag)
    n = v.shape[0]
    eye = np.eye(n)
    w = np.linalg.solve((v + 1j * eye).T, (v - 1j * eye).T).T
    w = 0.5 * (w + w.T)
    z = 2j * np.linalg.solve(v + 1j * eye, u)
    return check_ball_point(w), z


def cayley_inverse(w, z):
    """Inverse Cayley:  v = i (I - W)^{-1} (I + W),  u^t = (I - W)^{-1} z^t."""
    w = check_ball_point(w)
    z = np.asarray(z, dtype=complex).ravel()
    n = w.shape[0]
    eye = np.eye(n)
    v = 1j * np.linalg.solve(eye - w, eye + w)
    v = 0.5 * (v + v.T)
    u = np.linalg.solve(eye - w, z)
    check_spd(v.imag)
    return v, u


def g_form(v, u, tangent):
    """Row form  G^t = du - (u - ubar)(v - vbar)^{-1} dv  at a Siegel-Jacobi point.

    In pq coordinates this equals dp v + dq.
    """
    dv, du = tangent
    v = np.asarray(v, dtype=complex)
    u = np.asarray(u, dtype=complex).ravel()
    dv = np.asarray(dv, dtype=complex)
    du = np.asarray(du, dtype=complex).ravel()
    diff = v - v.conj()
    coeff = np.linalg.solve(diff.T, (u - u.conj()))
    return du - coeff @ dv


def kahler_ball(kparams, w, z, t1, t2):
    """Kaehler two-form of the ball model evaluated on two tangents.

    -i omega = (k/2) tr(B wedge Bbar) + nu tr(A^t Mbar wedge Abar) with
    M = (I - W Wbar)^{-1}, B = M dW, A = dz^t + dW etabar and eta the
    FC image of z.  Antisymmetric in (t1, t2).
    """
    w = check_ball_point(w)
    z = np.asarray(z, dtype=complex).ravel()
    m = np.linalg.inv(np.eye(w.shape[0]) - w @ w.conj())
    eta = m @ (z + w @ z.conj())

    def parts(t):
        dw = np.asarray(t[0], dtype=complex)
        dz = np.asarray(t[1], dtype=complex).ravel()
        return m @ dw, dz + dw @ eta.conj()

    b1, a1 = parts(t1)
    b2, a2 = parts(t2)
    mbar = m.conj()
    val = 0.5 * kparams.k * (np.trace(b1 @ b2.conj()) - np.trace(b2 @ b1.conj()))
    val += kparams.nu * (a1 @ mbar @ a2.conj() - a2 @ mbar @ a1.conj())
    return 1j * val


def kahler_xjn(kparams, v, u, t1, t2):
    """Kaehler two-form of the upper-half-space model.

    -i omega = (k/2) tr(H wedge Hbar) + (2 nu / i) tr(G^t D wedge Gbar)
    with D = (vbar - v)^{-1} and H = D dv.
    """
    v = np.asarray(v, dtype=complex)
    dmat = np.linalg.inv(v.conj() - v)

    def parts(t):
        dv = np.asarray(t[0], dtype=complex)
        return dmat @ dv, g_form(v, u, t)

    h1, g1 = parts(t1)
    h2, g2 = parts(t2)
    val = 1j * 0.5 * kparams.k * (np.trace(h1 @ h2.conj()) - np.trace(h2 @ h1.conj()))
    val += 2.0 * kparams.nu * (g1 @ dmat @ g2.conj() - g2 @ dmat @ g1.conj())
    return val


# ---------------------------------------------------------------------------
# complexified symplectic representation acting on the ball


def sp_to_ball_rep(m):
    """Map a real symplectic matrix to the (P, Q) pair of its ball-model form.

    Conjugation by the Cayley map W = (v - iI)(v + iI)^{-1} sends
    [[a, b], [c, d]] to [[P, Q], [Qbar, Pbar]] with

        P = ((a + d) + i(b - c))/2,  Q = ((a - d) - i(b + c))/2;

    the pair satisfies P P^dag - Q Q^dag = I and P Q^t = Q P^t.
    """
    a, b, c, d = blocks(m)
    p = 0.5 * ((a + d) + 1j * (b - c))
    q = 0.5 * ((a - d) - 1j * (b + c))
    return p, q


def ball_act(element, point):
    """Action of ((P, Q), alpha) on a ball point (W, z):

    W1 = (W Q^dag + P^dag)^{-1} (Q^t + W P^t),
    z1^t = (W Q^dag + P^dag)^{-1} (z^t + alpha^t - W alphabar^t).
    """
    (p, q), alpha = element
    w, z = point
    w = np.asarray(w, dtype=complex)
    z = np.asarray(z, dtype=complex).ravel()
    alpha = np.asarray(alpha, dtype=complex).ravel()
    den = w @ q.conj().T + p.conj().T
    w1 = np.linalg.solve(den, q.T + w @ p.T)
    w1 = 0.5 * (w1 + w1.T)
    z1 = np.linalg.solve(den, z + alpha - w @ alpha.conj())
    return w1, z1


# ---------------------------------------------------------------------------
# seeded invariance verification

INVARIANCE_OBJECTS = (
    "metric_group",
    "metric_xjn_pq",
    "metric_xjn_chipsi",
    "metric_xjn_xirho",
    "metric_extended",
    "metric_xjn_broken",
    "kahler_ball",
    "kahler_xjn",
    "lambda_R",
)


@dataclass(frozen=True)
class InvarianceReport:
    object: str
    n: int
    samples: int
    seed: int
    fd_step: float
    tol: float
    max_abs: float
    max_rel: float
    mean_rel: float
    passed: bool

    def as_dict(self):
        return {
            "object": self.object,
            "n": self.n,
            "samples": self.samples,
            "seed": self.seed,
            "fd_step": self.fd_step,
            "tol": self.tol,
            "max_abs": self.max_abs,
            "max_rel": self.max_rel,
            "mean_rel": self.mean_rel,
            "pass": self.passed,
        }


def _metric_xjn_broken(alpha, gamma, point, t1, t2):
    # negative control: a beta-style contamination that is not invariant
    return (metric_xjn(alpha, gamma, "pq", point, t1, t2)
            + float(_row(t1[2]) @ _row(t2[2])))


def invariance_report(obj, n, samples=1000, seed=0, fd_step=1e-6, tol=1e-6):
    """Verify the invariance of a metric/two-form object by random sampling.

    Per sample: draw a group element, a point and two tangents, push the
    tangents through the action by central differences (exactly, for the
    affine lambda_R case), and compare the pulled-back value with the
    original.  Errors are reported absolutely and relative to the scale
    of the object on the sampled tangents.  Deterministic given the seed.
    """
    from . import sampling as smp

    if obj not in INVARIANCE_OBJECTS:
        raise ValueError(f"object must be one of {INVARIANCE_OBJECTS}")
    rng = np.random.default_rng(seed)
    abs_errs = np.zeros(samples)
    rel_errs = np.zeros(samples)

    for i in range(samples):
        if obj == "metric_group":
            g = smp.rand_jacobi(rng, n)
            chart = smp.rand_sn_chart(rng, n)
            t1 = smp.rand_sn_tangent(rng, chart)
            t2 = smp.rand_sn_tangent(rng, chart)
            params = MetricParams(1.0, 1.0, 1.0, 1.0)

            def act(c):
                return sn_chart(gj_compose(g, sn_chart_inverse(c)))

            image = act(chart)
            s1 = fd_push_sn(act, chart, t1, fd_step)
            s2 = fd_push_sn(act, chart, t2, fd_step)
            orig = metric_group(params, chart, t1, t2)
            pulled = metric_group(params, image, s1, s2)
            scale = (abs(metric_group(params, chart, t1, t1))
                     + abs(metric_group(params, chart, t2, t2)) + abs(orig))

        elif obj.startswith("metric_xjn") or obj == "metric_extended":
            g = smp.rand_jacobi(rng, n)
            base = smp.rand_pq_point(rng, n)
            if obj == "metric_extended":
                point = base + (float(rng.uniform(-1, 1)),)
                t1 = smp.rand_pq_tangent(rng, n) + (float(rng.uniform(-1, 1)),)
                t2 = smp.rand_pq_tangent(rng, n) + (float(rng.uniform(-1, 1)),)

                def act(pt):
                    return act_extended(g, pt)

                def form(pt, u1, u2):
                    return metric_extended(1.0, 1.0, 1.0, pt, u1, u2)
            else:
                chart = {"metric_xjn_pq": "pq", "metric_xjn_chipsi": "chipsi",
                         "metric_xjn_xirho": "xirho", "metric_xjn_broken": "pq"}[obj]
                point = chart_convert(base, "pq", chart)
                t1 = smp.rand_pq_tangent(rng, n)
                t2 = smp.rand_pq_tangent(rng, n)

                def act(pt):
                    moved = act_pq(g, chart_convert(pt, chart, "pq"))
                    return chart_convert(moved, "pq", chart)

                if obj == "metric_xjn_broken":
                    def form(pt, u1, u2):
                        return _metric_xjn_broken(1.0, 1.0, pt, u1, u2)
                else:
                    def form(pt, u1, u2, _c=chart):
                        return metric_xjn(1.0, 1.0, _c, pt, u1, u2)

            image = act(point)
            s1 = fd_push(act, point, t1, fd_step)
            s2 = fd_push(act, point, t2, fd_step)
            orig = form(point, t1, t2)
            pulled = form(image, s1, s2)
            scale = abs(form(point, t1, t1)) + abs(form(point, t2, t2)) + abs(orig)

        elif obj == "kahler_ball":
            m = smp.rand_symplectic(rng, n)
            pq_pair = sp_to_ball_rep(m)
            alpha = (smp.rand_matrix(rng, 1, n) + 1j * smp.rand_matrix(rng, 1, n)).ravel()
            w, z = smp.rand_ball_point(rng, n)
            t1 = smp.rand_ball_tangent(rng, n)
            t2 = smp.rand_ball_tangent(rng, n)
            kp = KahlerParams(2.0, 1.0)

            def act(pt):
                return ball_act((pq_pair, alpha), pt)

            image = act((w, z))
            s1 = fd_push(act, (w, z), t1, fd_step)
            s2 = fd_push(act, (w, z), t2, fd_step)
            orig = kahler_ball(kp, w, z, t1, t2)
            pulled = kahler_ball(kp, *image, s1, s2)

            def jmul(t):
                return tuple(1j * np.asarray(c) for c in t)

            scale = (abs(kahler_ball(kp, w, z, t1, jmul(t1)))
                     + abs(kahler_ball(kp, w, z, t2, jmul(t2))) + abs(orig))

        elif obj == "kahler_xjn":
            g = smp.rand_jacobi(rng, n)
            v, u = smp.rand_vu_point(rng, n)
            t1 = smp.rand_vu_tangent(rng, n)
            t2 = smp.rand_vu_tangent(rng, n)
            kp = KahlerParams(2.0, 1.0)

            def act(pt):
                return act_xjn(g, pt)

            image = act((v, u))
            s1 = fd_push(act, (v, u), t1, fd_step)
            s2 = fd_push(act, (v, u), t2, fd_step)
            orig = kahler_xjn(kp, v, u, t1, t2)
            pulled = kahler_xjn(kp, *image, s1, s2)

            def jmul(t):
                return tuple(1j * np.asarray(c) for c in t)

            scale = (abs(kahler_xjn(kp, v, u, t1, jmul(t1)))
                     + abs(kahler_xjn(kp, v, u, t2, jmul(t2))) + abs(orig))

        else:  # lambda_R with exact affine pushforward
            g = smp.rand_jacobi(rng, n)
            point = smp.rand_pq_point(rng, n) + (float(rng.uniform(-1, 1)),)
            tan = smp.rand_pq_tangent(rng, n) + (float(rng.uniform(-1, 1)),)
            a, b, c, d = blocks(g.M)
            dp, dq, dk = tan[2], tan[3], tan[4]
            pushed = (tan[0], tan[1],
                      dp @ d.T - dq @ c.T,
                      -dp @ b.T + dq @ a.T,
                      dk + float(g.lam @ dq) - float(g.mu @ dp))
            image = act_extended(g, point)
            orig = lambda_r(point, tan)
            pulled = lambda_r(image, pushed)
            scale = max(1.0, abs(orig))

        err = abs(pulled - orig)
        abs_errs[i] = err
        rel_errs[i] = err / max(scale, 1e-12)

    max_rel = float(np.max(rel_errs))
    return InvarianceReport(
        object=obj, n=n, samples=samples, seed=seed, fd_step=fd_step, tol=tol,
        max_abs=float(np.max(abs_errs)), max_rel=max_rel,
        mean_rel=float(np.mean(rel_errs)), passed=bool(max_rel <= tol),
    )
