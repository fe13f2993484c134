import json
import subprocess
import sys

import numpy as np

from jacobigeom.sampling import rand_jacobi, rand_symplectic


def run_cli(args, payload=None):
    data = json.dumps(payload) if payload is not None else None
    return subprocess.run(
        [sys.executable, "-m", "jacobigeom.cli", *args],
        input=data, capture_output=True, text=True,
    )


def j2():
    return np.block([[np.zeros((2, 2)), np.eye(2)], [-np.eye(2), np.zeros((2, 2))]])


def test_check_symplectic_true():
    res = run_cli(["check"], {"matrix": j2().tolist()})
    assert res.returncode == 0
    out = json.loads(res.stdout)
    assert out["symplectic"] is True and out["block_relations"] is True
    assert out["residual"] == 0.0


def test_check_perturbed_false():
    m = j2()
    m[0, 1] = 0.25  # asymmetric a-block breaks a^t c = c^t a
    res = run_cli(["check"], {"matrix": m.tolist()})
    assert res.returncode == 1
    assert json.loads(res.stdout)["symplectic"] is False


def test_check_bad_shape_is_usage_error():
    res = run_cli(["check"], {"matrix": np.eye(3).tolist()})
    assert res.returncode == 2
    assert "BadShape" in res.stderr


def test_check_malformed_json():
    res = subprocess.run([sys.executable, "-m", "jacobigeom.cli", "check"],
                         input="{not json", capture_output=True, text=True)
    assert res.returncode == 2


def test_decompose_identity_and_roundtrip(rng):
    res = run_cli(["decompose", "--variant", "plain"], {"matrix": np.eye(4).tolist()})
    out = json.loads(res.stdout)
    assert np.allclose(out["x"], 0) and np.allclose(out["y"], np.eye(2))
    assert np.allclose(out["X"], np.eye(2)) and out["recomposition_residual"] < 1e-12
    # J has documented factors x = 0, y = I, X = 0, Y = I
    res = run_cli(["decompose", "--variant", "plain"], {"matrix": j2().tolist()})
    out = json.loads(res.stdout)
    assert np.allclose(out["X"], 0) and np.allclose(out["Y"], np.eye(2))
    for variant in ("plain", "modified"):
        m = rand_symplectic(rng, 2)
        res = run_cli(["decompose", "--variant", variant], {"matrix": m.tolist()})
        assert res.returncode == 0
        assert json.loads(res.stdout)["recomposition_residual"] < 1e-10


def test_decompose_rejects_non_symplectic():
    res = run_cli(["decompose"], {"matrix": np.diag([2.0, 1.0, 1.0, 1.0]).tolist()})
    assert res.returncode == 1


def encode_complex(arr):
    arr = np.asarray(arr, dtype=complex)
    return np.stack([arr.real, arr.imag], axis=-1).tolist()


def test_act_identity_and_heisenberg(rng):
    n = 2
    ident = {"m": np.eye(4).tolist(), "lam": [0.0, 0.0], "mu": [0.0, 0.0], "kappa": 0.0}
    v = (0.2 * np.ones((n, n)) + 1j * np.eye(n))
    u = np.array([0.4 + 0.1j, -0.3 + 0.6j])
    point = {"v": encode_complex(v), "u": encode_complex(u)}
    res = run_cli(["act", "--space", "xjn"], {"element": ident, "point": point})
    assert res.returncode == 0
    out = json.loads(res.stdout)
    got_v = np.asarray(out["v"])[..., 0] + 1j * np.asarray(out["v"])[..., 1]
    assert np.max(np.abs(got_v - v)) < 1e-12
    # pure Heisenberg translation: u -> u + lam v + mu
    lam, mu = np.array([0.5, -1.0]), np.array([0.25, 0.75])
    elem = {"m": np.eye(4).tolist(), "lam": lam.tolist(), "mu": mu.tolist(), "kappa": 0.3}
    res = run_cli(["act", "--space", "xjn"], {"element": elem, "point": point})
    out = json.loads(res.stdout)
    got_u = np.asarray(out["u"])[..., 0] + 1j * np.asarray(out["u"])[..., 1]
    assert np.max(np.abs(got_u - (u + lam @ v + mu))) < 1e-12


def test_act_chaining_matches_product(rng):
    n = 2
    g1, g2 = rand_jacobi(rng, n), rand_jacobi(rng, n)
    from jacobigeom import gj_compose

    def elem(g):
        return {"m": g.M.tolist(), "lam": g.lam.tolist(), "mu": g.mu.tolist(),
                "kappa": g.kappa}

    point = {"x": np.zeros((n, n)).tolist(), "y": np.eye(n).tolist(),
             "p": [0.1, 0.2], "q": [0.3, -0.1], "kappa": 0.05}
    step1 = json.loads(run_cli(["act", "--space", "extended"],
                               {"element": elem(g2), "point": point}).stdout)
    step2 = json.loads(run_cli(["act", "--space", "extended"],
                               {"element": elem(g1), "point": step1}).stdout)
    direct = json.loads(run_cli(["act", "--space", "extended"],
                                {"element": elem(gj_compose(g1, g2)), "point": point}).stdout)
    for key in ("x", "y", "p", "q", "kappa"):
        assert np.max(np.abs(np.asarray(step2[key]) - np.asarray(direct[key]))) < 1e-9


def test_commutators_table():
    res = run_cli(["commutators", "--n", "1"])
    assert res.returncode == 0
    out = json.loads(res.stdout)
    assert out["dim"] == 6
    assert out["brackets"]["[P1,Q1]"] == {"R": 2.0}
    res = run_cli(["commutators", "--n", "2"])
    out = json.loads(res.stdout)
    assert out["dim"] == 15
    assert "[P1,Q2]" not in out["brackets"]  # vanishing bracket is omitted


def test_invariance_pass_and_determinism():
    args = ["invariance", "--object", "metric_extended", "--n", "1",
            "--samples", "120", "--seed", "42"]
    res1 = run_cli(args)
    res2 = run_cli(args)
    assert res1.returncode == 0
    assert res1.stdout == res2.stdout  # byte-identical given the seed
    assert json.loads(res1.stdout)["pass"] is True


def test_invariance_negative_control_exit_code():
    res = run_cli(["invariance", "--object", "metric_xjn_broken", "--n", "1",
                   "--samples", "60", "--seed", "1"])
    assert res.returncode == 1
    assert json.loads(res.stdout)["pass"] is False


def test_sqrt_diff_identity():
    da = [[0.4, 0.1], [0.1, -0.2]]
    res = run_cli(["sqrt-diff"], {"a": np.eye(2).tolist(), "da": da})
    out = json.loads(res.stdout)
    assert np.allclose(out["dsqrt"], np.asarray(da) / 2)


def test_metric_command():
    n = 1
    payload = {
        "alpha": 1.0, "gamma": 1.0, "chart": "pq",
        "point": [[[0.0]], [[1.0]], [0.0], [0.0]],
        "t1": [[[1.0]], [[0.0]], [0.0], [0.0]],
        "t2": [[[1.0]], [[0.0]], [0.0], [0.0]],
    }
    res = run_cli(["metric", "--object", "metric_xjn"], payload)
    assert res.returncode == 0
    assert np.isclose(json.loads(res.stdout)["value"], 1.0)


def test_oneforms_command():
    n = 1
    payload = {
        "chart": {"x": [[0.0]], "y": [[1.0]], "X": [[1.0]], "Y": [[0.0]],
                  "p": [0.0], "q": [0.0], "kappa": 0.0},
        "tangent": {"dx": [[1.0]], "dy": [[0.0]], "dX": [[0.0]], "dY": [[0.0]],
                    "dp": [0.0], "dq": [0.0], "dkappa": 0.0},
    }
    res = run_cli(["oneforms"], payload)
    assert res.returncode == 0
    out = json.loads(res.stdout)
    assert np.isclose(out["F"][0][0], 1.0) and out["R"] == 0.0
