import math
import os
from pathlib import Path

import pytest

import attractor

DATA = Path(os.environ.get("ATTRACTOR_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))
IDENTITY = [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
ZERO = [["0"] * 3 for _ in range(3)]
I = {"a": "0", "b": "1", "D": 1}
O = {"a": "0", "b": "0", "D": 0}


def charge(p0, P, Q, q0):
    return {"p0": p0, "P": P, "Q": Q, "q0": q0}


def test_identity_charge():
    c = charge(1, ZERO, IDENTITY, 0)
    inv = attractor.invariants(c)
    assert inv["D"] == "4" and inv["M"] == "0"
    sol = attractor.solve_torus(c)
    assert sol["C"] == {"a": "1", "b": "0", "D": 0}
    assert [sol["T"][i][i] for i in range(3)] == [I, I, I]
    assert sol["T"][0][1] == O


def test_general_branch_and_kahler():
    c = charge(1, ZERO, IDENTITY, 0)
    assert len(attractor.solve_torus(c, branch="general")) == 2
    assert attractor.solve_torus(c, mode="kahler")["Omega"][2][2] == I


def test_no_attractor():
    with pytest.raises(attractor.NoAttractor):
        attractor.solve_torus(charge(1, ZERO, [["-1", "0", "0"], ["0", "-1", "0"], ["0", "0", "-1"]], 0))
    with pytest.raises(ValueError):
        attractor.solve_torus({"p0": 1})


def test_period_round_trip():
    out = attractor.invert_picard9({"R": IDENTITY, "D": "1", "N": ZERO})
    T = attractor.solve_torus(out["charge"])["T"]
    assert T[1][1] == I


def test_exs():
    a = attractor.solve_exs_complex([[2, 0], [0, 2]], [1, 0], [0, 1])
    assert a["tau"] == I
    k = attractor.solve_exs_kahler([[4]], {"r": 1, "D": [0], "s": -2}, {"r": 0, "D": [-1], "s": 0})
    assert k["omega_E"] == I and k["omega_S"] == [I]


def test_minimize():
    r = attractor.minimize(charge(1, ZERO, IDENTITY, 0), starts=4)
    assert r["attractor_found"]
    assert abs(r["T"][0][0]["im"] - 1) < 1e-6


def test_potentials():
    tau = complex(0.3, 1.7)
    assert abs(attractor.wp_elliptic(tau) + math.log(2 * tau.imag)) < 1e-12
    y = 50.0
    k = attractor.wp_quintic(complex(0.1, y), DATA / "gw_quintic_sample.csv")
    assert abs(math.exp(-k) / (20 / 3 * y**3) - 1) < 1e-4


def test_tau_set_and_radius():
    pts = attractor.tau_set([[2, 0], [0, 2]], 4)
    assert any(abs(t - 1j) < 1e-15 and d > 0 for t, d in pts)
    r4 = attractor.covering_radius([t for t, _ in pts])
    r8 = attractor.covering_radius([t for t, _ in attractor.tau_set([[2, 0], [0, 2]], 8)])
    assert r8 < r4


def test_verify():
    assert "rmd" in attractor.suite_names()
    res = attractor.verify("exs")
    assert res["pass"] and res["checks"] > 0
