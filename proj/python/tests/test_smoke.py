import itertools
import os
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

import gsh

DATA = Path(os.environ.get("GSH_TEST_DATA", Path(__file__).resolve().parents[2] / "tests" / "data"))


def kirchhoff_resistance(graph, p, q):
    """Exact effective resistance by grounding q and solving L x = e_p over Fractions."""
    ids = [v["id"] for v in graph["vertices"]]
    index = {v: i for i, v in enumerate(ids)}
    n = len(ids)
    lap = [[Fraction(0)] * n for _ in range(n)]
    for e in graph["edges"]:
        a, b = index[e["u"]], index[e["v"]]
        if a == b:
            continue
        c = 1 / Fraction(str(e["length"]))
        lap[a][a] += c
        lap[b][b] += c
        lap[a][b] -= c
        lap[b][a] -= c
    keep = [i for i in range(n) if i != index[q]]
    m = [[lap[i][j] for j in keep] + [Fraction(int(i == index[p]))] for i in keep]
    size = len(keep)
    for col in range(size):
        pivot = next(r for r in range(col, size) if m[r][col] != 0)
        m[col], m[pivot] = m[pivot], m[col]
        for r in range(size):
            if r != col and m[r][col] != 0:
                f = m[r][col] / m[col][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return m[keep.index(index[p])][size] / m[keep.index(index[p])][keep.index(index[p])]


def theta_direct(a, b, omega, radius=12):
    g = omega.shape[0]
    av = np.array([(a >> i) & 1 for i in range(g)]) / 2
    bv = np.array([(b >> i) & 1 for i in range(g)]) / 2
    total = 0j
    for n in itertools.product(range(-radius, radius + 1), repeat=g):
        v = np.array(n) + av
        total += np.exp(1j * np.pi * v @ omega @ v + 2j * np.pi * v @ bv)
    return total


OMEGA2 = np.array([[1.1j, 0.3 + 0.2j], [0.3 + 0.2j, 0.9j + 0.1]])
OMEGA3 = np.array(
    [
        [0.1 + 1.2j, 0.2 + 0.3j, -0.1 + 0.1j],
        [0.2 + 0.3j, -0.3 + 1.0j, 0.05 - 0.2j],
        [-0.1 + 0.1j, 0.05 - 0.2j, 0.2 + 1.4j],
    ]
)


def test_twogon_invariants_are_fractions():
    inv = gsh.invariants(DATA / "twogon.json")
    assert inv["genus"] == 3
    assert inv["lambda"] == Fraction(2, 7)
    assert inv["tau"] == Fraction(1, 6)
    assert isinstance(inv["delta"]["total"], Fraction)


def test_resistance_matches_kirchhoff():
    graph = {
        "vertices": [{"id": "a", "genus": 1}, {"id": "b", "genus": 0}, {"id": "c", "genus": 1}],
        "edges": [
            {"id": "e1", "u": "a", "v": "b", "length": "3/2"},
            {"id": "e2", "u": "b", "v": "c", "length": 2},
            {"id": "e3", "u": "a", "v": "c", "length": "1/3"},
            {"id": "e4", "u": "a", "v": "b", "length": 5},
        ],
    }
    for p, q in [("a", "b"), ("a", "c"), ("b", "c")]:
        assert gsh.effective_resistance(graph, p, q) == kirchhoff_resistance(graph, p, q)


def test_twogon_contribution_accepts_fractions():
    assert gsh.twogon_contribution(Fraction(1, 2), 3) == gsh.twogon_contribution("1/2", "3")


def test_errors_carry_codes():
    with pytest.raises(gsh.GshError) as info:
        gsh.invariants({"vertices": [{"id": "x", "genus": 1}], "edges": [{"id": "e", "u": "x", "v": "y", "length": 1}]})
    assert info.value.code == "MalformedGraph"
    with pytest.raises(ValueError):
        gsh.chi18(OMEGA2)


def test_theta_matches_direct_sum():
    for a, b in gsh.even_characteristics(2):
        assert abs(gsh.theta_null(a, b, OMEGA2) - theta_direct(a, b, OMEGA2)) < 1e-10


def test_hodge_norm_is_modular_invariant():
    reduced, gamma, cap_hit = gsh.siegel_reduce(OMEGA3)
    assert not cap_hit and gsh.is_symplectic(gamma)
    base = gsh.log_norm_chi18(OMEGA3)
    assert abs(gsh.log_norm_chi18(reduced) - base) < 1e-9 * max(1.0, abs(base))
    moved = gsh.sp_transform(OMEGA3, gamma)
    assert np.allclose(moved, reduced)


def test_period_matrix_is_in_siegel_space():
    omega = gsh.period_matrix(n=10)
    assert omega.shape == (3, 3)
    assert np.allclose(omega, omega.T, atol=1e-10)
    assert np.all(np.linalg.eigvalsh(omega.imag) > 0)
    assert np.isfinite(gsh.log_norm_chi18(omega))


def test_hyperelliptic_reference_vanishes():
    c = gsh.chi18(gsh.hyperelliptic_reference())
    assert c["vanishes"] and c["log_norm"] == float("-inf")


def test_assemble_flags_consistency():
    assert gsh.assemble(DATA / "places.json")["consistent"] is True
    report = gsh.assemble(DATA / "inconsistent.json")
    assert report["consistent"] is False
    assert report["noether_residual"] == "-1"


def test_kappa_sweep_rows():
    out = gsh.kappa_sweep([10, 100, 1000, 10000])
    assert all(r["ok"] for r in out["rows"])
    assert out["f_increasing"]
    assert out["csv"].startswith("#")
