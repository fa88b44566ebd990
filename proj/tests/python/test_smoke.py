import json
import os
import subprocess
from pathlib import Path

import numpy as np
import pytest

import chyp

DATA = Path(__file__).resolve().parent.parent / "data"


def siegel(z, w):
    return z[0] * np.conj(w[2]) + z[1] * np.conj(w[1]) + z[2] * np.conj(w[0])


def test_forms_and_cross_product():
    rng = np.random.default_rng(1)
    z = rng.normal(size=3) + 1j * rng.normal(size=3)
    w = rng.normal(size=3) + 1j * rng.normal(size=3)
    assert abs(chyp.herm_inner("siegel", z, w) - siegel(z, w)) < 1e-12
    x = chyp.boxtimes("siegel", z, w)
    assert abs(siegel(x, z)) < 1e-12 * np.linalg.norm(x) * np.linalg.norm(z)
    c = chyp.cayley_matrix()
    assert np.allclose(c @ c, np.eye(3), atol=1e-15)


def test_heisenberg_chart():
    v = chyp.heis_embed(1.0, 0.0)
    assert np.allclose(v / v[2], [-1, np.sqrt(2), 1])
    assert chyp.heis_project(np.array([1, 0, 0], dtype=complex)) is None
    zeta, h = chyp.heis_project(chyp.heis_embed(0.3 - 0.2j, 1.5))
    assert abs(zeta - (0.3 - 0.2j)) < 1e-14 and abs(h - 1.5) < 1e-14
    with pytest.raises(chyp.GeometryError):
        chyp.heis_project(np.array([1, 0, 1], dtype=complex))


def test_curve_classification():
    assert chyp.classify_curve("canonical-rcircle")["verdict"] == "RCIRCLE"
    assert chyp.classify_curve("vertical-chain")["verdict"] == "CHAIN"
    assert chyp.classify_curve("vertical-circle")["verdict"] == "NEITHER"
    t = np.arange(64) / 64
    ring = np.column_stack([np.cos(2 * np.pi * t), np.sin(2 * np.pi * t), np.zeros_like(t)])
    assert chyp.classify_curve(ring)["verdict"] == "CHAIN"


def test_isometries():
    g = np.diag([0.5, 1, 2]).astype(complex)
    assert chyp.classify_isometry(g) == "LOXODROMIC"
    assert chyp.classify_isometry(np.diag([1j, 1, 1j])) == "ELLIPTIC"
    u = np.eye(3, dtype=complex)
    u[0, 2] = 1j
    assert chyp.classify_isometry(u) == "PARABOLIC"
    d = chyp.normalize_loxodromic(g)
    assert abs(d["lambda"] - 0.25) < 1e-15


def test_limit_sets():
    s = chyp.sample_limit_set([np.diag([0.5, 1, 2]).astype(complex)], max_word_length=30)
    assert s["points"].shape == (2, 3)
    assert s["classification"]["verdict"] == "ELEMENTARY"
    group = json.loads((DATA / "block_pu11.json").read_text())
    gens = [np.array([complex(*e) for e in m]).reshape(3, 3) for m in group["generators"]]
    s = chyp.sample_limit_set(gens, max_word_length=8)
    assert s["classification"]["verdict"] == "CHAIN"
    assert np.all(np.abs(s["points"][:, 1]) <= 1e-6 * np.linalg.norm(s["points"], axis=1))
    again = chyp.classify_limit_points(s["points"])
    assert again["verdict"] == "CHAIN"
    with pytest.raises(chyp.GeometryError, match="no generators"):
        chyp.sample_limit_set([])


def test_verify_suite():
    [r] = chyp.run_verify("cayley")
    assert r["passed"] and r["max_residual"] <= 1e-12
    with pytest.raises(chyp.GeometryError, match="valid suites"):
        chyp.run_verify("bogus")


@pytest.mark.skipif("CHYP_CLI" not in os.environ, reason="CLI path not given")
def test_cli_convert_round_trip(tmp_path):
    cli = os.environ["CHYP_CLI"]
    rng = np.random.default_rng(5)
    rows = ["zeta_re,zeta_im,v", "inf,,"]
    pts = rng.normal(size=(50, 3)) * 2
    rows += [",".join(repr(float(x)) for x in p) for p in pts]
    src = tmp_path / "heis.csv"
    src.write_text("\n".join(rows) + "\n")
    ball = subprocess.run([cli, "convert", "--from", "heisenberg", "--to", "ball", "--input", str(src)],
                          check=True, capture_output=True, text=True).stdout
    mid = tmp_path / "ball.csv"
    mid.write_text(ball)
    back = subprocess.run([cli, "convert", "--from", "ball", "--to", "heisenberg", "--input", str(mid)],
                          check=True, capture_output=True, text=True).stdout.splitlines()
    assert back[0] == "zeta_re,zeta_im,v"
    assert back[1] == "inf,,"
    got = np.array([[float(x) for x in line.split(",")] for line in back[2:]])
    assert np.max(np.abs(got - pts) / (1 + np.abs(pts))) <= 1e-10
