"""Smoke tests for the python bindings."""

import math
import os

import pytest

ktweb = pytest.importorskip("ktweb")

YATSUN_ALPHA = ["3/4", 0, 0, 0, "-1/2", 1]
YATSUN_POTENTIAL = [
    (4, 0, -2),
    (2, 2, -4),
    (0, 4, -2),
    (3, 0, 4),
    (1, 2, 4),
    (2, 0, -2),
    (0, 2, -2),
]


def test_classify_cartesian_example():
    out = ktweb.classify([1, -6, 2, 0, 0, 0])
    assert out["stratum"] == "E1"
    assert out["web"] == "Cartesian"
    assert out["leaf"] == [-5, 10]
    assert out["leaf_exact"] == ["-5", "10"]


def test_equivalence_of_the_polar_pair():
    out = ktweb.equivalent([2, 1, "2/3", 1, 2, -3], [1, -3, "8/3", 2, 4, -3])
    assert out["equivalent"] is True
    assert out["first"]["leaf"] == [-7, -3]


def test_components_and_eigenvalues():
    k11, k12, k22 = ktweb.kt_components(YATSUN_ALPHA, 0.0, 0.0)
    assert (k11, k12, k22) == (0.75, 0.0, 0.0)
    lo, hi = ktweb.kt_eigenvalues([1, -6, 2, 0, 0, 0], 0.0, 0.0)
    assert math.isclose(lo, -(5 + math.sqrt(65)) / 2, rel_tol=1e-12)
    assert math.isclose(hi, -(5 - math.sqrt(65)) / 2, rel_tol=1e-12)


def test_separation_pipeline():
    out = ktweb.separate(YATSUN_ALPHA, YATSUN_POTENTIAL)
    assert out["web"] == "EllipticHyperbolic"
    assert out["chart"] == "U1"
    assert out["frame"] == {"theta": 0, "a": -0.5, "b": 0}
    assert out["canonical_exact"] == ["3/4", "-1/4", "0", "0", "0", "1"]
    assert out["transformed_approximate"] is False
    terms = {(i, j): c for i, j, c in out["first_integral_potential"]}
    assert terms[(4, 0)] == "-3/2"
    assert terms[(0, 4)] == "1/2"


def test_incompatible_raises():
    with pytest.raises(ktweb.Incompatible):
        ktweb.separate([1, 2, 0, 0, 0, 0], [(1, 1, 1)])


def test_render_svg(tmp_path):
    path = os.fspath(tmp_path / "web.svg")
    summary = ktweb.render_svg(YATSUN_ALPHA, path, region=(-2, -2, 3, 2), curves=3, samples=64)
    assert summary["path"] == path
    assert len(summary["singular_points"]) == 2
    xs = sorted(p[0] for p in summary["singular_points"])
    assert math.isclose(xs[0], -0.5, abs_tol=1e-12)
    assert math.isclose(xs[1], 1.5, abs_tol=1e-12)
    with open(path, "r", encoding="utf-8") as fh:
        assert "<svg" in fh.read()
