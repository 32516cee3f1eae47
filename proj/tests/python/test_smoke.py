import json
import math
import os
import subprocess

import pytest

import qhmoduli as q

SQ2 = math.sqrt(2.0)
EXAMPLE = [[[0, 0, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0]],
           [[2, 0, 0, 0], [1, 0, 0, 0], [2, 0, 0, 0]],
           [[3, 0, 0, 0], [1, 0, 0, 0], [3, 0, 0, 0]]]


def flat(g):
    return [c for row in g["entries"] for e in row for c in e]


def test_gram_and_inertia():
    g = q.gram(EXAMPLE)
    assert g["m"] == 3
    assert max(abs(a - b) for a, b in zip(flat(g), [1.0, 0, 0, 0] * 9)) < 1e-12
    assert q.inertia(g) == {"n_plus": 1, "n_minus": 0, "n_zero": 2}


def test_parabolic_example_not_congruent_to_reverse():
    pc = q.positive_coordinate(EXAMPLE)
    assert pc["kind"] == "parabolic"
    assert not q.congruent(EXAMPLE, list(reversed(EXAMPLE)))
    assert q.congruent(EXAMPLE, EXAMPLE)


def test_siegel_chi():
    pts = {"model": "siegel", "points": [[[0, 0, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0]],
                                         [[2 * SQ2, 0, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0]],
                                         [[3 * SQ2, 0, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0]]]}
    pc = q.positive_coordinate(pts)
    assert abs(pc["parabolic"]["X"][0][0] - 3.0) < 1e-12


def test_invariance_under_isometry():
    p = q.random_tuple("boundary-tuple", 2, 4, seed=7)
    g = q.random_isometry(2, seed=8)
    a = q.boundary_coordinate(p)
    b = q.boundary_coordinate(q.apply_isometry(g, p))
    assert a["stratum"] == b["stratum"]
    for x, y in zip(a["v"], b["v"]):
        assert max(abs(s - t) for s, t in zip(x, y)) < 1e-8


def test_realize_round_trip_and_rejection():
    p = q.random_tuple("positive-regular", 3, 4, seed=3)
    g = q.gram(p)
    back = q.gram(q.realize(g, 3))
    assert max(abs(a - b) for a, b in zip(flat(g), flat(back))) < 1e-8
    bad = [[[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
           [[0, 0, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 0]],
           [[0, 0, 0, 0], [0, 0, 0, 0], [-1, 0, 0, 0]]]
    with pytest.raises(q.RealizationError):
        q.realize(bad, 2)


def test_triangle():
    assert q.triangle_exists(1, 1, 1, 0)
    assert not q.triangle_exists(0, 0, 0, 0)
    assert abs(q.triangle_det(0, 0, 0, 0) - 1.0) < 1e-15
    pts = q.realize_triangle(2, 2, 2, math.pi / 2)
    assert len(pts["points"] if isinstance(pts, dict) else pts) == 3


def test_rotation_normalize():
    r = q.rotation_normalize([[1, 0, 0, 0], [0, 0, 3, 4]])
    assert r["stratum"] == "Z_C(2)"


def test_usage_error():
    with pytest.raises(q.UsageError):
        q.gram("{not json")


@pytest.mark.skipif("QHMODULI_CLI" not in os.environ, reason="CLI path not given")
def test_cli_json():
    out = subprocess.run([os.environ["QHMODULI_CLI"], "--json", "triangle", "--r1", "1", "--r2", "1",
                          "--r3", "1", "--alpha", "0"], capture_output=True, text=True)
    assert out.returncode == 0
    assert json.loads(out.stdout)["class"] == "parabolic111"
