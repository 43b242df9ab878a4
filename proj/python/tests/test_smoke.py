import json
import os
import pathlib

import pytest

import gyrodisc as g

DATA = pathlib.Path(os.environ.get("GYRO_TEST_DATA", pathlib.Path(__file__).resolve().parents[2] / "tests" / "data"))


def test_mobius_examples():
    assert g.mobius_add(0.5, 0.5) == pytest.approx(0.8, abs=1e-15)
    assert g.mobius_neg(0.2 + 0.1j) == -0.2 - 0.1j
    u = g.gyr(0.5, 0.5j)
    assert abs(u) == pytest.approx(1.0, abs=1e-15)
    assert u == pytest.approx((1 - 0.25j) / (1 + 0.25j), abs=1e-15)
    assert g.scalar_mul(0.5, 0.6) == pytest.approx(1 / 3, abs=1e-15)
    v, v_gamma = g.distance(0.5, 0.8)
    assert v == pytest.approx(0.5, abs=1e-15)
    assert v_gamma == pytest.approx(2 / 3, abs=1e-15)
    assert g.gamma_correct(0.5, s=10.0) == pytest.approx(0.5012531328320802, abs=1e-15)


def test_errors_are_value_errors():
    with pytest.raises(g.GyroError, match="outside"):
        g.mobius_add(1.5, 0.0)
    with pytest.raises(ValueError):
        g.gamma_correct(1.0)
    with pytest.raises(g.SceneError, match="1:9"):
        g.verify_scene("point A zero 0")


def test_gyrolines():
    arc = g.gyroline_through(0.5, 0.5j)
    assert arc["kind"] == "arc"
    assert arc["cx"] == pytest.approx(1.25)
    assert arc["r"] == pytest.approx(2.125 ** 0.5)
    assert g.gyroline_through(0.0, 0.5) == {"kind": "diameter", "theta": 0.0}
    hit = g.intersect(-0.5, 0.5, 0.5, 0.5j)
    assert hit == pytest.approx(0.5, abs=1e-14)
    assert g.collinear([0.0, 0.2, 0.7])
    assert not g.collinear([0.0, 0.2, 0.1j])


def test_quadrilateral_and_converse():
    A, B, C, D = 0.4, 0.3j, -0.45, -0.2 - 0.3j
    r = g.quad_menelaus(A, B, C, D, 0.05 + 0.1j, 0.1 + 0.3j)
    assert r["theorem"] == "T3"
    assert r["deviation"] <= 1e-9
    X, Y, Z, W = (complex(*hit["point"]) for hit in r["intersections"])
    c = g.converse_check(A, B, C, D, X, Z, W)
    assert abs(c["Y"] - Y) <= 1e-9
    assert c["recovery_gap"] <= 1e-9


def test_triangle_and_transversal():
    t = g.triangle_menelaus(0.3, 0.4j, -0.35, 0.1, 0.05 + 0.2j)
    assert t["deviation"] <= 1e-9
    assert [x["label"] for x in t["ratios"]] == ["AF/BF", "BD/CD", "CE/AE"]
    r = g.transversal_product(0.1 + 0.4j, -0.3 - 0.1j, 0.45 - 0.15j, 0.4, -0.05 + 0.15j, 0.2 + 0.1j)
    assert r["theorem"] == "T5"
    assert r["deviation"] <= 1e-9


def test_f_and_limit():
    gamma_form, closed = g.f_eval(0.2, 0.6)
    assert closed == pytest.approx(0.36363636363636365, abs=1e-15)
    assert gamma_form == pytest.approx(closed, abs=1e-14)
    rows = g.euclidean_limit_sweep(0.4, 0.3j, -0.45, -0.2 - 0.3j, 0.05 + 0.1j, 0.1 + 0.3j)
    euclid = [row[2] for row in rows]
    assert euclid == sorted(euclid, reverse=True)
    assert euclid[-1] <= 1e-7


def test_campaign_is_deterministic():
    a = g.run_campaign("t3", n=50, seed=42)
    assert a == g.run_campaign("t3", n=50, seed=42)
    assert a["aggregate"]["failures"] == 0
    assert a["aggregate"]["max_deviation"] <= 1e-9
    with pytest.raises(ValueError):
        g.run_campaign("t9")


def test_scenes():
    text = (DATA / "quad.gyro").read_text()
    outcomes = g.verify_scene(text)
    assert outcomes[0]["passed"]
    assert g.canonical_scene(g.canonical_scene(text)) == g.canonical_scene(text)
    svg = g.render_svg(text)
    assert svg.count('class="side"') == 4
    assert svg.count('class="intersection"') == 4
    assert not g.verify_scene((DATA / "offline.gyro").read_text())[0]["passed"]
    json.dumps(outcomes)
