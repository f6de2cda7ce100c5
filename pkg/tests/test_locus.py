"""Zero-plane locus: classification, obstructions, group-side entry, scan."""

import numpy as np
import numpy.testing as npt
import pytest

from g2curv import canonical as ca
from g2curv import group as gr
from g2curv import locus as lo
from g2curv import metric as me

HALF_PI = np.pi / 2


def test_classify_edges_and_interior():
    c = lo.classify_point((0.0, 0.3))
    assert c.label == "ZeroPlane" and c.reason == "ThetaZero"
    assert c.witness_certificate < me.ZERO_PLANE_TOL
    c = lo.classify_point((HALF_PI, 0.3))
    assert c.label == "ZeroPlane" and c.reason == "ThetaHalfPi"
    c = lo.classify_point((0.8, HALF_PI))
    assert c.label == "ZeroPlane" and c.reason == "PhiHalfPi"
    c = lo.classify_point((0.7, 0.6))
    assert c.label == "Positive" and c.reason == "Interior"
    assert c.witness_certificate is None and c.witness is None


def test_classify_snaps_near_edges():
    c = lo.classify_point((0.01, 0.5), edge_tol=0.02)
    assert c.reason == "ThetaZero"
    # tighter tolerance flips the same point to interior
    c = lo.classify_point((0.01, 0.5), edge_tol=1e-4)
    assert c.reason == "Interior"


def test_classify_priority_at_corners():
    # theta edges win over the phi edge
    assert lo.classify_point((0.0, HALF_PI)).reason == "ThetaZero"
    assert lo.classify_point((HALF_PI, HALF_PI)).reason == "ThetaHalfPi"


def test_classify_rejects_out_of_range():
    with pytest.raises(ValueError):
        lo.classify_point((-0.2, 0.3))
    with pytest.raises(ValueError):
        lo.classify_point((0.3, HALF_PI + 0.2))


def test_edge_witnesses_certify_along_their_edges():
    rng = np.random.default_rng(0)
    for reason, edge_points in {
        "ThetaZero": [(0.0, v) for v in rng.uniform(0, HALF_PI, 5)],
        "ThetaHalfPi": [(HALF_PI, v) for v in rng.uniform(0, HALF_PI, 5)],
        "PhiHalfPi": [(v, HALF_PI) for v in rng.uniform(0, HALF_PI, 5)],
    }.items():
        pair = lo.witness_pair(reason)
        for p in edge_points:
            g = ca.canonical_matrix(p)
            assert me.certificate(g, pair).total < 1e-25


def test_obstruction_value_pinned_and_negative():
    val = lo.obstruction_value((np.pi / 4, np.pi / 4), 1.0, 1.0)
    npt.assert_allclose(val, -16.0 * np.sqrt(2.0), rtol=1e-12)
    rng = np.random.default_rng(1)
    for _ in range(200):
        p = (rng.uniform(0.05, HALF_PI - 0.05), rng.uniform(0.05, HALF_PI - 0.05))
        y5, y6 = rng.normal(size=2)
        v = lo.obstruction_value(p, y5, y6)
        assert v <= 0.0
        if abs(y5) > 1e-9 or abs(y6) > 1e-9:
            assert v < 0.0
    # equality exactly when the tail vanishes
    assert lo.obstruction_value((0.4, 0.9), 0.0, 0.0) == 0.0


def test_obstruction_value_rejects_boundary_angles():
    for p in [(0.0, 0.3), (HALF_PI, 0.3), (0.3, 0.0), (0.3, HALF_PI)]:
        with pytest.raises(ValueError):
            lo.obstruction_value(p, 1.0, 1.0)


def test_phi_zero_obstruction():
    npt.assert_allclose(
        lo.phi_zero_obstruction(np.pi / 4, np.array([0, 0, 1, 1, 1, 1.0])), -16.0
    )
    npt.assert_allclose(
        lo.phi_zero_obstruction(np.pi / 4, np.array([0, 0, 1, 0, 0, 0.0])), -4.0
    )
    rng = np.random.default_rng(2)
    for _ in range(100):
        theta = rng.uniform(0.05, HALF_PI - 0.05)
        y = np.concatenate([rng.normal(size=2), rng.normal(size=4)])
        assert lo.phi_zero_obstruction(theta, y) < 0.0
    with pytest.raises(ValueError):
        lo.phi_zero_obstruction(0.0, np.ones(6))


def test_group_side_conditions_match_classification_on_edges():
    rng = np.random.default_rng(3)
    for p, expect in [
        ((0.0, 0.4), True),
        ((HALF_PI, 0.9), True),
        ((0.7, HALF_PI), True),
        ((0.7, 0.7), False),
        ((np.pi / 4, np.pi / 4), False),
    ]:
        g = ca.canonical_matrix(p)
        assert lo.coset_zero_plane_condition(g.T) is expect
        # membership is a property of the left coset
        h = gr.random_in_H(rng)
        assert lo.coset_zero_plane_condition(g.T @ h.T) is expect


def test_group_side_condition_components():
    g = ca.canonical_matrix((HALF_PI, 0.3))
    assert lo.axis_image_orthogonal(g.T)
    assert not lo.plane_image_orthogonal(g.T)
    g = ca.canonical_matrix((0.0, 0.0))
    assert lo.plane_image_orthogonal(g.T)
    assert not lo.axis_image_orthogonal(g.T)


def test_random_elements_avoid_the_locus():
    rng = np.random.default_rng(4)
    for _ in range(50):
        assert not lo.coset_zero_plane_condition(gr.random_g2(rng))


def test_scan_small_grid_agrees_and_is_deterministic():
    rows = lo.scan(5, restarts=40, seed=0)
    assert len(rows) == 25
    assert all(r.agree for r in rows)
    # boundary cells are flat, deep interior cells are positive
    for r in rows:
        on_edge = (
            min(r.theta, HALF_PI - r.theta, HALF_PI - r.phi) <= lo.EDGE_TOL
        )
        assert (r.closed_form_label == "ZeroPlane") == on_edge
        if r.closed_form_label == "ZeroPlane":
            assert r.min_certificate < me.ZERO_PLANE_TOL
        else:
            assert r.min_certificate > me.POSITIVE_THRESHOLD
    rows2 = lo.scan(5, restarts=40, seed=0)
    assert lo.scan_to_csv(rows) == lo.scan_to_csv(rows2)


def test_scan_csv_format():
    rows = lo.scan(2, restarts=5, seed=1)
    text = lo.scan_to_csv(rows)
    lines = text.strip().split("\n")
    assert lines[0] == "theta,phi,min_certificate,solver_label,closed_form_label,agree"
    assert len(lines) == 1 + 4
    first = lines[1].split(",")
    assert len(first) == 6
    assert first[5] in ("true", "false")
    assert text.endswith("\n")


def test_scan_rejects_degenerate_grid():
    with pytest.raises(ValueError):
        lo.scan(1)


def test_default_edge_tolerance_adapts_to_fine_grids():
    assert lo.default_edge_tol(21) == lo.EDGE_TOL
    spacing = HALF_PI / 100
    tol = lo.default_edge_tol(101)
    assert tol < spacing
    # the first interior row of a 101-point axis stays interior ...
    assert lo.classify_point((spacing, 0.7), edge_tol=tol).label == "Positive"
    # ... where the uncapped tolerance would have absorbed it
    assert lo.classify_point((spacing, 0.7), edge_tol=lo.EDGE_TOL).label == "ZeroPlane"
