"""Oriented-plane bundle maps and the special-unitary coset correspondence."""

import numpy as np
import numpy.testing as npt
import pytest

from g2curv import canonical as ca
from g2curv import group as gr
from g2curv import locus as lo
from g2curv import octonion as oc
from g2curv import topology as tp


def _unit(i):
    e = np.zeros(7)
    e[i] = 1.0
    return e


def test_oriented_plane_requires_orthonormal_frame():
    p = tp.OrientedPlane(_unit(1), _unit(2))
    npt.assert_array_equal(p.u, _unit(1))
    with pytest.raises(ValueError):
        tp.OrientedPlane(_unit(1), 2.0 * _unit(2))
    with pytest.raises(ValueError):
        tp.OrientedPlane(_unit(1), (_unit(1) + _unit(2)) / np.sqrt(2.0))


def test_same_plane_respects_orientation():
    p = tp.OrientedPlane(_unit(1), _unit(2))
    a = 0.77
    rotated = tp.OrientedPlane(
        np.cos(a) * _unit(1) + np.sin(a) * _unit(2),
        -np.sin(a) * _unit(1) + np.cos(a) * _unit(2),
    )
    assert tp.same_plane(p, rotated)
    assert not tp.same_plane(p, tp.OrientedPlane(_unit(2), _unit(1)))
    assert not tp.same_plane(p, tp.OrientedPlane(_unit(3), _unit(4)))


def test_plane_and_sphere_maps_pinned():
    assert tp.same_plane(tp.plane_map(np.eye(7)), tp.OrientedPlane(_unit(1), _unit(2)))
    npt.assert_allclose(tp.sphere_map(np.eye(7)), _unit(0), atol=1e-14)
    g = ca.canonical_matrix((np.pi / 2, 0.0))
    npt.assert_allclose(tp.sphere_map(g), [0, -1, 0, 0, 0, 0, 0], atol=1e-14)


def test_bundle_projection_is_octonion_product_of_the_frame():
    p = tp.OrientedPlane(_unit(1), _unit(2))
    npt.assert_allclose(tp.bundle_projection(p), oc.im_mul(_unit(1), _unit(2)), atol=1e-14)
    # reversing orientation flips the image point
    q = tp.OrientedPlane(_unit(2), _unit(1))
    npt.assert_allclose(tp.bundle_projection(q), -tp.bundle_projection(p), atol=1e-14)


def test_commuting_square():
    rng = np.random.default_rng(0)
    for _ in range(100):
        g = gr.random_g2(rng)
        lhs = tp.bundle_projection(tp.plane_map(g))
        rhs = tp.sphere_map(g)
        npt.assert_allclose(lhs, rhs, atol=1e-12)


def test_plane_map_is_constant_on_stabilizer_cosets():
    rng = np.random.default_rng(1)
    g = gr.random_g2(rng)
    p = tp.plane_map(g)
    for _ in range(10):
        h = gr.random_in_H(rng)
        assert tp.same_plane(tp.plane_map(g @ h), p)


def test_su3_coset_validation():
    tp.SU3Coset(np.eye(3, dtype=complex))
    with pytest.raises(ValueError):
        tp.SU3Coset(2.0 * np.eye(3, dtype=complex))
    bad = np.diag([1.0, 1.0, -1.0]).astype(complex)
    with pytest.raises(ValueError):
        tp.SU3Coset(bad)


def test_coset_distance_properties():
    rng = np.random.default_rng(2)
    a = tp.SU3Coset(gr.random_su3(rng))
    assert tp.coset_distance(a, a) < 1e-10
    # the circle stabilizer acts trivially on the coset
    stab = tp.SU3Coset(a.rep @ tp.coset_stabilizer(1.234))
    assert tp.coset_distance(a, stab) < 1e-8
    assert tp.same_coset(a, stab, tol=1e-8)
    b = tp.SU3Coset(gr.random_su3(rng))
    d_ab = tp.coset_distance(a, b)
    assert d_ab > 0.1
    npt.assert_allclose(tp.coset_distance(b, a), d_ab, atol=1e-8)


def test_coset_round_trip():
    rng = np.random.default_rng(3)
    for _ in range(5):
        a = tp.SU3Coset(gr.random_su3(rng))
        g = tp.from_su3_coset(a)
        assert gr.is_g2(g, full=True)
        assert lo.coset_zero_plane_condition(g)
        back = tp.to_su3_coset(g)
        assert tp.same_coset(a, back, tol=1e-8)


def test_identity_coset_round_trip_pinned():
    ident = tp.SU3Coset(np.eye(3, dtype=complex))
    g = tp.from_su3_coset(ident)
    # the group-side representative sits inside the double locus ...
    assert lo.plane_image_orthogonal(g) and lo.axis_image_orthogonal(g)
    # ... and maps straight back
    assert tp.same_coset(tp.to_su3_coset(g), ident, tol=1e-8)


def test_to_su3_coset_requires_double_locus_membership():
    g = ca.canonical_matrix((np.pi / 4, np.pi / 4))
    with pytest.raises(ValueError):
        tp.to_su3_coset(g.T)
    rng = np.random.default_rng(4)
    with pytest.raises(ValueError):
        tp.to_su3_coset(gr.random_g2(rng))


def test_to_su3_coset_is_well_defined_on_planes():
    rng = np.random.default_rng(5)
    a = tp.SU3Coset(gr.random_su3(rng))
    g = tp.from_su3_coset(a)
    # dressing by the plane stabilizer keeps the coset
    for _ in range(5):
        h = gr.random_in_H(rng)
        assert tp.same_coset(tp.to_su3_coset(g @ h), tp.to_su3_coset(g), tol=1e-8)
