import numpy as np
import numpy.testing as npt
import pytest

from g2curv import group as gr
from g2curv import octonion as oc

MEMBER_TOL = 1e-10
ROUND_TOL = 1e-12


def _unit7(idx):
    e = np.zeros(7)
    e[idx] = 1.0
    return e


def test_identity_and_reflection_membership():
    assert gr.is_g2(np.eye(7))
    rep = gr.is_g2(gr.PLANE_REFLECTION)
    assert rep and rep.max_residual < 1e-14
    npt.assert_array_equal(gr.PLANE_REFLECTION @ gr.PLANE_REFLECTION, np.eye(7))
    assert gr.in_Hprime(gr.PLANE_REFLECTION)
    assert not gr.in_H(gr.PLANE_REFLECTION)
    assert not gr.in_K(gr.PLANE_REFLECTION)


def test_is_g2_rejects_non_members():
    bad = np.eye(7)
    bad[0, 0] = 2.0
    rep = gr.is_g2(bad)
    assert not rep and rep.orthogonality > 1.0
    # orthogonal but not an automorphism
    flip = np.diag([1.0, 1, 1, 1, 1, 1, -1])
    rep = gr.is_g2(flip)
    assert rep.orthogonality < ROUND_TOL and not rep
    with pytest.raises(ValueError):
        gr.is_g2(np.eye(6))


def test_from_triple_identity():
    g = gr.from_triple(_unit7(0), _unit7(1), _unit7(3))
    npt.assert_array_equal(g, np.eye(7))


def test_from_triple_column_structure():
    rng = np.random.default_rng(0)
    for _ in range(25):
        g = gr.random_g2(rng)
        e1, e2, e3 = g[:, 0], g[:, 1], g[:, 3]
        npt.assert_allclose(g[:, 2], oc.im_mul(e1, e2), atol=ROUND_TOL)
        npt.assert_allclose(g[:, 4], oc.im_mul(e1, e3), atol=ROUND_TOL)
        npt.assert_allclose(g[:, 5], oc.im_mul(e2, e3), atol=ROUND_TOL)
        npt.assert_allclose(
            g[:, 6], oc.im_mul(oc.im_mul(e1, e2), e3), atol=ROUND_TOL
        )


def test_from_triple_rejects_inadmissible():
    # e3 not perpendicular to e1*e2
    with pytest.raises(ValueError):
        gr.from_triple(_unit7(0), _unit7(1), _unit7(2))
    with pytest.raises(ValueError):
        gr.from_triple(2.0 * _unit7(0), _unit7(1), _unit7(3))


def test_random_g2_membership_and_determinism():
    rng = np.random.default_rng(1)
    for _ in range(25):
        g = gr.random_g2(rng)
        rep = gr.is_g2(g, full=True)
        assert rep.max_residual < MEMBER_TOL
    npt.assert_array_equal(gr.random_g2(7), gr.random_g2(7))
    assert np.abs(gr.random_g2(7) - gr.random_g2(8)).max() > 1e-3


def test_group_closure():
    rng = np.random.default_rng(2)
    g1, g2 = gr.random_g2(rng), gr.random_g2(rng)
    assert gr.is_g2(g1 @ g2)
    assert gr.is_g2(g1.T)
    npt.assert_allclose(g1.T @ g1, np.eye(7), atol=ROUND_TOL)


def test_automorphism_property_on_random_vectors():
    rng = np.random.default_rng(3)
    g = gr.random_g2(rng)
    u = rng.normal(size=7)
    v = rng.normal(size=7)
    npt.assert_allclose(
        g @ oc.im_mul(u, v), oc.im_mul(g @ u, g @ v), atol=1e-10
    )


def test_h_from_params_block_shape():
    alpha = 0.37
    h = gr.h_from_params(np.exp(1j * alpha), np.array([1.0, 0, 0, 0]))
    assert gr.in_H(h) and gr.in_K(h) and gr.is_g2(h)
    assert h[0, 0] == 1.0
    npt.assert_array_equal(h[0, 1:], np.zeros(6))
    npt.assert_array_equal(h[1:, 0], np.zeros(6))
    # plane block rotates by twice the phase
    rot = np.array(
        [
            [np.cos(2 * alpha), -np.sin(2 * alpha)],
            [np.sin(2 * alpha), np.cos(2 * alpha)],
        ]
    )
    npt.assert_allclose(h[1:3, 1:3], rot, atol=ROUND_TOL)
    npt.assert_array_equal(h[1:3, 3:], np.zeros((2, 4)))
    npt.assert_array_equal(h[3:, 1:3], np.zeros((4, 2)))


def test_h_from_params_kernel():
    z = np.exp(0.91j)
    q = np.array([0.5, 0.5, 0.5, 0.5])
    npt.assert_allclose(
        gr.h_from_params(z, q), gr.h_from_params(-z, -q), atol=ROUND_TOL
    )
    with pytest.raises(ValueError):
        gr.h_from_params(2.0 + 0j, q)
    with pytest.raises(ValueError):
        gr.h_from_params(z, np.array([1.0, 1.0, 0, 0]))


def test_h_is_subgroup_of_k():
    rng = np.random.default_rng(4)
    for _ in range(20):
        h = gr.random_in_H(rng)
        assert gr.in_H(h) and gr.in_Hprime(h) and gr.in_K(h)
        assert gr.is_g2(h)


def test_k_from_su3_is_homomorphism():
    rng = np.random.default_rng(5)
    u1, u2 = gr.random_su3(rng), gr.random_su3(rng)
    k1, k2 = gr.k_from_su3(u1), gr.k_from_su3(u2)
    assert gr.in_K(k1) and gr.is_g2(k1)
    npt.assert_allclose(gr.k_from_su3(u1 @ u2), k1 @ k2, atol=1e-10)
    npt.assert_array_equal(gr.k_from_su3(np.eye(3)), np.eye(7))


def test_k_from_su3_validates_input():
    with pytest.raises(ValueError):
        gr.k_from_su3(2.0 * np.eye(3))
    # unitary with determinant -1
    bad = np.diag([1.0, 1.0, -1.0]).astype(complex)
    with pytest.raises(ValueError):
        gr.k_from_su3(bad)


def test_random_in_k_fixes_first_unit():
    rng = np.random.default_rng(6)
    for _ in range(10):
        k = gr.random_in_K(rng)
        npt.assert_allclose(k[:, 0], _unit7(0), atol=ROUND_TOL)
        assert gr.is_g2(k)


def test_random_su3_is_special_unitary():
    rng = np.random.default_rng(7)
    for _ in range(10):
        u = gr.random_su3(rng)
        npt.assert_allclose(u.conj().T @ u, np.eye(3), atol=ROUND_TOL)
        assert abs(np.linalg.det(u) - 1.0) < ROUND_TOL


def test_matrix_json_round_trip():
    rng = np.random.default_rng(8)
    g = gr.random_g2(rng)
    obj = gr.matrix_to_json(g)
    assert set(obj) == {"rows"}
    npt.assert_array_equal(gr.matrix_from_json(obj), g)
    with pytest.raises(ValueError):
        gr.matrix_to_json(np.eye(3))
    with pytest.raises(ValueError):
        gr.matrix_from_json({"rows": [[1.0, 2.0]]})
