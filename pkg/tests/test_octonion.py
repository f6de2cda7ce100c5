import numpy as np
import numpy.testing as npt
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from g2curv import octonion as oc

EXACT = 0.0
ROUND_TOL = 1e-13


def _u(name):
    return oc.unit(name)


def test_basis_ordering():
    assert oc.BASIS == ("1", "i", "j", "k", "l", "il", "jl", "kl")
    assert oc.IM_BASIS == oc.BASIS[1:]


def test_quaternion_subalgebra_products():
    # i, j, k behave as quaternions with k = ij
    npt.assert_array_equal(oc.mul(_u("i"), _u("j")), _u("k"))
    npt.assert_array_equal(oc.mul(_u("j"), _u("k")), _u("i"))
    npt.assert_array_equal(oc.mul(_u("k"), _u("i")), _u("j"))
    npt.assert_array_equal(oc.mul(_u("i"), _u("i")), -_u("1"))


def test_doubling_products():
    npt.assert_array_equal(oc.mul(_u("i"), _u("l")), _u("il"))
    npt.assert_array_equal(oc.mul(_u("j"), _u("l")), _u("jl"))
    npt.assert_array_equal(oc.mul(_u("k"), _u("l")), _u("kl"))
    npt.assert_array_equal(oc.mul(_u("l"), _u("l")), -_u("1"))
    # anti-commutation of distinct imaginary units
    npt.assert_array_equal(oc.mul(_u("l"), _u("i")), -_u("il"))


def test_every_imaginary_pair_squares_and_anticommutes():
    for a in oc.IM_BASIS:
        npt.assert_array_equal(oc.mul(_u(a), _u(a)), -_u("1"))
        for b in oc.IM_BASIS:
            if a == b:
                continue
            ab = oc.mul(_u(a), _u(b))
            ba = oc.mul(_u(b), _u(a))
            npt.assert_array_equal(ab, -ba)
            # unit product of orthogonal units is again a basis unit
            assert abs(oc.norm(ab) - 1.0) == EXACT


def test_table_and_doubling_routes_agree():
    rng = np.random.default_rng(0)
    a = rng.normal(size=(1000, 8))
    b = rng.normal(size=(1000, 8))
    npt.assert_allclose(oc.mul(a, b), oc.mul_cd(a, b), atol=ROUND_TOL * 10)


def test_norm_is_multiplicative():
    rng = np.random.default_rng(1)
    a = rng.normal(size=(500, 8))
    b = rng.normal(size=(500, 8))
    npt.assert_allclose(oc.norm(oc.mul(a, b)), oc.norm(a) * oc.norm(b), rtol=1e-12)


def test_conjugation_reverses_products():
    rng = np.random.default_rng(2)
    a = rng.normal(size=8)
    b = rng.normal(size=8)
    npt.assert_allclose(
        oc.conj(oc.mul(a, b)), oc.mul(oc.conj(b), oc.conj(a)), atol=ROUND_TOL
    )


def test_real_and_imaginary_parts():
    rng = np.random.default_rng(3)
    a = rng.normal(size=8)
    npt.assert_array_equal(oc.embed(oc.im_part(a))[1:], a[1:])
    assert oc.real_part(a) == a[0]
    npt.assert_array_equal(oc.im_unit("jl"), oc.unit("jl")[1:])


def test_dot_polarizes_norm():
    rng = np.random.default_rng(4)
    u = rng.normal(size=8)
    v = rng.normal(size=8)
    lhs = oc.norm(u + v) ** 2
    rhs = oc.norm(u) ** 2 + oc.norm(v) ** 2 + 2 * oc.dot(u, v)
    npt.assert_allclose(lhs, rhs, rtol=1e-12)


def test_quat_mul_matches_octonion_product():
    rng = np.random.default_rng(5)
    p = rng.normal(size=4)
    q = rng.normal(size=4)
    full = oc.mul(np.concatenate([p, np.zeros(4)]), np.concatenate([q, np.zeros(4)]))
    npt.assert_allclose(oc.quat_mul(p, q), full[:4], atol=ROUND_TOL)
    npt.assert_array_equal(full[4:], np.zeros(4))
    npt.assert_array_equal(oc.quat_conj(p), p * np.array([1.0, -1, -1, -1]))


def test_associator_is_alternating():
    rng = np.random.default_rng(6)
    a = rng.normal(size=8)
    b = rng.normal(size=8)
    npt.assert_allclose(oc.associator(a, a, b), np.zeros(8), atol=ROUND_TOL * 10)
    npt.assert_allclose(oc.associator(a, b, b), np.zeros(8), atol=ROUND_TOL * 10)
    npt.assert_allclose(
        oc.associator(a, b, a + b), np.zeros(8), atol=ROUND_TOL * 100
    )


def test_associator_pinned_value():
    # the first genuinely non-associative triple
    got = oc.associator(_u("i"), _u("j"), _u("l"))
    npt.assert_array_equal(got, 2.0 * _u("kl"))


def test_im_mul_drops_real_part():
    rng = np.random.default_rng(7)
    u = rng.normal(size=7)
    v = rng.normal(size=7)
    full = oc.mul(oc.embed(u), oc.embed(v))
    npt.assert_allclose(oc.im_mul(u, v), full[1:], atol=ROUND_TOL)
    npt.assert_allclose(oc.re_mul(u, v), full[0], atol=ROUND_TOL)
    assert abs(oc.re_mul(u, v) + oc.dot(u, v)) < ROUND_TOL


@settings(max_examples=50, deadline=None)
@given(st.lists(st.floats(-10, 10), min_size=16, max_size=16))
def test_left_alternative_law(vals):
    a = np.asarray(vals[:8])
    b = np.asarray(vals[8:])
    lhs = oc.mul(oc.mul(a, a), b)
    rhs = oc.mul(a, oc.mul(a, b))
    npt.assert_allclose(lhs, rhs, atol=1e-10 * max(1.0, oc.norm(a) ** 2 * oc.norm(b)))
