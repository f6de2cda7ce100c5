"""Octonion arithmetic over the ordered basis (1, i, j, k, l, il, jl, kl).

An octonion is any length-8 float array-like in that basis order.  An
imaginary vector is length-7, ordered (i, j, k, l, il, jl, kl); index 0 of
the full basis is the real unit.  All operations are pure functions and
broadcast over leading axes.

Two independent multiplication routes are kept side by side on purpose:
``mul`` contracts a hard-coded integer structure table, while ``mul_cd``
runs the quaternion-pair doubling formula.  They must agree to float
round-off; tests enforce this on large random samples.
"""

from __future__ import annotations

import numpy as np

BASIS = ("1", "i", "j", "k", "l", "il", "jl", "kl")
IM_BASIS = BASIS[1:]

# Products of the seven imaginary units: entry [r][c] is (index, sign)
# meaning  e_r * e_c = sign * BASIS[index],  with rows/columns both ordered
# (i, j, k, l, il, jl, kl) and index 0 standing for the real unit.
_IM_TABLE = (
    ((0, -1), (3, +1), (2, -1), (5, +1), (4, -1), (7, -1), (6, +1)),
    ((3, -1), (0, -1), (1, +1), (6, +1), (7, +1), (4, -1), (5, -1)),
    ((2, +1), (1, -1), (0, -1), (7, +1), (6, -1), (5, +1), (4, -1)),
    ((5, -1), (6, -1), (7, -1), (0, -1), (1, +1), (2, +1), (3, +1)),
    ((4, +1), (7, -1), (6, +1), (1, -1), (0, -1), (3, -1), (2, +1)),
    ((7, +1), (4, +1), (5, -1), (2, -1), (3, +1), (0, -1), (1, -1)),
    ((6, -1), (5, +1), (4, +1), (3, -1), (2, -1), (1, +1), (0, -1)),
)


def _build_struct() -> np.ndarray:
    """Structure tensor S with (a*b)_r = sum_pq S[p, q, r] a_p b_q."""
    s = np.zeros((8, 8, 8))
    s[0, 0, 0] = 1.0
    for m in range(1, 8):
        s[0, m, m] = 1.0
        s[m, 0, m] = 1.0
    for r in range(7):
        for c in range(7):
            idx, sign = _IM_TABLE[r][c]
            s[r + 1, c + 1, idx] = float(sign)
    return s


_STRUCT = _build_struct()

_REAL_TOL = 1e-12


def mul(a, b) -> np.ndarray:
    """Octonion product via the structure table.  Broadcasts."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return np.einsum("pqr,...p,...q->...r", _STRUCT, a, b)


def quat_mul(p, q) -> np.ndarray:
    """Quaternion product over the basis (1, i, j, k).  Broadcasts."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    p0, p1, p2, p3 = (p[..., m] for m in range(4))
    q0, q1, q2, q3 = (q[..., m] for m in range(4))
    return np.stack(
        [
            p0 * q0 - p1 * q1 - p2 * q2 - p3 * q3,
            p0 * q1 + p1 * q0 + p2 * q3 - p3 * q2,
            p0 * q2 - p1 * q3 + p2 * q0 + p3 * q1,
            p0 * q3 + p1 * q2 - p2 * q1 + p3 * q0,
        ],
        axis=-1,
    )


def quat_conj(p) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    return p * np.array([1.0, -1.0, -1.0, -1.0])


def mul_cd(a, b) -> np.ndarray:
    """Octonion product via the quaternion-pair doubling formula.

    Writing a = (p, s) and b = (r, u) as quaternion pairs,
    a*b = (p r - conj(u) s,  u p + s conj(r)).
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    p, s = a[..., :4], a[..., 4:]
    r, u = b[..., :4], b[..., 4:]
    first = quat_mul(p, r) - quat_mul(quat_conj(u), s)
    second = quat_mul(u, p) + quat_mul(s, quat_conj(r))
    return np.concatenate([first, second], axis=-1)


def conj(a) -> np.ndarray:
    """Octonion conjugate: negate the seven imaginary coefficients."""
    a = np.asarray(a, dtype=float)
    out = -a.copy()
    out[..., 0] = a[..., 0]
    return out


def norm(a) -> np.ndarray:
    return np.linalg.norm(np.asarray(a, dtype=float), axis=-1)


def dot(u, v) -> np.ndarray:
    """Euclidean inner product of coefficient vectors (any equal length)."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    return (u * v).sum(axis=-1)


def embed(u) -> np.ndarray:
    """Imaginary 7-vector -> full octonion with zero real part."""
    u = np.asarray(u, dtype=float)
    out = np.zeros(u.shape[:-1] + (8,))
    out[..., 1:] = u
    return out


def real_part(a) -> np.ndarray:
    return np.asarray(a, dtype=float)[..., 0]


def im_part(a) -> np.ndarray:
    return np.asarray(a, dtype=float)[..., 1:]


def re_mul(u, v) -> np.ndarray:
    """Real part of the product of two imaginary vectors (= -dot(u, v))."""
    return real_part(mul(embed(u), embed(v)))


def im_mul(u, v) -> np.ndarray:
    """Imaginary part of the product of two imaginary 7-vectors.

    For orthogonal unit inputs the product is again purely imaginary; a
    nonzero real part there would indicate table corruption, so it is
    asserted small whenever the inputs are orthogonal.
    """
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    prod = mul(embed(u), embed(v))
    ortho = np.abs(dot(u, v)) < _REAL_TOL
    if np.any(ortho):
        bad = np.abs(prod[..., 0])[ortho]
        assert bad.size == 0 or float(bad.max()) < _REAL_TOL
    return prod[..., 1:]


def associator(a, b, c) -> np.ndarray:
    """(ab)c - a(bc); measures the failure of associativity."""
    return mul(mul(a, b), c) - mul(a, mul(b, c))


def unit(name: str) -> np.ndarray:
    """The named basis octonion as a length-8 array."""
    out = np.zeros(8)
    out[BASIS.index(name)] = 1.0
    return out


def im_unit(name: str) -> np.ndarray:
    """The named imaginary basis element as a length-7 array."""
    out = np.zeros(7)
    out[IM_BASIS.index(name)] = 1.0
    return out
