"""The compact 14-dimensional automorphism group of the octonions as
7x7 orthogonal matrices acting on the imaginary units, together with its
two distinguished subgroups and deterministic sampling helpers.

Conventions fixed by the validation tests:

- A group element is a 7x7 orthogonal matrix over the imaginary basis
  (i, j, k, l, il, jl, kl) that is multiplicative on imaginary parts.
  Columns obey the product structure
  ``[c1, c2, c1*c2, c4, c1*c4, c2*c4, (c1*c2)*c4]``.
- ``K`` is the stabilizer of the first imaginary unit; it is a copy of
  SU(3) through the complex coordinates ``(v_j + i v_k, v_l + i v_il,
  v_jl - i v_kl)`` on the orthogonal complement of that unit.  The minus
  sign in the third coordinate makes left multiplication by the first
  unit agree with complex multiplication by i.
- ``H`` is the stabilizer of the oriented plane spanned by the second
  and third imaginary units.  Its elements are parameterized by a unit
  complex number z and a unit quaternion q acting as
  ``a + b*l  ->  z a conj(z) + (q b conj(z)) l``
  on quaternion pairs; (z, q) and (-z, -q) give the same element.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import octonion as oc

MEMBER_TOL = 1e-10
ORTHO_TOL = 1e-11
TRIPLE_TOL = 1e-9
UNIT_TOL = 1e-12
_RESAMPLE_TOL = 1e-6

#: Orientation-reversing involution of the fixed plane; together with H it
#: generates the full (disconnected) plane stabilizer.
PLANE_REFLECTION = np.diag([-1.0, 1.0, -1.0, 1.0, -1.0, 1.0, -1.0])

# Unordered imaginary basis pairs, and their products under the table.
_PAIRS = np.array([(a, b) for a in range(7) for b in range(a + 1, 7)])
_PAIR_PRODUCTS = oc.im_mul(
    np.eye(7)[_PAIRS[:, 0]], np.eye(7)[_PAIRS[:, 1]]
)  # (21, 7)


@dataclass(frozen=True)
class MembershipReport:
    """Residuals of the three membership tests; truthy iff all pass."""

    orthogonality: float
    automorphism: float
    column_structure: float

    def __bool__(self) -> bool:
        return (
            self.orthogonality < ORTHO_TOL
            and self.automorphism < MEMBER_TOL
            and self.column_structure < MEMBER_TOL
        )

    @property
    def max_residual(self) -> float:
        return max(self.orthogonality, self.automorphism, self.column_structure)


def is_g2(m, *, full: bool = False):
    """Membership test for the automorphism group.

    Returns a truthy :class:`MembershipReport`; pass ``full=False`` (the
    default) and use it in boolean context, or inspect the residuals.
    """
    m = np.asarray(m, dtype=float)
    if m.shape != (7, 7):
        raise ValueError(f"expected a 7x7 matrix, got shape {m.shape}")
    orth = float(np.abs(m.T @ m - np.eye(7)).max())
    lhs = m @ _PAIR_PRODUCTS.T  # (7, 21)
    rhs = oc.im_mul(m[:, _PAIRS[:, 0]].T, m[:, _PAIRS[:, 1]].T).T
    autom = float(np.abs(lhs - rhs).max())
    c = m.T
    col = max(
        float(np.abs(c[2] - oc.im_mul(c[0], c[1])).max()),
        float(np.abs(c[4] - oc.im_mul(c[0], c[3])).max()),
        float(np.abs(c[5] - oc.im_mul(c[1], c[3])).max()),
        float(np.abs(c[6] - oc.im_mul(oc.im_mul(c[0], c[1]), c[3])).max()),
    )
    return MembershipReport(orth, autom, col)


def from_triple(e1, e2, e3, tol: float = TRIPLE_TOL) -> np.ndarray:
    """Unique group element sending the first three basis units to an
    admissible triple: unit vectors with e2 perpendicular to e1 and e3
    perpendicular to e1, e2 and e1*e2.

    The element g with g(i)=e1, g(j)=e2, g(l)=e3 has columns
    [e1, e2, e1*e2, e3, e1*e3, e2*e3, (e1*e2)*e3].
    """
    e1 = np.asarray(e1, dtype=float)
    e2 = np.asarray(e2, dtype=float)
    e3 = np.asarray(e3, dtype=float)
    e12 = oc.im_mul(e1, e2)
    checks = [
        abs(oc.dot(e1, e1) - 1.0),
        abs(oc.dot(e2, e2) - 1.0),
        abs(oc.dot(e3, e3) - 1.0),
        abs(oc.dot(e1, e2)),
        abs(oc.dot(e1, e3)),
        abs(oc.dot(e2, e3)),
        abs(oc.dot(e12, e3)),
    ]
    if max(checks) > tol:
        raise ValueError(
            "not an admissible triple: max constraint residual "
            f"{max(checks):.3e} exceeds {tol:.1e}"
        )
    cols = [e1, e2, e12, e3, oc.im_mul(e1, e3), oc.im_mul(e2, e3), oc.im_mul(e12, e3)]
    return np.column_stack(cols)


def in_K(g, tol: float = MEMBER_TOL) -> bool:
    """True iff g fixes the first imaginary unit."""
    g = np.asarray(g, dtype=float)
    e1 = np.zeros(7)
    e1[0] = 1.0
    return bool(np.abs(g[:, 0] - e1).max() < tol)


def in_H(g, tol: float = MEMBER_TOL) -> bool:
    """True iff g stabilizes the oriented plane of the second and third
    imaginary units: block form diag(1, R, A) with R a 2x2 rotation."""
    g = np.asarray(g, dtype=float)
    e1 = np.zeros(7)
    e1[0] = 1.0
    res = max(
        float(np.abs(g[0, :] - e1).max()),
        float(np.abs(g[:, 0] - e1).max()),
        float(np.abs(g[1:3, 3:]).max()),
        float(np.abs(g[3:, 1:3]).max()),
        abs(float(np.linalg.det(g[1:3, 1:3])) - 1.0),
    )
    return bool(res < tol)


def in_Hprime(g, tol: float = MEMBER_TOL) -> bool:
    """True iff g lies in the full plane stabilizer H' = H union PLANE_REFLECTION*H."""
    g = np.asarray(g, dtype=float)
    return in_H(g, tol) or in_H(PLANE_REFLECTION @ g, tol)


def _as_quat(z: complex) -> np.ndarray:
    return np.array([z.real, z.imag, 0.0, 0.0])


def h_from_params(z: complex, q, tol: float = UNIT_TOL) -> np.ndarray:
    """Plane-stabilizer element for a unit complex z and unit quaternion q.

    Acts on quaternion pairs a + b*l by a -> z a conj(z), b -> q b conj(z).
    The kernel is (z, q) = (-1, -1), so (z, q) and (-z, -q) coincide.
    """
    z = complex(z)
    q = np.asarray(q, dtype=float)
    if abs(abs(z) - 1.0) > tol:
        raise ValueError(f"z must be a unit complex number, |z| = {abs(z)!r}")
    if q.shape != (4,) or abs(np.linalg.norm(q) - 1.0) > tol:
        raise ValueError("q must be a unit quaternion of shape (4,)")
    m = np.zeros((7, 7))
    m[0, 0] = 1.0
    z2 = z * z
    m[1:3, 1:3] = np.array([[z2.real, -z2.imag], [z2.imag, z2.real]])
    zc = _as_quat(z.conjugate())
    for col in range(4):
        e = np.zeros(4)
        e[col] = 1.0
        m[3:, 3 + col] = oc.quat_mul(oc.quat_mul(q, e), zc)
    return m


def _c3_decode(v) -> np.ndarray:
    """Real 6-vector over (j, k, l, il, jl, kl) -> complex 3-vector."""
    v = np.asarray(v, dtype=float)
    return np.stack(
        [
            v[..., 0] + 1j * v[..., 1],
            v[..., 2] + 1j * v[..., 3],
            v[..., 4] - 1j * v[..., 5],
        ],
        axis=-1,
    )


def _c3_encode(w) -> np.ndarray:
    """Complex 3-vector -> real 6-vector over (j, k, l, il, jl, kl)."""
    w = np.asarray(w, dtype=complex)
    return np.stack(
        [
            w[..., 0].real,
            w[..., 0].imag,
            w[..., 1].real,
            w[..., 1].imag,
            w[..., 2].real,
            -w[..., 2].imag,
        ],
        axis=-1,
    )


def k_from_su3(u, tol: float = UNIT_TOL) -> np.ndarray:
    """Stabilizer-of-the-first-unit element realizing a special unitary u.

    u acts on the complex coordinates (v_j + i v_k, v_l + i v_il,
    v_jl - i v_kl) of the 6-dimensional complement.
    """
    u = np.asarray(u, dtype=complex)
    if u.shape != (3, 3):
        raise ValueError("expected a 3x3 complex matrix")
    if np.abs(u.conj().T @ u - np.eye(3)).max() > tol:
        raise ValueError("matrix is not unitary within tolerance")
    if abs(np.linalg.det(u) - 1.0) > tol:
        raise ValueError("matrix does not have unit determinant")
    m = np.eye(7)
    m[1:, 1:] = _c3_encode((u @ _c3_decode(np.eye(6)).T).T).T
    return m


def _rng(seed) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def _random_unit(rng, dim: int) -> np.ndarray:
    while True:
        v = rng.normal(size=dim)
        n = np.linalg.norm(v)
        if n > _RESAMPLE_TOL:
            return v / n


def _orthonormalize_against(rng, basis) -> np.ndarray:
    """Random unit vector orthogonal to the rows of ``basis`` (resamples
    until the projection onto the complement is comfortably nonzero)."""
    basis = np.asarray(basis, dtype=float)
    while True:
        v = rng.normal(size=basis.shape[1])
        v = v - basis.T @ (basis @ v)
        n = np.linalg.norm(v)
        if n > _RESAMPLE_TOL:
            return v / n


def random_g2(seed=0) -> np.ndarray:
    """Deterministic random group element from an admissible triple."""
    rng = _rng(seed)
    e1 = _random_unit(rng, 7)
    e2 = _orthonormalize_against(rng, e1[None, :])
    e12 = oc.im_mul(e1, e2)
    e3 = _orthonormalize_against(rng, np.stack([e1, e2, e12]))
    return from_triple(e1, e2, e3)


def random_su3(seed=0) -> np.ndarray:
    """Haar-ish random special unitary 3x3 matrix."""
    rng = _rng(seed)
    z = (rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    q = q * (d / np.abs(d))
    q[:, 2] *= np.conj(np.linalg.det(q))
    return q


def random_in_K(seed=0) -> np.ndarray:
    return k_from_su3(random_su3(seed))


def random_in_H(seed=0) -> np.ndarray:
    rng = _rng(seed)
    z = np.exp(1j * rng.uniform(0.0, 2.0 * np.pi))
    q = _random_unit(rng, 4)
    return h_from_params(z, q)


def matrix_to_json(m) -> dict:
    """Row-major JSON object {"rows": [[...], ...]} for a 7x7 matrix."""
    m = np.asarray(m, dtype=float)
    if m.shape != (7, 7):
        raise ValueError(f"expected a 7x7 matrix, got shape {m.shape}")
    return {"rows": [[float(x) for x in row] for row in m]}


def matrix_from_json(obj) -> np.ndarray:
    rows = obj["rows"]
    m = np.asarray(rows, dtype=float)
    if m.shape != (7, 7):
        raise ValueError(f"expected 7 rows of 7 entries, got shape {m.shape}")
    return m
