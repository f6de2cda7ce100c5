"""Bundle maps between the automorphism group, the sphere of imaginary
directions, oriented 2-planes, and special-unitary cosets.

Everything here is a finite identity check on explicit maps: column
reads, octonion products, and a one-parameter coset matching.  No
global topological statements are encoded.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import group as gr
from . import locus as lo
from . import octonion as oc

#: Frame vectors must be orthonormal to this tolerance.
FRAME_TOL = 1e-12
#: Special-unitary validation tolerance for coset representatives.
SPECIAL_UNITARY_TOL = 1e-12
#: Hermitian-orthonormality tolerance for decoded column pairs.
HERMITIAN_FRAME_TOL = 1e-10
#: Oriented-plane and coset equality tolerance.
MATCH_TOL = 1e-10
#: Coarse step (radians) for the coset stabilizer search.
COSET_GRID_STEP = 1e-3


@dataclass(frozen=True)
class OrientedPlane:
    """Ordered orthonormal frame (u, v) spanning an oriented plane of
    imaginary directions; frames differing by a rotation of the plane
    are regarded as equal."""

    u: np.ndarray
    v: np.ndarray

    def __post_init__(self):
        u = np.asarray(self.u, dtype=float)
        v = np.asarray(self.v, dtype=float)
        if u.shape != (7,) or v.shape != (7,):
            raise ValueError("frame vectors must have shape (7,)")
        res = max(
            abs(u @ u - 1.0),
            abs(v @ v - 1.0),
            abs(float(u @ v)),
        )
        if res > FRAME_TOL:
            raise ValueError(f"frame is not orthonormal: residual {res:.3e}")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)


def same_plane(p: OrientedPlane, q: OrientedPlane, tol: float = MATCH_TOL) -> bool:
    """Oriented-plane equality: the cross-Gram matrices of the two
    frames must both have determinant +1."""
    m = np.array([[p.u @ q.u, p.u @ q.v], [p.v @ q.u, p.v @ q.v]])
    d_pq = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    d_qp = m[0, 0] * m[1, 1] - m[1, 0] * m[0, 1]
    return bool(abs(d_pq - 1.0) < tol and abs(d_qp - 1.0) < tol)


def plane_map(g) -> OrientedPlane:
    """Oriented plane spanned by the images of the second and third
    units; constant on cosets of the plane stabilizer."""
    g = np.asarray(g, dtype=float)
    if not gr.is_g2(g):
        raise ValueError("input is not a group element")
    return OrientedPlane(g[:, 1].copy(), g[:, 2].copy())


def sphere_map(g) -> np.ndarray:
    """Image of the first unit: a point on the 6-sphere of imaginary
    directions."""
    g = np.asarray(g, dtype=float)
    if not gr.is_g2(g):
        raise ValueError("input is not a group element")
    return g[:, 0].copy()


def bundle_projection(p: OrientedPlane) -> np.ndarray:
    """Octonion product of the frame: sends an oriented plane to a unit
    imaginary direction, intertwining plane_map with sphere_map."""
    return oc.im_mul(p.u, p.v)


# ---------------------------------------------------------------------------
# special-unitary coset correspondence on the double locus
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SU3Coset:
    """Right coset of the one-parameter rotation stabilizer in the
    special unitary group, stored via one representative."""

    rep: np.ndarray

    def __post_init__(self):
        rep = np.asarray(self.rep, dtype=complex)
        if rep.shape != (3, 3):
            raise ValueError("representative must be a 3x3 complex matrix")
        res = max(
            float(np.abs(rep.conj().T @ rep - np.eye(3)).max()),
            abs(np.linalg.det(rep) - 1.0),
        )
        if res > SPECIAL_UNITARY_TOL:
            raise ValueError(f"representative is not special unitary: residual {res:.3e}")
        object.__setattr__(self, "rep", rep)


def coset_stabilizer(alpha: float) -> np.ndarray:
    """The special-unitary element rotating the first two coordinates by
    alpha and fixing the third: the stabilizer being quotiented by."""
    c, s = np.cos(alpha), np.sin(alpha)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]], dtype=complex)


def _coset_rep(a) -> np.ndarray:
    if isinstance(a, SU3Coset):
        return a.rep
    return SU3Coset(np.asarray(a, dtype=complex)).rep


def coset_distance(a, b) -> float:
    """Distance between cosets: minimal Frobenius distance between b and
    the stabilizer orbit of a, by coarse grid plus local refinement."""
    A = _coset_rep(a)
    B = _coset_rep(b)

    def dist2(alphas):
        c, s = np.cos(alphas), np.sin(alphas)
        col0 = A[:, 0, None] * c + A[:, 1, None] * s
        col1 = -A[:, 0, None] * s + A[:, 1, None] * c
        out = (np.abs(col0 - B[:, 0, None]) ** 2).sum(axis=0)
        out += (np.abs(col1 - B[:, 1, None]) ** 2).sum(axis=0)
        return out + float((np.abs(A[:, 2] - B[:, 2]) ** 2).sum())

    alphas = np.arange(0.0, 2.0 * np.pi, COSET_GRID_STEP)
    d2 = dist2(alphas)
    best = float(alphas[int(np.argmin(d2))])
    radius = COSET_GRID_STEP
    for _ in range(8):
        local = best + np.linspace(-radius, radius, 41)
        d2 = dist2(local)
        best = float(local[int(np.argmin(d2))])
        radius /= 20.0
    return float(np.sqrt(max(d2.min(), 0.0)))


def same_coset(a, b, tol: float = MATCH_TOL) -> bool:
    return coset_distance(a, b) < tol


def to_su3_coset(g) -> SU3Coset:
    """Special-unitary coset attached to a group element of the double
    locus (vanishing leading entry and first-row plane entries).

    Decodes the second and third columns into complex 3-vectors,
    checks Hermitian orthonormality, and completes them to the unique
    special unitary matrix with those first two columns.
    """
    g = np.asarray(g, dtype=float)
    if not gr.is_g2(g):
        raise ValueError("input is not a group element")
    if not (lo.plane_image_orthogonal(g) and lo.axis_image_orthogonal(g)):
        raise ValueError("input is outside the double locus")
    w2 = gr._c3_decode(g[1:, 1])
    w3 = gr._c3_decode(g[1:, 2])
    res = max(
        abs(float(np.vdot(w2, w2).real) - 1.0),
        abs(float(np.vdot(w3, w3).real) - 1.0),
        abs(np.vdot(w2, w3)),
    )
    if res > HERMITIAN_FRAME_TOL:
        raise ValueError(
            f"decoded columns are not Hermitian orthonormal: residual {res:.3e}"
        )
    w1 = np.conj(np.cross(w2, w3))
    return SU3Coset(np.column_stack([w2, w3, w1]))


def from_su3_coset(a) -> np.ndarray:
    """Group element of the double locus whose attached coset is a.

    Encodes the representative's first two columns as imaginary
    directions orthogonal to the first unit and builds the unique group
    element carrying them as its second and third columns with the first
    unit as its fourth column.
    """
    A = _coset_rep(a)
    c2 = np.concatenate([[0.0], gr._c3_encode(A[:, 0])])
    c3 = np.concatenate([[0.0], gr._c3_encode(A[:, 1])])
    e1 = np.zeros(7)
    e1[0] = 1.0
    g = gr.from_triple(oc.im_mul(c2, c3), c2, e1)
    if not (lo.plane_image_orthogonal(g) and lo.axis_image_orthogonal(g)):
        raise RuntimeError("constructed element left the double locus")
    return g
