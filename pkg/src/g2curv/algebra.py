"""The 14-dimensional Lie algebra of octonion derivations, realized as
skew 7x7 matrices with a fixed 14-coordinate parameterization, plus the
splitting induced by the stabilizer subgroups.

Coordinates: an :class:`AlgebraVector` holds (x, y, z) with x, y of
length 6 and z of length 2.  ``to_matrix`` places them in the skew
pattern; ``k_part``-type constraints are:

- the first-unit stabilizer subalgebra (8-dim): first row and column
  vanish, i.e. the three x-pairs and three y-pairs are antisymmetric
  (x2 = -x1, x4 = -x3, x6 = -x5, same for y);
- the plane stabilizer subalgebra (4-dim): additionally
  x3 = x4 = x5 = x6 = y3 = y4 = y5 = y6 = 0;
- the orthogonal complement of the 8-dim subalgebra (6-dim): pairwise
  symmetric coordinates (x2 = x1, ...) and z = 0.  Such matrices are
  determined by their top row and are identified with 6-tuples.

The bi-invariant pairing is ``inner0(X, Y) = -Tr(XY)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import octonion as oc

PATTERN_TOL = 1e-9


@dataclass(frozen=True)
class AlgebraVector:
    """Coordinates (x: 6, y: 6, z: 2) of a derivation-algebra element."""

    x: np.ndarray
    y: np.ndarray
    z: np.ndarray

    def __post_init__(self):
        for name, size in (("x", 6), ("y", 6), ("z", 2)):
            arr = np.array(getattr(self, name), dtype=float)
            if arr.shape != (size,):
                raise ValueError(f"{name} must have shape ({size},)")
            object.__setattr__(self, name, arr)

    def flat(self) -> np.ndarray:
        return np.concatenate([self.x, self.y, self.z])

    @classmethod
    def from_flat(cls, v) -> "AlgebraVector":
        v = np.asarray(v, dtype=float)
        if v.shape != (14,):
            raise ValueError("expected a flat vector of length 14")
        return cls(v[:6], v[6:12], v[12:])

    def __add__(self, other: "AlgebraVector") -> "AlgebraVector":
        return AlgebraVector(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "AlgebraVector") -> "AlgebraVector":
        return AlgebraVector(self.x - other.x, self.y - other.y, self.z - other.z)

    def __mul__(self, c: float) -> "AlgebraVector":
        c = float(c)
        return AlgebraVector(self.x * c, self.y * c, self.z * c)

    __rmul__ = __mul__

    def __neg__(self) -> "AlgebraVector":
        return self * -1.0


def zero_vector() -> AlgebraVector:
    return AlgebraVector(np.zeros(6), np.zeros(6), np.zeros(2))


def to_matrix(v: AlgebraVector) -> np.ndarray:
    """Skew 7x7 matrix carrying the coordinates in the fixed pattern."""
    x, y, z = v.x, v.y, v.z
    m = np.zeros((7, 7))
    m[0, 1] = x[0] + x[1]
    m[0, 2] = y[0] + y[1]
    m[0, 3] = x[2] + x[3]
    m[0, 4] = y[2] + y[3]
    m[0, 5] = x[4] + x[5]
    m[0, 6] = y[4] + y[5]
    m[1, 2] = z[0]
    m[1, 3] = -y[4]
    m[1, 4] = x[4]
    m[1, 5] = -y[2]
    m[1, 6] = x[2]
    m[2, 3] = x[5]
    m[2, 4] = y[5]
    m[2, 5] = -x[3]
    m[2, 6] = -y[3]
    m[3, 4] = z[1]
    m[3, 5] = y[0]
    m[3, 6] = -x[0]
    m[4, 5] = x[1]
    m[4, 6] = y[1]
    m[5, 6] = z[0] + z[1]
    return m - m.T


def from_matrix(m, tol: float = PATTERN_TOL) -> AlgebraVector:
    """Inverse of :func:`to_matrix`; rejects matrices off the pattern.

    The pattern residual is compared against ``tol * max(1, |m|_inf)`` so
    that commutators of large elements are not rejected for round-off.
    """
    m = np.asarray(m, dtype=float)
    if m.shape != (7, 7):
        raise ValueError(f"expected a 7x7 matrix, got shape {m.shape}")
    x = np.array([-m[3, 6], m[4, 5], m[1, 6], -m[2, 5], m[1, 4], m[2, 3]])
    y = np.array([m[3, 5], m[4, 6], -m[1, 5], -m[2, 6], -m[1, 3], m[2, 4]])
    z = np.array([m[1, 2], m[3, 4]])
    v = AlgebraVector(x, y, z)
    scale = max(1.0, float(np.abs(m).max()))
    residual = float(np.abs(m - to_matrix(v)).max())
    if residual > tol * scale:
        raise ValueError(
            f"matrix is off the algebra pattern: residual {residual:.3e} "
            f"exceeds {tol:.1e} * {scale:.3e}"
        )
    return v


def _pair_split(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Split length-6 coords into antisymmetric and symmetric pair parts."""
    anti = np.empty(6)
    sym = np.empty(6)
    for base in (0, 2, 4):
        u, w = a[base], a[base + 1]
        anti[base], anti[base + 1] = (u - w) / 2.0, (w - u) / 2.0
        sym[base] = sym[base + 1] = (u + w) / 2.0
    return anti, sym


def project_k(v: AlgebraVector) -> AlgebraVector:
    """Orthogonal projection onto the first-unit stabilizer subalgebra."""
    xa, _ = _pair_split(v.x)
    ya, _ = _pair_split(v.y)
    return AlgebraVector(xa, ya, v.z.copy())


def project_p(v: AlgebraVector) -> AlgebraVector:
    """Orthogonal projection onto the 6-dim complement of the stabilizer."""
    _, xs = _pair_split(v.x)
    _, ys = _pair_split(v.y)
    return AlgebraVector(xs, ys, np.zeros(2))


def inner0(v: AlgebraVector, w: AlgebraVector) -> float:
    """Bi-invariant pairing -Tr(VW) (= entrywise dot for skew matrices)."""
    return float((to_matrix(v) * to_matrix(w)).sum())


def norm0(v: AlgebraVector) -> float:
    return float(np.sqrt(max(inner0(v, v), 0.0)))


def bracket(v: AlgebraVector, w: AlgebraVector) -> AlgebraVector:
    """Matrix commutator pulled back to coordinates."""
    a = to_matrix(v)
    b = to_matrix(w)
    return from_matrix(a @ b - b @ a)


def ad_conj(g, v: AlgebraVector) -> AlgebraVector:
    """Conjugation g V g^-1 pulled back to coordinates.

    g must be orthogonal (the inverse is taken as the transpose).
    """
    g = np.asarray(g, dtype=float)
    return from_matrix(g @ to_matrix(v) @ g.T)


def p_vector(t) -> AlgebraVector:
    """6-tuple -> element of the 6-dim complement (pairwise-equal coords)."""
    t = np.asarray(t, dtype=float)
    if t.shape != (6,):
        raise ValueError("expected a 6-tuple")
    x = np.array([t[0], t[0], t[2], t[2], t[4], t[4]])
    y = np.array([t[1], t[1], t[3], t[3], t[5], t[5]])
    return AlgebraVector(x, y, np.zeros(2))


def p_embed(t) -> np.ndarray:
    """6-tuple -> skew matrix in the 6-dim complement (top row = 2t)."""
    return to_matrix(p_vector(t))


def p_coords(v: AlgebraVector) -> np.ndarray:
    """6-tuple of the complement part of v (projects first)."""
    pp = project_p(v)
    return np.array([pp.x[0], pp.y[0], pp.x[2], pp.y[2], pp.x[4], pp.y[4]])


def p_extract(m, tol: float = PATTERN_TOL) -> np.ndarray:
    """Inverse of :func:`p_embed`; rejects matrices off that subspace."""
    v = from_matrix(m, tol)
    scale = max(1.0, float(np.abs(np.asarray(m)).max()))
    residual = float(
        max(
            np.abs(v.x[1::2] - v.x[0::2]).max(),
            np.abs(v.y[1::2] - v.y[0::2]).max(),
            np.abs(v.z).max(),
        )
    )
    if residual > tol * scale:
        raise ValueError(
            f"matrix is not in the complement subspace: residual {residual:.3e}"
        )
    return p_coords(v)


def h_perp_k_embed(s) -> AlgebraVector:
    """4-tuple -> stabilizer-subalgebra element orthogonal to the plane
    stabilizer subalgebra (the four directions killed by the extra
    constraints, in the order fixed by the closed bracket form)."""
    s = np.asarray(s, dtype=float)
    if s.shape != (4,):
        raise ValueError("expected a 4-tuple")
    x = np.array([0.0, 0.0, -s[3], s[3], -s[1], s[1]])
    y = np.array([0.0, 0.0, -s[2], s[2], -s[0], s[0]])
    return AlgebraVector(x, y, np.zeros(2))


def h_perp_k_coords(v: AlgebraVector) -> np.ndarray:
    """Inverse reads of :func:`h_perp_k_embed` on its image."""
    return np.array([v.y[5], v.x[5], v.y[3], v.x[3]])


def _gram_schmidt(vectors) -> tuple[AlgebraVector, ...]:
    out: list[AlgebraVector] = []
    for v in vectors:
        w = v
        for u in out:
            w = w - inner0(w, u) * u
        n = norm0(w)
        if n < 1e-12:
            raise ValueError("degenerate basis input")
        out.append(w * (1.0 / n))
    return tuple(out)


def _pair_direction(kind: str, base: int, sign: float = -1.0) -> AlgebraVector:
    v = zero_vector()
    getattr(v, kind)[base] = 1.0
    getattr(v, kind)[base + 1] = sign
    return v


def _z_direction(idx: int) -> AlgebraVector:
    v = zero_vector()
    v.z[idx] = 1.0
    return v


def h_basis() -> tuple[AlgebraVector, ...]:
    """inner0-orthonormal basis of the plane stabilizer subalgebra (4)."""
    return _gram_schmidt(
        [
            _pair_direction("x", 0),
            _pair_direction("y", 0),
            _z_direction(0),
            _z_direction(1),
        ]
    )


def h_perp_k_basis() -> tuple[AlgebraVector, ...]:
    """inner0-orthonormal basis of the complement of the plane stabilizer
    inside the first-unit stabilizer subalgebra (4)."""
    return _gram_schmidt(
        [
            _pair_direction("x", 2),
            _pair_direction("y", 2),
            _pair_direction("x", 4),
            _pair_direction("y", 4),
        ]
    )


def k_basis() -> tuple[AlgebraVector, ...]:
    """inner0-orthonormal basis of the first-unit stabilizer subalgebra (8)."""
    return h_basis() + h_perp_k_basis()


def p_basis() -> tuple[AlgebraVector, ...]:
    """inner0-orthonormal basis of the 6-dim complement."""
    eye = np.eye(6)
    return _gram_schmidt([p_vector(eye[m]) for m in range(6)])


def g_basis() -> tuple[AlgebraVector, ...]:
    """inner0-orthonormal basis of the whole 14-dim algebra."""
    return k_basis() + p_basis()


def derivation_residual(v: AlgebraVector) -> float:
    """Worst failure of the product rule D(ab) = D(a)b + a D(b) over all
    64 octonion basis pairs, with D acting by the matrix of v on the
    imaginary part and by zero on the real part.

    The algebra pattern is exactly the space of such derivations, so this
    is an independent oracle for the matrix layout.
    """
    d8 = np.zeros((8, 8))
    d8[1:, 1:] = to_matrix(v)
    s = oc._STRUCT
    lhs = np.einsum("rs,pqs->pqr", d8, s)
    rhs = np.einsum("aqr,ap->pqr", s, d8) + np.einsum("pbr,bq->pqr", s, d8)
    return float(np.abs(lhs - rhs).max())
