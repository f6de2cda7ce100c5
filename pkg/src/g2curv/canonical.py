"""Two-angle canonical forms for the double-coset orbit space and the
reduction of a group element onto its canonical representative.

Every element g decomposes as h^-1 C(theta, phi) k, where C is the
two-angle representative, h lies in the extended plane stabilizer, k in
the first-unit stabilizer, and both angles sit in [0, pi/2].  The three invariants (|g_11|, the length of the next two
first-column entries, the length of the last four) determine the orbit,
with theta = arccos |g_11| and cos(phi) sin(theta) equal to the middle
invariant.  Convention: theta = 0 forces phi = 0.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from . import group as gr
from . import octonion as oc

#: Residual bound the reduction must meet against the canonical matrix.
REDUCE_TOL = 1e-9
#: Branch guard band: decision quantities inside [lo, hi] run both branches.
_GUARD_LO = 1e-12
_GUARD_HI = 1e-9


class CanonicalPoint(NamedTuple):
    theta: float
    phi: float


class OrbitInvariants(NamedTuple):
    a: float
    b: float
    c: float


def canonical_matrix(p: CanonicalPoint | tuple) -> np.ndarray:
    """Two-angle canonical representative of the two-sided orbit."""
    theta, phi = float(p[0]), float(p[1])
    ct, st = np.cos(theta), np.sin(theta)
    cp, sp = np.cos(phi), np.sin(phi)
    return np.array(
        [
            [ct, st, 0.0, 0.0, 0.0, 0.0, 0.0],
            [-cp * st, cp * ct, 0.0, -sp, 0.0, 0.0, 0.0],
            [0.0, 0.0, cp, 0.0, -sp * ct, -sp * st, 0.0],
            [-sp * st, sp * ct, 0.0, cp, 0.0, 0.0, 0.0],
            [0.0, 0.0, sp, 0.0, cp * ct, cp * st, 0.0],
            [0.0, 0.0, 0.0, 0.0, -st, ct, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0],
        ]
    )


def orbit_invariants(g) -> OrbitInvariants:
    """The three first-column lengths classifying the two-sided orbit."""
    g = np.asarray(g, dtype=float)
    return OrbitInvariants(
        abs(float(g[0, 0])),
        float(np.hypot(g[1, 0], g[2, 0])),
        float(np.linalg.norm(g[3:, 0])),
    )


def theta_phi(g) -> CanonicalPoint:
    """Canonical angles of the orbit through g."""
    inv = orbit_invariants(g)
    theta = float(np.arccos(np.clip(inv.a, 0.0, 1.0)))
    st = np.sin(theta)
    if st < 1e-9:
        phi = 0.0
    else:
        phi = float(np.arccos(np.clip(inv.b / st, 0.0, 1.0)))
    return CanonicalPoint(theta, phi)


def _rotation_param(v1: float, v2: float) -> complex:
    """z whose double-angle rotation block sends (v1, v2) to (-r, 0)."""
    half = (np.pi - np.arctan2(v2, v1)) / 2.0
    return complex(np.cos(half), np.sin(half))


def _unitary_with_first_column(u: np.ndarray) -> np.ndarray:
    """Special unitary 3x3 whose first column is the given unit vector."""
    q, _ = np.linalg.qr(np.column_stack([u, np.eye(3)]))
    q = q[:, :3]
    q[:, 0] = u
    q[:, 1] -= u * (u.conj() @ q[:, 1])
    q[:, 1] /= np.linalg.norm(q[:, 1])
    q[:, 2] /= np.linalg.det(q)
    return q


class _Candidate(NamedTuple):
    h: np.ndarray
    k_inv: np.ndarray
    residual: float


def _branches(value: float) -> tuple[bool, ...]:
    """Branch choices for a nonnegative decision quantity.  True selects
    the degenerate branch; inside the guard band both are tried."""
    if value < _GUARD_LO:
        return (True,)
    if value <= _GUARD_HI:
        return (False, True)
    return (False,)


def _reduce_candidates(g0: np.ndarray, target: np.ndarray, sin_phi: float):
    """Depth-first enumeration of guarded reduction paths.

    Invariant along every path: the working matrix m always equals
    h_acc @ g0 @ k_inv_acc.
    """
    e1 = np.eye(7)[0]
    e4 = np.array([1.0, 0.0, 0.0, 0.0])

    def finish(m, h, k_inv):
        yield _Candidate(h, k_inv, float(np.abs(m - target).max()))

    def fix_column4(m, h, k_inv):
        # left stabilizer action sending the fourth-column block to e4;
        # needed exactly when the second angle vanishes
        v = m[3:, 3].copy()
        for degenerate in _branches(float(np.linalg.norm(v - e4))):
            if degenerate:
                yield from finish(m, h, k_inv)
            else:
                q = oc.quat_conj(v / np.linalg.norm(v))
                h6 = gr.h_from_params(1.0, q)
                yield from finish(h6 @ m, h6 @ h, k_inv)

    def after_row2(m, h, k_inv):
        for degenerate in _branches(sin_phi):
            if degenerate:
                yield from fix_column4(m, h, k_inv)
            else:
                yield from finish(m, h, k_inv)

    def fix_row2(m, h, k_inv):
        # right action by the double stabilizer rotating the trailing
        # second-row block onto (-r, 0, 0, 0)
        w = m[1, 3:].copy()
        r = float(np.linalg.norm(w))
        for skip in _branches(r):
            if skip:
                yield from after_row2(m, h, k_inv)
            else:
                k5 = gr.h_from_params(1.0, -w / r)
                yield from after_row2(m @ k5, h, k_inv @ k5)

    def fix_row1(m, h, k_inv):
        # right action by the first-unit stabilizer rotating the trailing
        # first-row block onto (s, 0, ..., 0)
        tail = m[0, 1:].copy()
        s = float(np.linalg.norm(tail))
        for skip in _branches(s):
            if skip:
                yield from fix_row2(m, h, k_inv)
            else:
                u = gr._c3_decode(tail)
                k4 = gr.k_from_su3(_unitary_with_first_column(u / np.linalg.norm(u)))
                yield from fix_row2(m @ k4, h, k_inv @ k4)

    def fix_column1_tail(m, h, k_inv):
        # left action rotating the trailing first-column block onto
        # (-r, 0, 0, 0)
        b = m[3:, 0].copy()
        r = float(np.linalg.norm(b))
        for skip in _branches(r):
            if skip:
                yield from fix_row1(m, h, k_inv)
            else:
                h3 = gr.h_from_params(1.0, -oc.quat_conj(b) / r)
                yield from fix_row1(h3 @ m, h3 @ h, k_inv)

    def fix_column1_mid(m, h, k_inv):
        # left plane rotation sending (m_21, m_31) onto (-r, 0)
        r = float(np.hypot(m[1, 0], m[2, 0]))
        for skip in _branches(r):
            if skip:
                yield from fix_column1_tail(m, h, k_inv)
            else:
                h2 = gr.h_from_params(
                    _rotation_param(m[1, 0], m[2, 0]), [1.0, 0.0, 0.0, 0.0]
                )
                yield from fix_column1_tail(h2 @ m, h2 @ h, k_inv)

    def stabilizer_shortcut(m, h, k_inv):
        # an element fixing the first unit reduces to the identity with
        # k equal to the element itself
        for shortcut in _branches(float(np.linalg.norm(m[:, 0] - e1))):
            if shortcut:
                yield from finish(m @ m.T, h, k_inv @ m.T)
            else:
                yield from fix_column1_mid(m, h, k_inv)

    def sign_step(m, h, k_inv):
        if m[0, 0] < -_GUARD_HI:
            choices: tuple[bool, ...] = (False,)
        elif m[0, 0] < _GUARD_HI:
            choices = (True, False)
        else:
            choices = (True,)
        for keep in choices:
            if keep:
                yield from stabilizer_shortcut(m, h, k_inv)
            else:
                yield from stabilizer_shortcut(gr.PLANE_REFLECTION @ m, gr.PLANE_REFLECTION @ h, k_inv)

    yield from sign_step(g0, np.eye(7), np.eye(7))


def reduce(g, tol: float = REDUCE_TOL) -> tuple[np.ndarray, np.ndarray, CanonicalPoint]:
    """Factor g as h^-1 F(p) k, i.e. find (h, k, p) with h g k^-1 = F(p).

    h lands in the extended plane stabilizer, k in the first-unit
    stabilizer, and p holds the canonical angles of g.  Raises
    RuntimeError if no guarded reduction path meets ``tol`` together with
    the membership requirements; that signals a bug, not a property of
    the input.
    """
    g = np.asarray(g, dtype=float)
    rep = gr.is_g2(g)
    if not rep:
        raise ValueError(
            f"input is not a group element: max residual {rep.max_residual:.3e}"
        )
    p = theta_phi(g)
    target = canonical_matrix(p)
    best: _Candidate | None = None
    for cand in _reduce_candidates(g, target, float(np.sin(p.phi))):
        if best is not None and cand.residual >= best.residual:
            continue
        if not (gr.in_Hprime(cand.h) and gr.in_K(cand.k_inv.T)):
            continue
        best = cand
    if best is None or best.residual > tol:
        got = "no admissible path" if best is None else f"{best.residual:.3e}"
        raise RuntimeError(f"reduction failed: best residual {got} exceeds {tol:.1e}")
    return best.h, best.k_inv.T, p
