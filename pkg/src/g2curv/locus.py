"""Zero-curvature locus of the doubled quotient metric.

Closed-form side: over the canonical coordinates (theta, phi) of the
double-coset reduction, planes with vanishing curvature certificate
exist exactly on the three boundary edges theta = 0, theta = pi/2,
phi = pi/2; the interior carries none.  Each edge has an explicit
witness plane, and each interior/edge-of-parameter case has an
obstruction quantity whose sign proves the dichotomy.

Solver side: restarted certificate minimization.  The scan compares the
two on a parameter grid, cell by cell.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

import numpy as np

from . import algebra as al
from . import canonical as ca
from . import metric as me

#: Entry tolerance for the group-side locus membership tests.
LOCUS_ENTRY_TOL = 1e-10
#: Default edge tolerance (radians) for the closed-form classification.
EDGE_TOL = 0.02

LABELS = ("ZeroPlane", "Positive")
REASONS = ("ThetaZero", "ThetaHalfPi", "PhiHalfPi", "Interior")

#: Explicit witness plane for each boundary edge, as (stabilizer-family
#: 4-tuple, perpendicular-family 6-tuple).  Each pair spans a plane with
#: vanishing certificate at every canonical point of its edge.
EDGE_WITNESSES = {
    "ThetaZero": ((0.0, 0.0, 1.0, 1.0), (0.0, 0.0, 1.0, 1.0, 0.0, 0.0)),
    "ThetaHalfPi": ((1.0, 0.0, 1.0, 0.0), (0.0, 0.0, 0.0, -1.0, 0.0, -1.0)),
    "PhiHalfPi": ((0.0, 0.0, 1.0, 1.0), (0.0, 0.0, 1.0, 1.0, 0.0, 0.0)),
}


@dataclass(frozen=True)
class LocusClassification:
    label: str
    reason: str
    witness_certificate: Optional[float]
    witness: Optional[me.PlanePair]


def witness_pair(reason: str) -> me.PlanePair:
    x, y = EDGE_WITNESSES[reason]
    return me.PlanePair(al.h_perp_k_embed(x), al.p_vector(y))


def _snap_to_edge(p: ca.CanonicalPoint, reason: str) -> ca.CanonicalPoint:
    theta, phi = float(p[0]), float(p[1])
    if reason == "ThetaZero":
        return ca.CanonicalPoint(0.0, phi)
    if reason == "ThetaHalfPi":
        return ca.CanonicalPoint(np.pi / 2, phi)
    return ca.CanonicalPoint(theta, np.pi / 2)


def classify_point(p, edge_tol: float = EDGE_TOL, t: float = me.DEFAULT_T) -> LocusClassification:
    """Closed-form classification of the canonical point p.

    Labels p "ZeroPlane" when it lies within edge_tol of one of the
    three zero-locus edges, attaching that edge's witness plane after
    verifying its certificate at the exact edge point; otherwise
    "Positive"/"Interior".
    """
    theta, phi = float(p[0]), float(p[1])
    half = np.pi / 2
    slack = 1e-9
    if not (-slack <= theta <= half + slack and -slack <= phi <= half + slack):
        raise ValueError(f"canonical point out of range: ({theta}, {phi})")
    if theta <= edge_tol:
        reason = "ThetaZero"
    elif abs(theta - half) <= edge_tol:
        reason = "ThetaHalfPi"
    elif abs(phi - half) <= edge_tol:
        reason = "PhiHalfPi"
    else:
        return LocusClassification("Positive", "Interior", None, None)
    pair = witness_pair(reason)
    g_edge = ca.canonical_matrix(_snap_to_edge(p, reason))
    total = me.certificate(g_edge, pair, t).total
    if total >= me.ZERO_PLANE_TOL:
        raise RuntimeError(
            f"edge witness failed to certify: {reason} at ({theta}, {phi}), total {total:.3e}"
        )
    return LocusClassification("ZeroPlane", reason, total, pair)


def obstruction_value(p, y5: float, y6: float) -> float:
    """Interior obstruction: strictly negative unless y5 = y6 = 0.

    Vanishing of this quantity is necessary for a zero-curvature plane
    at an interior canonical point, so its strict negativity on
    (y5, y6) != 0 rules the interior out.
    """
    theta, phi = float(p[0]), float(p[1])
    if not (0.0 < theta < np.pi / 2) or not (0.0 < phi < np.pi / 2):
        raise ValueError("interior obstruction requires both angles strictly inside (0, pi/2)")
    y5 = float(y5)
    y6 = float(y6)
    sp, cp = np.sin(phi), np.cos(phi)
    num = -(4.0 * (y5 * y5 * sp * sp + y6 * y6) + 4.0 * y5 * y5 * cp * cp)
    return num / (cp * np.cos(theta) * np.sin(theta))


def phi_zero_obstruction(theta: float, y) -> float:
    """Obstruction along phi = 0: zero iff the last four perpendicular
    coordinates vanish, negative otherwise."""
    theta = float(theta)
    if not (0.0 < theta < np.pi / 2):
        raise ValueError("obstruction requires theta strictly inside (0, pi/2)")
    y = np.asarray(y, dtype=float)
    tail = y[2:6]
    return -4.0 * np.cos(theta) * float(tail @ tail) / np.sin(theta)


# ---------------------------------------------------------------------------
# group-side description of the locus
# ---------------------------------------------------------------------------


def plane_image_orthogonal(g, tol: float = LOCUS_ENTRY_TOL) -> bool:
    """True when the images of the second and third units have no
    component along the first unit (first row vanishes at columns 2, 3)."""
    g = np.asarray(g, dtype=float)
    return bool(abs(g[0, 1]) < tol and abs(g[0, 2]) < tol)


def axis_image_orthogonal(g, tol: float = LOCUS_ENTRY_TOL) -> bool:
    """True when the image of the first unit is orthogonal to the first
    unit (vanishing leading entry)."""
    g = np.asarray(g, dtype=float)
    return bool(abs(g[0, 0]) < tol)


def coset_zero_plane_condition(g, tol: float = LOCUS_ENTRY_TOL) -> bool:
    """Whether the orbit point of g carries a zero-curvature plane:
    either locus piece suffices."""
    return plane_image_orthogonal(g, tol) or axis_image_orthogonal(g, tol)


# ---------------------------------------------------------------------------
# grid scan: solver vs closed form
# ---------------------------------------------------------------------------


class ScanRow(NamedTuple):
    theta: float
    phi: float
    min_certificate: float
    solver_label: str
    closed_form_label: str
    agree: bool


def default_edge_tol(grid_n: int) -> float:
    """Edge tolerance for a grid_n-point axis: EDGE_TOL, capped at half
    the grid spacing so the first interior row never classifies as edge."""
    return min(EDGE_TOL, 0.5 * (np.pi / 2) / (grid_n - 1))


def scan(
    grid_n: int,
    t: float = me.DEFAULT_T,
    restarts: int = 200,
    seed: int = 0,
    edge_tol: Optional[float] = None,
) -> list:
    """Full dichotomy check on a grid_n x grid_n canonical-coordinate grid.

    Each cell minimizes the certificate (seeded per (seed, i, j); edge
    cells additionally start from their closed-form witness) and compares
    the threshold label with the closed-form classification.

    When edge_tol is None it defaults to min(EDGE_TOL, half the grid
    spacing), so fine grids never absorb their first interior row into
    the edge classification.
    """
    if grid_n < 2:
        raise ValueError("grid_n must be at least 2")
    if edge_tol is None:
        edge_tol = default_edge_tol(grid_n)
    thetas = np.linspace(0.0, np.pi / 2, grid_n)
    phis = np.linspace(0.0, np.pi / 2, grid_n)
    rows = []
    for i, theta in enumerate(thetas):
        for j, phi in enumerate(phis):
            p = ca.CanonicalPoint(float(theta), float(phi))
            cls = classify_point(p, edge_tol, t)
            extra = []
            if cls.label == "ZeroPlane":
                x, y = EDGE_WITNESSES[cls.reason]
                extra.append(me.witness_start(x, y, t))
            g = ca.canonical_matrix(p)
            value, _ = me.min_certificate(
                g, t=t, restarts=restarts, seed=(seed, i, j), extra_starts=extra
            )
            solver_label = "ZeroPlane" if value < me.ZERO_PLANE_TOL else "Positive"
            rows.append(
                ScanRow(
                    float(theta),
                    float(phi),
                    float(value),
                    solver_label,
                    cls.label,
                    solver_label == cls.label,
                )
            )
    return rows


def scan_to_csv(rows: Sequence[ScanRow]) -> str:
    out = ["theta,phi,min_certificate,solver_label,closed_form_label,agree"]
    for r in rows:
        out.append(
            "%.17g,%.17g,%.17g,%s,%s,%s"
            % (r.theta, r.phi, r.min_certificate, r.solver_label, r.closed_form_label,
               "true" if r.agree else "false")
        )
    return "\n".join(out) + "\n"
