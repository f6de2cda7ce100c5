"""Command-line interface: verification suites, orbit reduction, locus
scans, sampling, and map checks.

All output is deterministic given the flags and seed; floats serialize
with 17 significant digits so reruns are byte-identical.
"""

from __future__ import annotations

import json
import sys

import click
import numpy as np

from . import algebra as al
from . import canonical as ca
from . import group as gr
from . import locus as lo
from . import metric as me
from . import octonion as oc
from . import topology as tp

#: Largest group-membership residual accepted for matrix inputs.
INPUT_G2_TOL = 1e-8

_SUITE_TOLS = {
    "octonion-table": 1e-12,
    "group-construction": 1e-10,
    "projection": 1e-12,
    "closed-forms": 1e-12,
    "map-identities": 1e-10,
}


def _format_float(x: float) -> str:
    return "%.17g" % float(x)


def _to_json(value) -> str:
    """Minimal JSON emitter with fixed float formatting."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return _format_float(value)
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, dict):
        items = ",".join(f"{json.dumps(str(k))}:{_to_json(v)}" for k, v in value.items())
        return "{" + items + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(_to_json(v) for v in value) + "]"
    raise TypeError(f"cannot serialize {type(value)!r}")


def _emit(text: str, out: str | None) -> None:
    if out is None:
        click.echo(text, nl=False)
        return
    try:
        with open(out, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise click.ClickException(f"cannot write {out}: {exc}")


def _read_matrix(path: str) -> np.ndarray:
    try:
        with click.open_file(path, "r") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise click.ClickException(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise click.ClickException(f"invalid JSON in {path}: {exc}")
    try:
        g = gr.matrix_from_json(obj)
    except (KeyError, TypeError, ValueError) as exc:
        raise click.ClickException(f"invalid matrix object in {path}: {exc}")
    rep = gr.is_g2(g)
    if rep.max_residual > INPUT_G2_TOL:
        raise click.ClickException(
            "input is not a group element: residuals "
            f"orthogonality {rep.orthogonality:.3e}, "
            f"automorphism {rep.automorphism:.3e}, "
            f"column structure {rep.column_structure:.3e}"
        )
    return g


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------


def _suite_octonion_table(inject_fault: bool) -> float:
    # reference structure tensor: a fresh copy, corrupted under the fault
    # flag so the library table is never touched
    ref = oc._build_struct()
    if inject_fault:
        ref[1, 2, 3] = -ref[1, 2, 3]
    basis = np.eye(8)
    worst = 0.0
    for p in range(8):
        for q in range(8):
            expect = ref[p, q]
            got = oc.mul(basis[p], basis[q])
            worst = max(worst, float(np.abs(got - expect).max()))
    rng = np.random.default_rng(1001)
    a = rng.normal(size=(200, 8))
    b = rng.normal(size=(200, 8))
    worst = max(worst, float(np.abs(oc.mul(a, b) - oc.mul_cd(a, b)).max()))
    scale = oc.norm(a) * oc.norm(b)
    worst = max(worst, float(np.abs(oc.norm(oc.mul(a, b)) - scale).max() / scale.max()))
    assoc = oc.associator(oc.unit("i"), oc.unit("j"), oc.unit("l"))
    expect = 2.0 * oc.unit("kl")
    worst = max(worst, float(np.abs(assoc - expect).max()))
    return worst


def _suite_group_construction() -> float:
    rng = np.random.default_rng(1002)
    worst = 0.0
    for _ in range(50):
        g = gr.random_g2(rng)
        worst = max(worst, gr.is_g2(g).max_residual)
        worst = max(worst, gr.is_g2(g.T).max_residual)
    for _ in range(20):
        h = gr.random_in_H(rng)
        worst = max(worst, gr.is_g2(h).max_residual)
        worst = max(worst, 0.0 if gr.in_H(h) else 1.0)
        worst = max(worst, 0.0 if gr.in_K(h) else 1.0)
        k = gr.random_in_K(rng)
        worst = max(worst, gr.is_g2(k).max_residual)
        worst = max(worst, 0.0 if gr.in_K(k) else 1.0)
    g1, g2 = gr.random_g2(rng), gr.random_g2(rng)
    worst = max(worst, gr.is_g2(g1 @ g2).max_residual)
    units = np.eye(7)
    ident = gr.from_triple(units[0], units[1], units[3])
    worst = max(worst, float(np.abs(ident - np.eye(7)).max()))
    return worst


def _suite_projection() -> float:
    rng = np.random.default_rng(1003)
    worst = 0.0
    for _ in range(100):
        v = al.AlgebraVector.from_flat(rng.normal(size=14))
        pk, pp = al.project_k(v), al.project_p(v)
        worst = max(worst, float(np.abs((pk + pp).flat() - v.flat()).max()))
        worst = max(worst, float(np.abs(al.project_k(pk).flat() - pk.flat()).max()))
        worst = max(worst, float(np.abs(al.project_p(pp).flat() - pp.flat()).max()))
        worst = max(worst, abs(al.inner0(pk, pp)))
        worst = max(worst, al.derivation_residual(v))
        w = al.AlgebraVector.from_flat(rng.normal(size=14))
        wk = al.project_k(w)
        worst = max(
            worst,
            float(np.abs(al.project_p(al.bracket(pk, wk)).flat()).max()),
        )
    for basis in (al.h_basis(), al.k_basis(), al.p_basis(), al.g_basis()):
        gram = np.array([[al.inner0(u, v) for v in basis] for u in basis])
        worst = max(worst, float(np.abs(gram - np.eye(len(basis))).max()))
    return worst


def _suite_closed_forms() -> float:
    rng = np.random.default_rng(1004)
    worst = 0.0
    for _ in range(50):
        x = rng.normal(size=4)
        y = rng.normal(size=6)
        worst = max(
            worst,
            float(np.abs(me.bracket_form(x, y)
                         - me.BRACKET_FORM_SCALE * me.bracket_form_direct(x, y)).max()),
        )
        theta = rng.uniform(0.05, np.pi / 2 - 0.05)
        phi = rng.uniform(0.05, np.pi / 2 - 0.05)
        worst = max(
            worst,
            float(np.abs(me.ad_form_stab(theta, phi, x)
                         - me.AD_FORM_SCALE * me.ad_form_stab_direct(theta, phi, x)).max()),
        )
        yp = rng.normal(size=6)
        yp[0] = yp[1] = 0.0
        worst = max(
            worst,
            float(np.abs(me.ad_form_perp(theta, phi, yp)
                         - me.AD_FORM_SCALE * me.ad_form_perp_direct(theta, phi, yp)).max()),
        )
    return worst


def _suite_map_identities() -> float:
    rng = np.random.default_rng(1005)
    worst = 0.0
    for _ in range(100):
        g = gr.random_g2(rng)
        worst = max(
            worst,
            float(np.abs(tp.bundle_projection(tp.plane_map(g)) - tp.sphere_map(g)).max()),
        )
        h = gr.random_in_H(rng)
        same = tp.same_plane(tp.plane_map(g), tp.plane_map(g @ h))
        worst = max(worst, 0.0 if same else 1.0)
    for _ in range(5):
        A = gr.random_su3(rng)
        g = tp.from_su3_coset(A)
        worst = max(worst, tp.coset_distance(tp.to_su3_coset(g), A))
        worst = max(worst, tp.coset_distance(tp.to_su3_coset(g @ gr.random_in_H(rng)), A))
    return worst


_SUITES = (
    ("octonion-table", _suite_octonion_table),
    ("group-construction", _suite_group_construction),
    ("projection", _suite_projection),
    ("closed-forms", _suite_closed_forms),
    ("map-identities", _suite_map_identities),
)


@click.group()
def main():
    """Numerical laboratory for the deformed-metric curvature study."""


@main.command()
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the JSON report here instead of stdout.")
@click.option("--inject-table-fault", is_flag=True, hidden=True)
def verify(out, inject_table_fault):
    """Run every module's invariant suite and report max residuals."""
    suites = []
    first_fail = None
    for name, fn in _SUITES:
        residual = fn(inject_table_fault) if name == "octonion-table" else fn()
        ok = residual < _SUITE_TOLS[name]
        if not ok and first_fail is None:
            first_fail = name
        suites.append({"name": name, "max_residual": residual, "pass": ok})
    report = {"suites": suites, "pass": first_fail is None}
    _emit(_to_json(report) + "\n", out)
    if first_fail is not None:
        click.echo(f"verification failed: suite '{first_fail}'", err=True)
        sys.exit(1)


@main.command()
@click.option("--grid", type=click.IntRange(min=2), default=101, show_default=True, help="Grid points per angle.")
@click.option("--t", type=click.FloatRange(min=0, min_open=True), default=1.0, show_default=True, help="Deformation parameter.")
@click.option("--restarts", type=click.IntRange(min=1), default=200, show_default=True, help="Random starts per cell.")
@click.option("--seed", type=click.IntRange(min=0), default=0, show_default=True, help="Base seed; each cell derives its own.")
@click.option("--edge-tol", type=click.FloatRange(min=0), default=None, help="Closed-form edge tolerance (radians); defaults to min(0.02, half the grid spacing).")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the CSV table here instead of stdout.")
def scan(grid, t, restarts, seed, edge_tol, out):
    """Scan the canonical-coordinate square and compare solver labels
    with the closed-form classification (CSV)."""
    rows = lo.scan(grid, t=t, restarts=restarts, seed=seed, edge_tol=edge_tol)
    _emit(lo.scan_to_csv(rows), out)


@main.command()
@click.option("--in", "in_path", required=True, type=click.Path(exists=True, dir_okay=False, allow_dash=True), help="Matrix JSON input.")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the JSON result here instead of stdout.")
def reduce(in_path, out):
    """Factor an input group element through its canonical representative."""
    g = _read_matrix(in_path)
    try:
        h, k, p = ca.reduce(g)
    except (ValueError, RuntimeError) as exc:
        raise click.ClickException(str(exc))
    residual = float(np.abs(h @ g @ k.T - ca.canonical_matrix(p)).max())
    result = {
        "theta": p.theta,
        "phi": p.phi,
        "h": gr.matrix_to_json(h),
        "k": gr.matrix_to_json(k),
        "residual": residual,
    }
    _emit(_to_json(result) + "\n", out)


@main.command()
@click.option("--count", type=click.IntRange(min=1), default=5, show_default=True, help="Number of elements.")
@click.option("--seed", type=click.IntRange(min=0), default=0, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the JSON array here instead of stdout.")
def sample(count, seed, out):
    """Emit seeded random group elements as a JSON array."""
    rng = np.random.default_rng(seed)
    mats = [gr.matrix_to_json(gr.random_g2(rng)) for _ in range(count)]
    _emit(_to_json(mats) + "\n", out)


@main.command("locus-check")
@click.option("--in", "in_path", required=True, type=click.Path(exists=True, dir_okay=False, allow_dash=True), help="Matrix JSON input.")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the JSON result here instead of stdout.")
def locus_check(in_path, out):
    """Evaluate the entry conditions for a zero-curvature plane at an
    input element and cross-validate against the orbit classification."""
    g = _read_matrix(in_path)
    z1 = lo.plane_image_orthogonal(g)
    z2 = lo.axis_image_orthogonal(g)
    zero_plane = z1 or z2
    p = ca.theta_phi(g.T)
    cls = lo.classify_point(p, edge_tol=1e-8)
    consistent = (cls.label == "ZeroPlane") == zero_plane
    result = {
        "in_Z1": z1,
        "in_Z2": z2,
        "zero_plane": zero_plane,
        "consistent": consistent,
    }
    _emit(_to_json(result) + "\n", out)


@main.command("maps-check")
@click.option("--seed", type=click.IntRange(min=0), default=0, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the JSON report here instead of stdout.")
def maps_check(seed, out):
    """Residual report for the bundle and coset map identities."""
    rng = np.random.default_rng(seed)
    square = 0.0
    plane_ok = True
    for _ in range(200):
        g = gr.random_g2(rng)
        square = max(
            square,
            float(np.abs(tp.bundle_projection(tp.plane_map(g)) - tp.sphere_map(g)).max()),
        )
        plane_ok = plane_ok and tp.same_plane(tp.plane_map(g), tp.plane_map(g @ gr.random_in_H(rng)))
    round_trip = 0.0
    orbit = 0.0
    for _ in range(10):
        A = gr.random_su3(rng)
        g = tp.from_su3_coset(A)
        round_trip = max(round_trip, tp.coset_distance(tp.to_su3_coset(g), A))
        orbit = max(orbit, tp.coset_distance(tp.to_su3_coset(g @ gr.random_in_H(rng)), A))
    report = {
        "commuting_square_max": square,
        "plane_well_defined": plane_ok,
        "coset_round_trip_max": round_trip,
        "coset_orbit_max": orbit,
        "pass": bool(square < 1e-12 and plane_ok and round_trip < 1e-10 and orbit < 1e-10),
    }
    _emit(_to_json(report) + "\n", out)
    if not report["pass"]:
        click.echo("map identities failed", err=True)
        sys.exit(1)


if __name__ == "__main__":
    main()
