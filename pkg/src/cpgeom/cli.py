"""Command-line interface.

Exit codes: 0 success, 1 check failure, 2 usage or parse error,
3 dimension mismatch, 4 unwritable output.  The default predicate
tolerance can be overridden per call with ``--tol`` or globally with the
``CPGEOM_TOL`` environment variable.
"""

from __future__ import annotations

import os
import sys

import click
import numpy as np

from . import checks, entanglement, figures, orbits, sampling, serialize
from .charts import gnomonic_project, stereographic_project
from .errors import CPGeomError, DimensionMismatch, OutOfRange
from .serialize import ParseError
from .states import fs_distance, normalize_and_gauge, to_octant_torus

EXIT_CHECK_FAILURE = 1
EXIT_USAGE = 2
EXIT_DIMENSION = 3
EXIT_IO = 4


def _default_tol() -> float:
    return float(os.environ.get("CPGEOM_TOL", entanglement.PREDICATE_TOL))


def _parse_state(text: str):
    try:
        return normalize_and_gauge(serialize.parse_state(text))
    except (ParseError, CPGeomError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)


def _emit(fmt: str, name: str, payload: dict, out):
    if fmt == "json":
        text = serialize.json_payload(**payload)
    else:
        rows = [(key, value) for key, value in payload.items()]
        text = "\n".join(serialize.csv_lines(name, {}, ("key", "value"), rows))
    if out:
        try:
            with open(out, "w") as fh:
                fh.write(text + "\n")
        except OSError as exc:
            click.echo(f"error: cannot write {out}: {exc}", err=True)
            sys.exit(EXIT_IO)
    else:
        click.echo(text)


format_option = click.option(
    "--format", "fmt", type=click.Choice(["json", "csv"]), default="json",
    show_default=True, help="Output format.",
)
out_option = click.option("--out", type=str, default=None, help="Write output to this path.")


@click.group()
def main():
    """Octant-torus geometry of complex projective space."""


@main.command()
@click.argument("state_a")
@click.argument("state_b")
@format_option
@out_option
def distance(state_a, state_b, fmt, out):
    """Fubini-Study distance between two comma-separated amplitude lists."""
    a = _parse_state(state_a)
    b = _parse_state(state_b)
    try:
        d = fs_distance(a, b)
    except DimensionMismatch as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_DIMENSION)
    _emit(fmt, "distance", {"distance": d}, out)


@main.command()
@click.argument("state")
@format_option
@out_option
@click.option("--tol", type=float, default=None, help="Predicate tolerance override.")
def schmidt(state, fmt, out, tol):
    """Schmidt analysis of a two-qubit state."""
    s = _parse_state(state)
    tol = tol if tol is not None else _default_tol()
    try:
        sd = entanglement.schmidt_decompose(s)
        nearest, dist, unique = entanglement.closest_separable(s)
        payload = {
            "sigma": sd.schmidt_angle,
            "coefficients": list(sd.coefficients),
            "separable": entanglement.is_separable(s, tol),
            "max_entangled": entanglement.is_max_entangled(s, tol),
            "closest_separable": [serialize.format_complex(z) for z in nearest.amplitudes],
            "distance": dist,
            "unique": unique,
        }
    except DimensionMismatch as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_DIMENSION)
    if fmt == "csv":
        payload = {
            k: (";".join(v) if isinstance(v, list) and v and isinstance(v[0], str)
                else " ".join(serialize.fmt(x) for x in v) if isinstance(v, list) else v)
            for k, v in payload.items()
        }
    _emit(fmt, "schmidt", payload, out)


@main.command()
@click.argument("state")
@click.option("--chart", type=click.Choice(["gnomonic", "stereographic"]), default="gnomonic",
              show_default=True)
@click.option("--pole-corner", type=int, default=0, show_default=True,
              help="Corner for the stereographic chart.")
@format_option
@out_option
def project(state, chart, pole_corner, fmt, out):
    """Octant-torus coordinates and flat-chart image of a state."""
    s = _parse_state(state)
    c = to_octant_torus(s)
    try:
        if chart == "gnomonic":
            point = gnomonic_project(c.radii)
        else:
            point = stereographic_project(c.radii, pole_corner)
    except (CPGeomError, IndexError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_DIMENSION)
    payload = {
        "radii": list(c.radii),
        "phases": [p for p in c.phases],
        "chart": chart,
        "coords": list(point.coords),
    }
    if fmt == "csv":
        payload = {
            k: " ".join(serialize.fmt(x) for x in v) if isinstance(v, list) else v
            for k, v in payload.items()
        }
    _emit(fmt, "project", payload, out)


@main.command("orbit-volume")
@click.option("--sigma", type=float, required=True, help="Schmidt angle in [0, pi/4].")
@format_option
@out_option
def orbit_volume_cmd(sigma, fmt, out):
    """Volume of the constant-Schmidt-angle orbit."""
    try:
        payload = {
            "sigma": sigma,
            "volume": orbits.orbit_volume(sigma),
            "pdf": orbits.schmidt_pdf(sigma),
            "cdf": orbits.schmidt_cdf(sigma),
        }
    except OutOfRange as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    _emit(fmt, "orbit-volume", payload, out)


@main.command()
@click.option("--sigma", type=float, required=True, help="Schmidt angle in (0, pi/4).")
@format_option
@out_option
def curvature(sigma, fmt, out):
    """Trace of the extrinsic curvature of the constant-angle orbit."""
    try:
        payload = {"sigma": sigma, "curvature": orbits.extrinsic_curvature_trace(sigma)}
    except OutOfRange as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    _emit(fmt, "curvature", payload, out)


@main.command()
@click.option("--count", type=int, required=True, help="Number of Haar samples.")
@click.option("--seed", type=int, default=0, show_default=True)
@out_option
def sample(count, seed, out):
    """Haar-random Schmidt angles and Bloch radii as CSV."""
    if count < 1:
        click.echo("error: --count must be at least 1", err=True)
        sys.exit(EXIT_USAGE)
    batch = sampling.sample_batch(seed, count)
    rows = [(i, batch.sigmas[i], batch.bloch_radii[i]) for i in range(count)]
    footer = {}
    if count >= 1000:
        footer["ks_sigma"] = sampling.ks_statistic(
            batch.sigmas, lambda s: 1 - np.cos(2 * s) ** 3
        )
        footer["ks_bloch"] = sampling.ks_statistic(batch.bloch_radii, lambda r: r**3)
    lines = serialize.csv_lines(
        "sample", {"seed": seed, "count": count},
        ("index", "sigma", "bloch_radius"), rows, footer,
    )
    text = "\n".join(lines) + "\n"
    if out:
        try:
            with open(out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            click.echo(f"error: cannot write {out}: {exc}", err=True)
            sys.exit(EXIT_IO)
    else:
        click.echo(text, nl=False)


@main.command()
@click.argument("name")
@click.option("--out", "out_dir", type=str, default=".", show_default=True,
              help="Output directory.")
@click.option("--samples", type=int, default=None, help="Samples along curves/directions.")
@click.option("--grid", type=int, default=None, help="Grid resolution for surfaces.")
@click.option("--sigma", type=float, default=None, help="Schmidt angle parameter.")
@click.option("--radius", type=float, default=None, help="Geodesic-sphere radius.")
@click.option("--corner", type=int, default=None, help="Corner index parameter.")
@click.option("--no-plot", is_flag=True, help="Skip the PNG preview.")
def figure(name, out_dir, samples, grid, sigma, radius, corner, no_plot):
    """Emit the data files (and a preview) for one named figure."""
    params = {}
    for key, value in (
        ("samples", samples), ("grid", grid), ("sigma", sigma),
        ("radius", radius), ("corner", corner),
    ):
        if value is not None:
            params[key] = value
    try:
        data = figures.build_figure(name, **params)
    except TypeError:
        click.echo(f"error: figure {name!r} does not take those parameters", err=True)
        sys.exit(EXIT_USAGE)
    except CPGeomError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    try:
        paths = figures.write_figure(data, out_dir, plot=not no_plot)
    except OSError as exc:
        click.echo(f"error: cannot write into {out_dir}: {exc}", err=True)
        sys.exit(EXIT_IO)
    for p in paths:
        click.echo(p)


@main.command()
@click.argument("suite", type=click.Choice(["all"] + list(checks.SUITES)))
@click.option("--seed", type=int, default=0, show_default=True)
def check(suite, seed):
    """Run a verification suite; exit code 1 on any failing check."""
    results = checks.run_checks(suite, seed)
    width = max(len(r.name) for r in results)
    failed = 0
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        click.echo(
            f"{mark} {r.name:<{width}s} value={r.value:.3e} tol={r.tolerance:.1e} [{r.suite}] {r.detail}"
        )
        failed += 0 if r.passed else 1
    click.echo(f"{len(results) - failed}/{len(results)} checks passed (suite={suite}, seed={seed})")
    if failed:
        sys.exit(EXIT_CHECK_FAILURE)


if __name__ == "__main__":
    main()
