"""Figure-data emitters: delimited plot data plus quick-look renderings.

Every figure writes ``<name>.csv`` (the canonical, documented output) into
the target directory and, unless disabled, a matplotlib preview
``<name>.png`` of the same data.  All outputs are deterministic for fixed
parameters.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from . import serialize  # noqa: E402
from .charts import (  # noqa: E402
    fibonacci_sphere,
    gnomonic_project,
    stereographic_project,
    torus_shape,
    trace_great_circle,
)
from .entanglement import collapse_direction  # noqa: E402
from .errors import CPGeomError  # noqa: E402
from .simplex import mixing_line, simplex_to_gnomonic  # noqa: E402
from .states import normalize_and_gauge, to_octant_torus  # noqa: E402
from .submanifolds import (  # noqa: E402
    EulerOctantCoords,
    Spin1Seed,
    constant_sigma_fiber_value,
    constant_sigma_region,
    distance_sphere,
    max_entangled_set,
    mub_bases,
    separable_surface,
    spin1_state,
)

FIGURES = (
    "octant-charts",
    "torus-family",
    "distance-sphere",
    "spin1",
    "separable-surface",
    "max-entangled",
    "collapse-sphere",
    "constant-sigma",
    "simplex",
)


@dataclass
class FigureData:
    name: str
    params: dict
    columns: tuple
    rows: list
    meta: dict = field(default_factory=dict)


def _octant_row(n, pole=0):
    g = gnomonic_project(n).coords
    s = stereographic_project(n, pole).coords
    return tuple(n) + tuple(g) + tuple(s)


def fig_octant_charts(samples: int = 65) -> FigureData:
    """Octant edges and four reference geodesics in both flat charts.

    Two geodesics meet the bottom edge at its arc-length thirds (and two
    more the left edge), showing how each map distorts distances.
    """
    rows = []

    def add_series(label, a, b):
        arc = trace_great_circle(a, b, samples)
        for t, p, inside in zip(np.linspace(0, 1, samples), arc.points, arc.in_octant):
            rows.append((label, t) + _octant_row(p) + (int(inside),))

    eye = np.eye(3)
    add_series("edge-01", eye[0], eye[1])
    add_series("edge-02", eye[0], eye[2])
    add_series("edge-12", eye[1], eye[2])
    third = np.pi / 6
    for k, frac in enumerate((1, 2)):
        p = np.array([np.cos(frac * third), np.sin(frac * third), 0.0])
        add_series(f"geodesic-bottom-{k}", eye[2], p)
        q = np.array([np.cos(frac * third), 0.0, np.sin(frac * third)])
        add_series(f"geodesic-left-{k}", eye[1], q)
    columns = ("series", "t", "n0", "n1", "n2",
               "gnomonic_x", "gnomonic_y", "stereo_x", "stereo_y", "in_octant")
    return FigureData("octant-charts", {"samples": samples}, columns, rows,
                      {"stereo_pole_corner": 0})


def fig_torus_family(grid: int = 24) -> FigureData:
    """Shape of the fiber torus across the octant, plus the nine vectors of
    the non-standard unbiased bases in the torus over the center."""
    rows = []
    for i in range(grid + 1):
        for j in range(grid + 1 - i):
            k = grid - i - j
            w = np.array([i, j, k], dtype=float)
            n = np.sqrt(w / grid)
            shape = torus_shape(n)
            g = gnomonic_project(n).coords
            rows.append(
                ("grid",) + tuple(n) + tuple(g)
                + (shape.side_lengths[0], shape.side_lengths[1],
                   shape.pairwise_angles[(1, 2)], shape.area_or_volume, "", "", "", "")
            )
    for b_idx, basis in enumerate(mub_bases()[1:], start=1):
        for v_idx in range(3):
            c = to_octant_torus(normalize_and_gauge(basis[:, v_idx]))
            rows.append(
                ("mub",) + tuple(c.radii) + tuple(gnomonic_project(c.radii).coords)
                + ("", "", "", "", c.phases[0], c.phases[1], b_idx, v_idx)
            )
    columns = ("series", "n0", "n1", "n2", "gnomonic_x", "gnomonic_y",
               "L1", "L2", "theta12", "area", "nu1", "nu2", "basis", "vector")
    return FigureData("torus-family", {"grid": grid}, columns, rows)


def fig_distance_sphere(radius: float = np.pi / 4, corner: int = 0, samples: int = 65) -> FigureData:
    """Octant trace of the squashed geodesic sphere around a corner with the
    torus shape along it."""
    rows = []
    psis = np.linspace(0.0, np.pi / 2, samples)
    for psi, sample in zip(psis, distance_sphere(corner, radius, samples)):
        n = np.asarray(sample.octant)
        shape = torus_shape(n)
        rows.append(
            (psi,) + tuple(n) + tuple(sample.chart.coords)
            + (shape.side_lengths[0], shape.side_lengths[1],
               shape.pairwise_angles[(1, 2)], shape.area_or_volume)
        )
    columns = ("psi", "n0", "n1", "n2", "gnomonic_x", "gnomonic_y", "L1", "L2", "theta12", "area")
    return FigureData(
        "distance-sphere", {"radius": radius, "corner": corner, "samples": samples},
        columns, rows,
    )


def fig_spin1(samples: int = 65) -> FigureData:
    """Octant curves of the spin-up sphere and the spin-zero projective
    plane, swept over the polar angle at zero azimuth."""
    rows = []
    for label, seed in (("spin-up", Spin1Seed.SPIN_UP), ("spin-zero", Spin1Seed.SPIN_ZERO)):
        for theta in np.linspace(0.0, np.pi, samples):
            direction = [np.sin(theta), 0.0, np.cos(theta)]
            c = to_octant_torus(spin1_state(seed, direction))
            g = gnomonic_project(c.radii).coords
            rows.append((label, theta) + tuple(c.radii) + tuple(g) + tuple(c.phases))
    columns = ("series", "theta", "n0", "n1", "n2", "gnomonic_x", "gnomonic_y", "nu1", "nu2")
    return FigureData("spin1", {"samples": samples}, columns, rows)


def fig_separable_surface(grid: int = 12) -> FigureData:
    """The ruled separable surface in the gnomonic tetrahedron."""
    rows = []
    for sample in separable_surface((grid, grid)):
        rows.append(tuple(sample.octant) + tuple(sample.chart.coords))
    columns = ("n0", "n1", "n2", "n3", "chart_x", "chart_y", "chart_z")
    return FigureData(
        "separable-surface", {"grid": grid}, columns, rows,
        {"fiber_relation": "nu1+nu2-nu3=0"},
    )


def fig_max_entangled(samples: int = 65) -> FigureData:
    """The maximally entangled geodesic through the tetrahedron center and
    the positions of the four Bell states."""
    rows = []
    for t, sample in zip(np.linspace(0, np.pi / 2, samples), max_entangled_set(samples)):
        rows.append(("line", t) + tuple(sample.octant) + tuple(sample.chart.coords))
    bells = {
        "phi+": [1, 0, 0, 1],
        "phi-": [1, 0, 0, -1],
        "psi+": [0, 1, 1, 0],
        "psi-": [0, 1, -1, 0],
    }
    for label, amp in bells.items():
        c = to_octant_torus(normalize_and_gauge(amp))
        rows.append((f"bell-{label}", "") + tuple(c.radii) + tuple(gnomonic_project(c.radii).coords))
    columns = ("series", "t", "n0", "n1", "n2", "n3", "chart_x", "chart_y", "chart_z")
    return FigureData(
        "max-entangled", {"samples": samples}, columns, rows,
        {"fiber_relation": "nu1+nu2-nu3=pi"},
    )


def fig_collapse_sphere(samples: int = 128) -> FigureData:
    """The sphere of nearest separable states reachable by measuring one
    subsystem of the singlet state."""
    base = normalize_and_gauge([0, 1, -1, 0])
    rows = []
    for d in fibonacci_sphere(samples):
        s = collapse_direction(base, d)
        c = to_octant_torus(s)
        amp = s.amplitudes
        rows.append(
            tuple(d) + tuple(np.r_[amp.real, amp.imag]) + tuple(c.radii)
            + tuple(gnomonic_project(c.radii).coords)
        )
    columns = (
        "dir_x", "dir_y", "dir_z",
        "re0", "re1", "re2", "re3", "im0", "im1", "im2", "im3",
        "n0", "n1", "n2", "n3", "chart_x", "chart_y", "chart_z",
    )
    return FigureData(
        "collapse-sphere", {"samples": samples}, columns, rows,
        {"state": "singlet", "distance": np.pi / 4},
    )


def fig_constant_sigma(sigma: float = np.pi / 8, grid: int = 16) -> FigureData:
    """The octant region of fixed Schmidt angle with its fiber descriptor."""
    rows = []
    for sample in constant_sigma_region(sigma, grid):
        rhs = constant_sigma_fiber_value(sample.octant, sigma)
        rows.append(tuple(sample.octant) + tuple(sample.chart.coords)
                    + (rhs, int(abs(abs(rhs) - 1.0) < 1e-6)))
    columns = ("n0", "n1", "n2", "n3", "chart_x", "chart_y", "chart_z",
               "fiber_cos", "on_boundary")
    return FigureData("constant-sigma", {"sigma": sigma, "grid": grid}, columns, rows)


def fig_simplex(grid: int = 12) -> FigureData:
    """The statistical simplex drawn twice: barycentric versus gnomonic,
    with the corner geodesics and one statistical mixing line."""
    verts = [np.array([0.0, 0.0]), np.array([1.0, 0.0]), np.array([0.5, np.sqrt(3) / 2])]

    def bary_xy(p):
        return p[0] * verts[0] + p[1] * verts[1] + p[2] * verts[2]

    rows = []
    for i in range(grid + 1):
        for j in range(grid + 1 - i):
            p = np.array([i, j, grid - i - j], dtype=float) / grid
            rows.append(("grid", "") + tuple(p) + tuple(bary_xy(p))
                        + tuple(simplex_to_gnomonic(p).coords))
    eye = np.eye(3)
    for a in range(3):
        for b in range(a + 1, 3):
            arc = trace_great_circle(np.sqrt(eye[a]), np.sqrt(eye[b]), 33)
            for t, pt in zip(np.linspace(0, 1, 33), arc.points):
                p = pt * pt
                rows.append((f"geodesic-{a}{b}", t) + tuple(p) + tuple(bary_xy(p))
                            + tuple(simplex_to_gnomonic(p).coords))
    p0, q0 = np.array([0.7, 0.2, 0.1]), np.array([0.05, 0.15, 0.8])
    for t in np.linspace(0, 1, 33):
        m = mixing_line(p0, q0, t)
        rows.append(("mixing", t) + tuple(m) + tuple(bary_xy(m))
                    + tuple(simplex_to_gnomonic(m).coords))
    columns = ("series", "t", "p0", "p1", "p2", "bary_x", "bary_y", "gnom_x", "gnom_y")
    return FigureData("simplex", {"grid": grid}, columns, rows)


_BUILDERS = {
    "octant-charts": fig_octant_charts,
    "torus-family": fig_torus_family,
    "distance-sphere": fig_distance_sphere,
    "spin1": fig_spin1,
    "separable-surface": fig_separable_surface,
    "max-entangled": fig_max_entangled,
    "collapse-sphere": fig_collapse_sphere,
    "constant-sigma": fig_constant_sigma,
    "simplex": fig_simplex,
}


def build_figure(name: str, **params) -> FigureData:
    """Build the named figure's data; unknown names raise ``CPGeomError``."""
    if name not in _BUILDERS:
        raise CPGeomError(f"unknown figure {name!r}; choose from {FIGURES}")
    return _BUILDERS[name](**params)


def write_figure(data: FigureData, out_dir: str, plot: bool = True):
    """Write ``<name>.csv`` (and a PNG preview) into ``out_dir``.

    Returns the list of paths written.
    """
    os.makedirs(out_dir, exist_ok=True)
    csv_path = os.path.join(out_dir, f"{data.name}.csv")
    lines = serialize.csv_lines(
        f"figure {data.name}", data.params, data.columns, data.rows, data.meta
    )
    with open(csv_path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    paths = [csv_path]
    if plot:
        png_path = os.path.join(out_dir, f"{data.name}.png")
        _render(data, png_path)
        paths.append(png_path)
    return paths


# ------------------------------------------------------------- rendering ---


def _series_split(data, series_col=0):
    groups = {}
    for row in data.rows:
        groups.setdefault(row[series_col], []).append(row)
    return groups


def _cols(rows, *idx):
    arr = np.array([[row[i] for i in idx] for row in rows], dtype=float)
    return [arr[:, k] for k in range(arr.shape[1])]


def _triangle(ax):
    corners = [np.asarray(gnomonic_project(np.eye(3)[i]).coords) for i in range(3)]
    loop = corners + [corners[0]]
    xs, ys = zip(*loop)
    ax.plot(xs, ys, color="0.6", lw=0.8)


def _tetrahedron(ax):
    corners = [np.asarray(gnomonic_project(np.eye(4)[i]).coords) for i in range(4)]
    for i in range(4):
        for j in range(i + 1, 4):
            seg = np.array([corners[i], corners[j]])
            ax.plot(seg[:, 0], seg[:, 1], seg[:, 2], color="0.6", lw=0.8)


def _render(data: FigureData, path: str):
    name = data.name
    if name == "octant-charts":
        fig, axes = plt.subplots(1, 2, figsize=(9, 4.5))
        for label, rows in _series_split(data).items():
            sx, sy = _cols(rows, 7, 8)
            gx, gy = _cols(rows, 5, 6)
            style = "-" if label.startswith("edge") else "--"
            axes[0].plot(sx, sy, style, lw=1)
            axes[1].plot(gx, gy, style, lw=1)
        axes[0].set_title("stereographic")
        axes[1].set_title("gnomonic")
        for ax in axes:
            ax.set_aspect("equal")
    elif name == "torus-family":
        fig, ax = plt.subplots(figsize=(5, 4.5))
        groups = _series_split(data)
        gx, gy, area = _cols(groups["grid"], 4, 5, 9)
        sc = ax.scatter(gx, gy, c=area, s=14, cmap="viridis")
        fig.colorbar(sc, ax=ax, label="torus area")
        if "mub" in groups:
            mx, my = _cols(groups["mub"], 4, 5)
            ax.plot(mx, my, "r+", ms=10)
        _triangle(ax)
        ax.set_aspect("equal")
    elif name == "distance-sphere":
        fig, axes = plt.subplots(1, 2, figsize=(9, 4))
        psi, gx, gy, area = _cols(data.rows, 0, 4, 5, 9)
        axes[0].plot(gx, gy, "-")
        _triangle(axes[0])
        axes[0].set_aspect("equal")
        axes[0].set_title("octant trace")
        axes[1].plot(psi, area)
        axes[1].set_title("torus area along the trace")
    elif name == "spin1":
        fig, ax = plt.subplots(figsize=(5, 4.5))
        for label, rows in _series_split(data).items():
            gx, gy = _cols(rows, 5, 6)
            style = "--" if label == "spin-up" else "-"
            ax.plot(gx, gy, style, label=label)
        _triangle(ax)
        ax.set_aspect("equal")
        ax.legend()
    elif name in ("separable-surface", "max-entangled", "collapse-sphere", "constant-sigma"):
        fig = plt.figure(figsize=(5.5, 5))
        ax = fig.add_subplot(projection="3d")
        _tetrahedron(ax)
        if name == "separable-surface":
            x, y, z = _cols(data.rows, 4, 5, 6)
            ax.scatter(x, y, z, s=4)
        elif name == "max-entangled":
            groups = _series_split(data)
            x, y, z = _cols(groups["line"], 6, 7, 8)
            ax.plot(x, y, z, "-")
            for label, rows in groups.items():
                if label.startswith("bell"):
                    bx, by, bz = _cols(rows, 6, 7, 8)
                    ax.scatter(bx, by, bz, marker="x", color="r")
        elif name == "collapse-sphere":
            x, y, z = _cols(data.rows, 15, 16, 17)
            ax.scatter(x, y, z, s=4)
        else:
            x, y, z, bnd = _cols(data.rows, 4, 5, 6, 8)
            ax.scatter(x, y, z, s=4, c=bnd, cmap="coolwarm")
        ax.set_box_aspect((1, 1, 1))
    elif name == "simplex":
        fig, axes = plt.subplots(1, 2, figsize=(9, 4.5))
        verts = np.array([[0, 0], [1, 0], [0.5, np.sqrt(3) / 2], [0, 0]])
        axes[0].plot(verts[:, 0], verts[:, 1], color="0.6", lw=0.8)
        _triangle(axes[1])
        for label, rows in _series_split(data).items():
            bx, by, gx, gy = _cols(rows, 5, 6, 7, 8)
            if label == "grid":
                axes[0].plot(bx, by, ".", ms=2, color="0.4")
                axes[1].plot(gx, gy, ".", ms=2, color="0.4")
            elif label == "mixing":
                axes[0].plot(bx, by, "r-")
                axes[1].plot(gx, gy, "r-")
            else:
                axes[0].plot(bx, by, "b--", lw=0.8)
                axes[1].plot(gx, gy, "b--", lw=0.8)
        axes[0].set_title("barycentric")
        axes[1].set_title("gnomonic")
        for ax in axes:
            ax.set_aspect("equal")
    else:  # pragma: no cover - guarded by build_figure
        raise CPGeomError(f"no renderer for {name}")
    fig.suptitle(name)
    fig.savefig(path, dpi=110, metadata={"Software": None})
    plt.close(fig)
