"""Deterministic SVG/CSV rendering of image curves f(r e^{i theta}).

SVG output is a plain polyline subset of SVG 1.1 with no external
dependencies; numbers are formatted to 9 significant digits so identical
inputs always produce identical bytes.  CSV uses 17 significant digits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from harmomap.series import HarmonicMapSeries

__all__ = ["RenderSpec", "sample_curves", "curves_to_svg", "curves_to_csv", "scan_values_to_csv"]

_SVG_FMT = "%.9g"
_CSV_FMT = "%.17g"

# fixed stroke palette, cycled by circle index (deterministic)
_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f")


@dataclass(frozen=True)
class RenderSpec:
    """What to draw: which circles, how many samples, and the canvas."""

    radii: tuple
    samples: int = 1024
    fmt: str = "svg"
    width: float = 800.0
    height: float = 800.0
    stroke_width: float = 1.0

    def __post_init__(self) -> None:
        radii = tuple(float(r) for r in self.radii)
        if not radii or any(not 0.0 < r < 1.0 for r in radii):
            raise ValueError("radii must be a nonempty subset of (0, 1)")
        object.__setattr__(self, "radii", radii)
        if self.fmt not in ("svg", "csv"):
            raise ValueError("fmt must be 'svg' or 'csv'")
        if self.fmt == "svg" and self.samples < 256:
            raise ValueError("svg output needs at least 256 samples per circle")
        if self.samples < 8:
            raise ValueError("too few samples")


def sample_curves(f: HarmonicMapSeries, spec: RenderSpec):
    """[(r, theta array, complex points)] for each circle, closed."""
    theta = 2.0 * np.pi * np.arange(spec.samples) / spec.samples
    return [(r, theta, f.eval(r * np.exp(1j * theta))) for r in spec.radii]


def _fmt(x: float) -> str:
    out = _SVG_FMT % x
    return "0" if out == "-0" else out


def curves_to_svg(curves, spec: RenderSpec, markers=()) -> str:
    """Concentric image curves as one SVG document; y grows upward.

    `markers` are complex points drawn as small crosses (e.g. crossing
    witnesses).  The viewBox is fitted to the data with a 5% margin.
    """
    all_pts = np.concatenate([pts for _, _, pts in curves])
    xlo, xhi = float(all_pts.real.min()), float(all_pts.real.max())
    ylo, yhi = float(all_pts.imag.min()), float(all_pts.imag.max())
    span = max(xhi - xlo, yhi - ylo, 1e-9)
    pad = 0.05 * span
    xlo, xhi = xlo - pad, xhi + pad
    ylo, yhi = ylo - pad, yhi + pad

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(spec.width)}" '
        f'height="{_fmt(spec.height)}" viewBox="{_fmt(xlo)} {_fmt(-yhi)} '
        f'{_fmt(xhi - xlo)} {_fmt(yhi - ylo)}">',
    ]
    stroke_w = (xhi - xlo) / spec.width * max(spec.stroke_width, 1e-9)
    for idx, (r, _, pts) in enumerate(curves):
        color = _PALETTE[idx % len(_PALETTE)]
        coords = " ".join(
            f"{_fmt(float(p.real))},{_fmt(float(-p.imag))}" for p in pts
        )
        first = f"{_fmt(float(pts[0].real))},{_fmt(float(-pts[0].imag))}"
        lines.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="{_fmt(stroke_w)}" '
            f'points="{coords} {first}"/>'
        )
    tick = 0.02 * span
    for p in markers:
        x, y = float(np.real(p)), float(-np.imag(p))
        lines.append(
            f'<path stroke="#ff0000" stroke-width="{_fmt(1.5 * stroke_w)}" '
            f'd="M {_fmt(x - tick)} {_fmt(y - tick)} L {_fmt(x + tick)} {_fmt(y + tick)} '
            f'M {_fmt(x - tick)} {_fmt(y + tick)} L {_fmt(x + tick)} {_fmt(y - tick)}"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def curves_to_csv(curves) -> str:
    rows = ["r,theta,re,im"]
    for r, theta, pts in curves:
        for th, p in zip(theta, pts):
            rows.append(
                ",".join(
                    _CSV_FMT % v for v in (r, float(th), float(p.real), float(p.imag))
                )
            )
    return "\n".join(rows) + "\n"


def scan_values_to_csv(grid, rows) -> str:
    """Grid functional values as r,theta,value lines (17 significant digits)."""
    out = ["r,theta,value"]
    for r, vals in zip(grid.radii, rows):
        for th, v in zip(grid.thetas, vals):
            out.append(",".join(_CSV_FMT % x for x in (r, float(th), float(v))))
    return "\n".join(out) + "\n"
