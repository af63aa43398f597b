"""Grid scans for the geometric functionals, plus the univalence probe.

Scans are evidence, not proofs: a "violated" report carries a concrete
witness point (conclusive up to rounding), while "passed" only says no
violation was found on the sampled grid.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from harmomap._backend import kernels
from harmomap.errors import DomainError
from harmomap.series import BOUNDARY_MARGIN, AnalyticSeries, HarmonicMapSeries

__all__ = [
    "ScanGrid",
    "GridReport",
    "CrossingWitness",
    "MoebiusImage",
    "default_grid",
    "scan_ch1",
    "scan_fully_starlike",
    "scan_convexity_functional",
    "scan_convexity_upper",
    "scan_jacobian",
    "starlike_disk_bound_check",
    "moebius_disk_image",
    "curve_self_intersection",
    "PASSED_DISCLAIMER",
    "VIOLATED_DISCLAIMER",
]

PASSED_DISCLAIMER = "passed: no violation found on the sampled grid (inconclusive, not a proof)"
VIOLATED_DISCLAIMER = "violated: witness found (conclusive up to rounding)"

_DEGENERATE_TOL = 1e-12


@dataclass(frozen=True)
class ScanGrid:
    """Sample circles |z| = r at equispaced angles; radii stay inside the disk."""

    radii: tuple
    angles: int = 1024

    def __post_init__(self) -> None:
        radii = tuple(float(r) for r in self.radii)
        if not radii:
            raise ValueError("at least one radius required")
        if any(r2 <= r1 for r1, r2 in zip(radii, radii[1:])):
            raise ValueError("radii must be strictly increasing")
        if radii[0] <= 0.0 or radii[-1] > 1.0 - BOUNDARY_MARGIN:
            raise DomainError(f"radii must lie in (0, {1.0 - BOUNDARY_MARGIN}]")
        if self.angles < 64:
            raise ValueError("need at least 64 angles")
        object.__setattr__(self, "radii", radii)

    @property
    def r_max(self) -> float:
        return self.radii[-1]

    @property
    def thetas(self) -> np.ndarray:
        return 2.0 * np.pi * np.arange(self.angles) / self.angles

    def circle(self, r: float) -> np.ndarray:
        return r * np.exp(1j * self.thetas)

    @property
    def samples(self) -> int:
        return len(self.radii) * self.angles


def default_grid() -> ScanGrid:
    """Radii 0.1..0.9 step 0.1 plus 0.95 and 0.99; 1024 angles."""
    return ScanGrid(radii=tuple(k / 10 for k in range(1, 10)) + (0.95, 0.99))


@dataclass(frozen=True)
class GridReport:
    functional: str
    min_value: float
    argmin: tuple  # (r, theta)
    samples: int
    verdict: str  # "passed" | "violated"
    disclaimer: str
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.verdict == "passed"

    def to_record(self) -> dict:
        return {
            "functional": self.functional,
            "min_value": self.min_value,
            "argmin_r": self.argmin[0],
            "argmin_theta": self.argmin[1],
            "samples": self.samples,
            "verdict": self.verdict,
            "disclaimer": self.disclaimer,
            "note": self.note,
        }


def _thread_count() -> int:
    raw = os.environ.get("HARMOMAP_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _row_values(row_fn, grid: ScanGrid):
    """Evaluate row_fn on every circle, optionally across a thread pool.

    Rows are independent; the reduction (min with lexicographic argmin
    tie-break) is order-independent, so threading never changes results.
    """
    circles = [grid.circle(r) for r in grid.radii]
    threads = min(_thread_count(), len(circles))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(row_fn, circles))
    return [row_fn(z) for z in circles]


def _reduce_scan(name: str, rows, grid: ScanGrid, note: str = "") -> GridReport:
    values = np.vstack(rows)  # shape (radii, angles); NaN marks degenerate
    degenerate = np.isnan(values)
    if degenerate.all():
        raise DomainError(f"{name}: functional undefined on the whole grid")
    masked = np.where(degenerate, np.inf, values)
    flat = int(np.argmin(masked))  # first occurrence = smallest (r, theta)
    i, j = divmod(flat, grid.angles)
    min_value = float(masked[i, j])
    verdict = "violated" if min_value <= 0.0 else "passed"
    if degenerate.any():
        di, dj = divmod(int(np.argmax(degenerate.reshape(-1))), grid.angles)
        note = (note + "; " if note else "") + (
            f"degenerate witness: |denominator| < {_DEGENERATE_TOL:g} at "
            f"(r={grid.radii[di]:g}, theta={grid.thetas[dj]:.6g})"
        )
        verdict = "violated"
    return GridReport(
        functional=name,
        min_value=min_value,
        argmin=(grid.radii[i], float(grid.thetas[j])),
        samples=grid.samples,
        verdict=verdict,
        disclaimer=VIOLATED_DISCLAIMER if verdict == "violated" else PASSED_DISCLAIMER,
        note=note,
    )


def _check_truncation(series: AnalyticSeries, r_max: float, tol: float = 1e-6) -> None:
    """Heuristic gate: the last stored coefficients must be negligible at r_max.

    Short series (order < 64) are taken as exact polynomials.  Longer ones
    are treated as truncations: the discarded tail is estimated by geometric
    continuation of the largest of the last eight stored terms.
    """
    c = np.abs(series.coeffs)
    n = len(c)
    if n - 1 < 64:
        return
    k = np.arange(n - 8, n)
    head = float(np.max(c[k] * r_max ** k))
    estimate = head * (1.0 + r_max / (1.0 - r_max))
    if estimate > tol:
        raise DomainError(
            f"truncation too coarse at r={r_max:g}: tail estimate {estimate:.3g} > {tol:g}; "
            "increase the truncation order"
        )


def scan_ch1(f: HarmonicMapSeries, grid: ScanGrid) -> GridReport:
    """min over the grid of Re f_z - |f_zbar| (positive on all of it is the
    close-to-convexity evidence; a negative witness is conclusive)."""
    hp, gp = f.h.derivative(), f.g.derivative()
    _check_truncation(hp, grid.r_max)
    _check_truncation(gp, grid.r_max)

    def row(z):
        return hp.eval(z).real - np.abs(gp.eval(z))

    return _reduce_scan("ch1: Re f_z - |f_zbar|", _row_values(row, grid), grid)


def scan_fully_starlike(f: HarmonicMapSeries, grid: ScanGrid) -> GridReport:
    """min over the grid of Re(Df/f); positive means every sampled circle
    image winds starlike about the origin."""
    if f.b1 != 0:
        raise DomainError("fully-starlike scan requires b1 = 0")
    hp, gp = f.h.derivative(), f.g.derivative()
    for s in (f.h, f.g, hp, gp):
        _check_truncation(s, grid.r_max)

    def row(z):
        df = z * hp.eval(z) - np.conj(z) * np.conj(gp.eval(z))
        fv = f.h.eval(z) + np.conj(f.g.eval(z))
        bad = np.abs(fv) < _DEGENERATE_TOL
        vals = (df / np.where(bad, 1.0, fv)).real
        return np.where(bad, np.nan, vals)

    return _reduce_scan("fully-starlike: Re(Df/f)", _row_values(row, grid), grid)


def scan_convexity_functional(
    h: AnalyticSeries, grid: ScanGrid, lower: float = -0.5
) -> GridReport:
    """min over the grid of Re(1 + z h''/h') - lower."""
    hp = h.derivative()
    hpp = hp.derivative()
    _check_truncation(hp, grid.r_max)

    def row(z):
        hpv = hp.eval(z)
        bad = np.abs(hpv) < _DEGENERATE_TOL
        vals = (1.0 + z * hpp.eval(z) / np.where(bad, 1.0, hpv)).real - lower
        return np.where(bad, np.nan, vals)

    return _reduce_scan(
        f"convexity: Re(1 + z h''/h') - ({lower:g})", _row_values(row, grid), grid
    )


def scan_convexity_upper(h: AnalyticSeries, grid: ScanGrid, upper: float) -> GridReport:
    """min over the grid of upper - Re(1 + z h''/h') (upper-side variant)."""
    hp = h.derivative()
    hpp = hp.derivative()
    _check_truncation(hp, grid.r_max)

    def row(z):
        hpv = hp.eval(z)
        bad = np.abs(hpv) < _DEGENERATE_TOL
        vals = upper - (1.0 + z * hpp.eval(z) / np.where(bad, 1.0, hpv)).real
        return np.where(bad, np.nan, vals)

    return _reduce_scan(
        f"convexity-upper: ({upper:g}) - Re(1 + z h''/h')", _row_values(row, grid), grid
    )


def scan_jacobian(f: HarmonicMapSeries, grid: ScanGrid) -> GridReport:
    """min over the grid of |h'|^2 - |g'|^2 (sense-preserving evidence)."""
    hp, gp = f.h.derivative(), f.g.derivative()
    _check_truncation(hp, grid.r_max)
    _check_truncation(gp, grid.r_max)

    def row(z):
        return np.abs(hp.eval(z)) ** 2 - np.abs(gp.eval(z)) ** 2

    return _reduce_scan("jacobian: |h'|^2 - |g'|^2", _row_values(row, grid), grid)


def starlike_disk_bound_check(h: AnalyticSeries, grid: ScanGrid) -> GridReport:
    """min over the grid of 2/3 - |z h'/h - 2/3| (starlikeness of h)."""
    hp = h.derivative()
    _check_truncation(hp, grid.r_max)

    def row(z):
        hv = h.eval(z)
        bad = np.abs(hv) < _DEGENERATE_TOL
        vals = 2.0 / 3.0 - np.abs(z * hp.eval(z) / np.where(bad, 1.0, hv) - 2.0 / 3.0)
        return np.where(bad, np.nan, vals)

    return _reduce_scan("starlike-disk-bound: 2/3 - |z h'/h - 2/3|", _row_values(row, grid), grid)


@dataclass(frozen=True)
class MoebiusImage:
    """Image of the unit disk under w = (1 - n^2 a Z)/(1 - n a Z)."""

    kind: str  # "disk" | "half-plane"
    center: float | None = None
    radius: float | None = None
    boundary_re: float | None = None

    @property
    def min_re(self) -> float:
        if self.kind == "half-plane":
            raise DomainError("half-plane image is unbounded below in Re")
        return self.center - self.radius


def moebius_disk_image(n: int, a: float) -> MoebiusImage:
    """Disk (or half-plane) image of the convexity functional for
    h = z - a z^n; requires 0 < a <= 1/n.

    For a < 1/n the image is the disk with center (1 - n^3 a^2)/(1 - n^2 a^2)
    and radius a n (n-1)/(1 - n^2 a^2); at a = 1/n it degenerates to the
    half-plane Re w < (n+1)/2.
    """
    if n < 2 or int(n) != n:
        raise DomainError("n must be an integer >= 2")
    if not 0.0 < a <= 1.0 / n + 1e-15:
        raise DomainError(f"a must lie in (0, 1/n] (got a={a:g}, 1/n={1.0 / n:g})")
    if abs(a * n - 1.0) <= 1e-12:
        return MoebiusImage(kind="half-plane", boundary_re=(n + 1.0) / 2.0)
    denom = 1.0 - n * n * a * a
    return MoebiusImage(
        kind="disk",
        center=(1.0 - n ** 3 * a * a) / denom,
        radius=a * n * (n - 1.0) / denom,
    )


@dataclass(frozen=True)
class CrossingWitness:
    """A proper self-intersection of the sampled image curve."""

    seg_a: int
    seg_b: int
    theta_a: float
    theta_b: float
    point: complex


def curve_self_intersection(
    f: HarmonicMapSeries, r: float, samples: int = 4096
) -> CrossingWitness | None:
    """Probe the closed image curve f(r e^{i theta}) for self-intersections.

    A returned witness certifies non-univalence up to the polyline
    tolerance; None is evidence only, not a univalence proof.  Touching
    segments (intersection within 1e-9 of an endpoint in parameter space)
    and adjacent segments do not count.
    """
    if samples < 512:
        raise ValueError("need at least 512 samples")
    if not 0.0 < r < 1.0:
        raise DomainError("radius must lie in (0, 1)")
    theta = 2.0 * np.pi * np.arange(samples) / samples
    pts = f.eval(r * np.exp(1j * theta))
    hit = kernels.first_crossing(
        np.ascontiguousarray(pts.real), np.ascontiguousarray(pts.imag), 1e-9
    )
    if hit is None:
        return None
    i, j, t, _u = hit
    step = 2.0 * np.pi / samples
    p1 = pts[i]
    p2 = pts[(i + 1) % samples]
    return CrossingWitness(
        seg_a=int(i),
        seg_b=int(j),
        theta_a=float(theta[i] + t * step),
        theta_b=float(theta[j] + _u * step),
        point=complex(p1 + t * (p2 - p1)),
    )
