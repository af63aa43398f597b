"""Constructors for every explicit map family used by the test corpus
and the CLI: the g' = z h' examples, Suffridge-style harmonic polynomials
with the hat transform, the triple-factor limit mapping, the harmonic
Koebe map, and the hypergeometric co-analytic families.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from harmomap.criteria import FamilySpec, _FAMILIES
from harmomap.errors import DomainError
from harmomap.geometry import GridReport, ScanGrid, _reduce_scan, _row_values
from harmomap.series import AnalyticSeries, HarmonicMapSeries
from harmomap.specialfn import MODE_NEGATIVE_INTEGER, gauss_coeff_array

__all__ = [
    "PolynomialSpec",
    "SuffridgeParams",
    "identity_map",
    "mocanu_example",
    "mocanu_class_m_bound",
    "nonunivalent_example",
    "harmonic_koebe",
    "qhat",
    "winding_zero_count",
    "suffridge_family",
    "suffridge_ch1_margin",
    "limit_mapping",
    "hypergeometric_family",
    "binomial_poly_coeffs",
]


def identity_map() -> HarmonicMapSeries:
    """f(z) = z."""
    return HarmonicMapSeries(
        AnalyticSeries([0.0, 1.0]), AnalyticSeries([0.0]), meta={"family": "identity"}
    )


def mocanu_class_m_bound(n: int) -> float:
    """Largest a for which h = z - a z^n keeps Re(1 + z h''/h') > -1/2."""
    return 3.0 / (n * (2 * n + 1))


def mocanu_example(n: int, a: float) -> HarmonicMapSeries:
    """h = z - a z^n, g = z^2/2 - (n/(n+1)) a z^{n+1}; satisfies g' = z h'.

    Requires 0 < a <= 1/n (sense-preserving range).  meta["class_m"] records
    whether a <= 3/(n(2n+1)), the certified convexity-functional range.
    """
    if n < 2 or int(n) != n:
        raise DomainError("n must be an integer >= 2")
    if not 0.0 < a <= 1.0 / n:
        raise DomainError(f"a must lie in (0, 1/n] (got a={a:g}, 1/n={1.0 / n:g})")
    h = np.zeros(n + 1, dtype=np.complex128)
    h[1] = 1.0
    h[n] = -a
    g = np.zeros(n + 2, dtype=np.complex128)
    g[2] = 0.5
    g[n + 1] = -n * a / (n + 1.0)
    meta = {"family": "mocanu", "n": n, "a": a, "class_m": a <= mocanu_class_m_bound(n)}
    return HarmonicMapSeries(AnalyticSeries(h), AnalyticSeries(g), meta=meta)


def nonunivalent_example() -> HarmonicMapSeries:
    """h = z - z^2/2, g = z^2/2 - z^3/3: g' = z h' with a starlike h, yet
    the image curves near the boundary self-overlap."""
    return HarmonicMapSeries(
        AnalyticSeries([0.0, 1.0, -0.5]),
        AnalyticSeries([0.0, 0.0, 0.5, -1.0 / 3.0]),
        meta={"family": "nonunivalent-example"},
    )


def harmonic_koebe(truncation: int = 6144) -> HarmonicMapSeries:
    """Harmonic Koebe map K = H + conj(G) with dilatation z.

    a_n = (2n+1)(n+1)/6 and b_n = (2n-1)(n-1)/6; the default truncation
    keeps the tail negligible on the default scan grid.
    """
    n = np.arange(truncation + 1, dtype=np.float64)
    h = (2.0 * n + 1.0) * (n + 1.0) / 6.0
    g = (2.0 * n - 1.0) * (n - 1.0) / 6.0
    h[0] = 0.0
    g[0] = 0.0
    g[1] = 0.0
    return HarmonicMapSeries(
        AnalyticSeries(h), AnalyticSeries(g), meta={"family": "harmonic-koebe"}
    )


# ---------------------------------------------------------------------------
# Suffridge-style harmonic polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PolynomialSpec:
    """An analytic polynomial Q with a declared degree for the hat transform.

    The hat transform reverses and conjugates coefficients relative to
    hat_degree: Qhat(z) = z^n conj(Q(1/conj(z))), n = hat_degree.
    """

    coeffs: np.ndarray
    hat_degree: int

    def __post_init__(self) -> None:
        arr = np.atleast_1d(np.asarray(self.coeffs, dtype=np.complex128))
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("coeffs must be a nonempty 1-D sequence")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "coeffs", arr)
        if self.hat_degree < self.degree:
            raise ValueError(
                f"hat_degree {self.hat_degree} below polynomial degree {self.degree}"
            )

    @property
    def degree(self) -> int:
        nz = np.nonzero(self.coeffs)[0]
        return int(nz[-1]) if nz.size else 0

    def series(self) -> AnalyticSeries:
        return AnalyticSeries(self.coeffs)


def qhat(q: PolynomialSpec) -> PolynomialSpec:
    """Coefficient reversal with conjugation: chat_k = conj(c_{n-k}).

    Zeros of Q and Qhat on the unit circle coincide; applying the transform
    twice returns Q.
    """
    n = q.hat_degree
    padded = np.zeros(n + 1, dtype=np.complex128)
    padded[: len(q.coeffs)] = q.coeffs
    return PolynomialSpec(np.conj(padded[::-1]), n)


def winding_zero_count(q: PolynomialSpec, radius: float = 1.0 - 1e-3, samples: int = 4096) -> int:
    """Zeros of Q inside |z| < radius by the argument principle.

    Counts the winding of Q around 0 along the sampled circle; raises when
    a sample is too close to a zero to trust the count.
    """
    theta = 2.0 * np.pi * np.arange(samples) / samples
    vals = q.series().eval(radius * np.exp(1j * theta))
    if np.min(np.abs(vals)) < 1e-12:
        raise DomainError("polynomial nearly vanishes on the test circle")
    phases = np.angle(vals)
    jumps = np.diff(np.concatenate([phases, phases[:1]]))
    jumps = (jumps + np.pi) % (2.0 * np.pi) - np.pi
    return int(round(float(np.sum(jumps)) / (2.0 * np.pi)))


@dataclass(frozen=True)
class SuffridgeParams:
    """Angles, co-analytic weight t in [0, 1], and the target degree n."""

    phi: float
    beta: float
    t: float
    target_degree: int

    def __post_init__(self) -> None:
        if not 0.0 <= self.t <= 1.0:
            raise ValueError("t must lie in [0, 1]")
        if self.target_degree < 2:
            raise ValueError("target degree must be >= 2")


def suffridge_family(
    q: PolynomialSpec, params: SuffridgeParams, check_zero_free: bool = True
) -> HarmonicMapSeries:
    """Harmonic polynomial of degree n from Q (Q(0) = 1, deg Q <= n-2):

        h'(z) = Q(z) + e^{i phi} (1-t) z Qhat(z),  g'(z) = e^{i beta} t z Qhat(z)

    with h(0) = g(0) = 0 and the hat transform taken at degree n-2 (the
    choice that makes Q = 1 produce the z^n/n monomial families).  The
    zero-freeness of Q in the disk is a hypothesis: it is checked by a
    winding count on |z| = 1 - 1e-3 unless check_zero_free=False, and the
    outcome is recorded in meta["q_zero_free"].
    """
    n = params.target_degree
    if q.coeffs[0] != 1.0:
        raise DomainError("Q(0) = 1 required")
    if q.degree > n - 2:
        raise DomainError(f"deg Q = {q.degree} exceeds n - 2 = {n - 2}")
    zero_free = "unchecked"
    if check_zero_free:
        if winding_zero_count(q) != 0:
            raise DomainError("Q has a zero inside the unit disk")
        zero_free = "checked"
    hat = qhat(PolynomialSpec(q.coeffs, n - 2))

    hp = np.zeros(n, dtype=np.complex128)
    hp[: len(q.coeffs)] = q.coeffs
    hp[1:] += np.exp(1j * params.phi) * (1.0 - params.t) * hat.coeffs
    gp = np.zeros(n, dtype=np.complex128)
    gp[1:] = np.exp(1j * params.beta) * params.t * hat.coeffs

    h = AnalyticSeries(hp).antiderivative()
    g = AnalyticSeries(gp).antiderivative()
    meta = {
        "family": "suffridge",
        "n": n,
        "phi": params.phi,
        "beta": params.beta,
        "t": params.t,
        "q_zero_free": zero_free,
    }
    return HarmonicMapSeries(h, g, meta=meta)


def suffridge_ch1_margin(q: PolynomialSpec, grid: ScanGrid) -> GridReport:
    """min over the grid of Re Q(z) - |z Qhat(z)|.

    Positive everywhere implies the whole (phi, beta, t) family built from
    Q lands in the close-to-convex class; uses Q's own hat_degree.
    """
    hat = qhat(q)
    qs = q.series()
    hs = hat.series()

    def row(z):
        return qs.eval(z).real - np.abs(z * hs.eval(z))

    return _reduce_scan("suffridge-ch1: Re Q - |z Qhat|", _row_values(row, grid), grid)


def limit_mapping(
    psi: tuple, theta: float = 0.0, truncation: int = 4096
) -> HarmonicMapSeries:
    """Map with h'(z) = 1/prod_{j=1..3}(1 - z e^{i psi_j}), g' = e^{i theta} z h'.

    h' is expanded to the requested order by multiplying three geometric
    series; both parts are integrated termwise with h(0) = g(0) = 0.
    """
    if len(psi) != 3:
        raise ValueError("psi must contain exactly three angles")
    hp = np.array([1.0 + 0.0j])
    for angle in psi:
        factor = np.exp(1j * float(angle) * np.arange(truncation + 1))
        hp = np.convolve(hp, factor)[: truncation + 1]
    h = AnalyticSeries(hp).antiderivative()
    gp = np.zeros(truncation + 2, dtype=np.complex128)
    gp[1:] = np.exp(1j * theta) * hp
    g = AnalyticSeries(gp).antiderivative()
    meta = {
        "family": "limit",
        "psi": tuple(float(x) for x in psi),
        "theta": float(theta),
        "truncation": truncation,
        "convexity_lower": -0.5,
    }
    return HarmonicMapSeries(h, g, meta=meta)


# ---------------------------------------------------------------------------
# hypergeometric families (h = z, co-analytic part from the A_m)
# ---------------------------------------------------------------------------


def hypergeometric_family(spec: FamilySpec, truncation: int = 4096) -> HarmonicMapSeries:
    """Build the harmonic map for the family key in `spec`.

    Polynomial (a = b = -m) parameters terminate exactly and ignore the
    truncation; otherwise the co-analytic part is truncated at the given
    order, which meta records together with the family data.
    """
    fam = _FAMILIES[spec.family]
    p = spec.params
    factor = spec.alpha * (p.c / p.product_ab) if fam.cab_prefactor else spec.alpha

    if p.mode == MODE_NEGATIVE_INTEGER:
        top_m = p.poly_degree
    else:
        top_m = max(truncation - fam.shift, 8)
    coeffs = gauss_coeff_array(p, top_m)

    top_n = top_m + fam.shift
    g = np.zeros(top_n + 1, dtype=np.complex128)
    n_idx = np.arange(fam.start_n, top_n + 1)
    m_idx = n_idx - fam.shift
    if spec.family == "T44a":
        g[n_idx] = factor * coeffs[m_idx] / n_idx
    elif spec.family == "T44b":
        g[n_idx] = factor * coeffs[m_idx] / (n_idx - 1.0)
    else:
        g[n_idx] = factor * coeffs[m_idx]

    meta = {
        "family": spec.family,
        "a": spec.params.a,
        "b": spec.params.b,
        "c": spec.params.c,
        "alpha": spec.alpha,
        "mode": p.mode,
        "truncation": top_n,
        "exact_polynomial": p.mode == MODE_NEGATIVE_INTEGER,
    }
    return HarmonicMapSeries(AnalyticSeries([0.0, 1.0]), AnalyticSeries(g), meta=meta)


def binomial_poly_coeffs(m: int, c: float) -> np.ndarray:
    """Coefficients of F(-m,-m;c;z) in the binomial form
    binom(m,n) (m-n+1)_n / (c)_n — the alternative route that must match
    gauss_coeff_array for the terminating mode."""
    out = np.zeros(m + 1, dtype=np.float64)
    for n in range(m + 1):
        rising = 1.0
        for k in range(n):
            rising *= (m - n + 1.0 + k) / (c + k)
        out[n] = math.comb(m, n) * rising
    return out
