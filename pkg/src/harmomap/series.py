"""Truncated power series and harmonic-map arithmetic on the unit disk.

A harmonic map is represented as f = h + conj(g) with h, g analytic and
truncated to a finite order.  All objects are immutable after construction
and safe to share across threads.
"""

from __future__ import annotations

import json
from dataclasses import InitVar, dataclass, field
from types import MappingProxyType
from typing import Mapping

import numpy as np

from harmomap._backend import kernels
from harmomap.errors import DomainError

#: scans stay inside |z| <= 1 - BOUNDARY_MARGIN to keep truncation error tame
BOUNDARY_MARGIN = 1e-3

__all__ = [
    "BOUNDARY_MARGIN",
    "AnalyticSeries",
    "HarmonicMapSeries",
    "hadamard",
    "weighted_antiderivative",
    "geometric_kernel",
    "derivative_kernel",
    "log_kernel",
    "map_to_dict",
    "map_from_dict",
    "save_coeffs",
    "load_coeffs",
]


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, dtype=np.complex128, copy=True)
    arr.flags.writeable = False
    return arr


def _require_in_disk(z: np.ndarray) -> None:
    if np.any(np.abs(z) >= 1.0):
        raise DomainError("evaluation requires |z| < 1 (unit disk)")


@dataclass(frozen=True, eq=False)
class AnalyticSeries:
    """Coefficients c[0..N] of sum_n c[n] z^n, defined on |z| < 1.

    Trailing zero coefficients are allowed; the truncation order N is
    len(coeffs) - 1 and is reported by consumers of the series.
    """

    coeffs: np.ndarray

    def __post_init__(self) -> None:
        arr = np.atleast_1d(np.asarray(self.coeffs, dtype=np.complex128))
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("coeffs must be a nonempty 1-D sequence")
        object.__setattr__(self, "coeffs", _freeze(arr))

    @property
    def truncation_order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def degree(self) -> int:
        """Index of the last nonzero coefficient (0 for the zero series)."""
        nz = np.nonzero(self.coeffs)[0]
        return int(nz[-1]) if nz.size else 0

    def eval(self, z):
        """Evaluate by nested (Horner) multiplication; scalar in, scalar out."""
        zarr = np.asarray(z, dtype=np.complex128)
        _require_in_disk(zarr)
        flat = np.ascontiguousarray(zarr.reshape(-1))
        vals = np.asarray(kernels.polyval_many(self.coeffs, flat))
        if zarr.ndim == 0:
            return complex(vals[0])
        return vals.reshape(zarr.shape)

    def derivative(self) -> "AnalyticSeries":
        c = self.coeffs
        if len(c) == 1:
            return AnalyticSeries(np.zeros(1))
        return AnalyticSeries(c[1:] * np.arange(1, len(c)))

    def antiderivative(self) -> "AnalyticSeries":
        """Termwise integral with value 0 at the origin."""
        c = self.coeffs
        out = np.zeros(len(c) + 1, dtype=np.complex128)
        out[1:] = c / np.arange(1, len(c) + 1)
        return AnalyticSeries(out)

    def __len__(self) -> int:
        return len(self.coeffs)


@dataclass(frozen=True, eq=False)
class HarmonicMapSeries:
    """f = h + conj(g) with the normalization f(0) = 0, f_z(0) = 1.

    `strict=False` relaxes the normalization check (used for ad-hoc maps
    such as pure anti-holomorphic test cases).  `meta` carries constructor
    provenance (family name, parameters, certified flags); it does not
    affect any numerics.
    """

    h: AnalyticSeries
    g: AnalyticSeries
    meta: Mapping = field(default_factory=dict)
    strict: InitVar[bool] = True

    def __post_init__(self, strict: bool) -> None:
        if strict:
            if self.h.coeffs[0] != 0 or len(self.h) < 2 or self.h.coeffs[1] != 1:
                raise ValueError("analytic part must have h(0)=0 and h'(0)=1")
            if self.g.coeffs[0] != 0:
                raise ValueError("co-analytic part must have g(0)=0")
        object.__setattr__(self, "meta", MappingProxyType(dict(self.meta)))

    @property
    def b1(self) -> complex:
        return complex(self.g.coeffs[1]) if len(self.g) > 1 else 0j

    def eval(self, z):
        """f(z) = h(z) + conj(g(z)) for |z| < 1."""
        return self.h.eval(z) + np.conj(self.g.eval(z))

    def partials(self, z):
        """(f_z, f_zbar) = (h'(z), conj(g'(z)))."""
        return self.h.derivative().eval(z), np.conj(self.g.derivative().eval(z))

    def jacobian(self, z):
        """|h'(z)|^2 - |g'(z)|^2; positive where f is sense-preserving."""
        fz, fzb = self.partials(z)
        return np.abs(fz) ** 2 - np.abs(fzb) ** 2

    def d_operator(self, z):
        """D f = z f_z - conj(z) f_zbar (the angular-derivative operator)."""
        zarr = np.asarray(z, dtype=np.complex128)
        fz, fzb = self.partials(zarr)
        out = zarr * fz - np.conj(zarr) * fzb
        return complex(out) if zarr.ndim == 0 else out


def hadamard(p: AnalyticSeries, q: AnalyticSeries) -> AnalyticSeries:
    """Coefficientwise (Hadamard) product; shorter operand zero-padded.

    The result keeps the larger truncation order so no stored coefficient
    is silently dropped.
    """
    n = max(len(p), len(q))
    a = np.zeros(n, dtype=np.complex128)
    b = np.zeros(n, dtype=np.complex128)
    a[: len(p)] = p.coeffs
    b[: len(q)] = q.coeffs
    return AnalyticSeries(a * b)


def weighted_antiderivative(h: AnalyticSeries) -> AnalyticSeries:
    """Series of integral(0..z) t h'(t) dt; coefficient n*a_n/(n+1) at n+1."""
    c = h.coeffs
    if c[0] != 0:
        raise ValueError("weighted antiderivative requires h(0) = 0")
    n = np.arange(len(c))
    out = np.zeros(len(c) + 1, dtype=np.complex128)
    out[1:] = n * c / (n + 1.0)
    return AnalyticSeries(out)


def geometric_kernel(order: int) -> AnalyticSeries:
    """z/(1-z): coefficient 1 for every n >= 1 (Hadamard identity kernel)."""
    c = np.ones(order + 1, dtype=np.complex128)
    c[0] = 0.0
    return AnalyticSeries(c)


def derivative_kernel(order: int) -> AnalyticSeries:
    """z/(1-z)^2: coefficient n; Hadamard product with it maps h to z h'."""
    return AnalyticSeries(np.arange(order + 1, dtype=np.complex128))


def log_kernel(order: int) -> AnalyticSeries:
    """log(1-z): coefficient -1/n for n >= 1."""
    c = np.zeros(order + 1, dtype=np.complex128)
    c[1:] = -1.0 / np.arange(1, order + 1)
    return AnalyticSeries(c)


# ---------------------------------------------------------------------------
# coefficient file format: {"h": [[re, im], ...], "b": [[re, im], ...]}
# index = power of z; round-trips to at least 17 significant digits.
# ---------------------------------------------------------------------------


def _pairs(arr: np.ndarray) -> list:
    return [[float(c.real), float(c.imag)] for c in arr]


def _unpairs(pairs) -> np.ndarray:
    try:
        return np.array([complex(re, im) for re, im in pairs], dtype=np.complex128)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"malformed coefficient list: {exc}") from exc


def map_to_dict(f: HarmonicMapSeries) -> dict:
    return {"h": _pairs(f.h.coeffs), "b": _pairs(f.g.coeffs)}


def map_from_dict(record: Mapping, strict: bool = True) -> HarmonicMapSeries:
    if "h" not in record or "b" not in record:
        raise ValueError("coefficient record needs 'h' and 'b' entries")
    return HarmonicMapSeries(
        AnalyticSeries(_unpairs(record["h"])),
        AnalyticSeries(_unpairs(record["b"])),
        strict=strict,
    )


def save_coeffs(f: HarmonicMapSeries, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(map_to_dict(f), fh)


def load_coeffs(path, strict: bool = True) -> HarmonicMapSeries:
    with open(path, "r", encoding="utf-8") as fh:
        record = json.load(fh)
    return map_from_dict(record, strict=strict)
