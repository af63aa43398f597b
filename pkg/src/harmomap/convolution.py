"""Convolution kernels characterizing full starlikeness.

Two kernel pairs are implemented: the general one for f = h + conj(g)
(built from the coefficient rules A_n = n + (n-1)(zeta-1)/2 and
B_n = n conj(zeta) - (n-1)(conj(zeta)-1)/2), and the specialized pair for
the dilatation g' = z h'.  Kernels are assembled from coefficient rules,
never from the rational/log closed forms, to avoid cancellation near the
boundary; the closed forms are kept only as cross-check evaluators.
"""

from __future__ import annotations

import cmath

import numpy as np

from harmomap.errors import DomainError
from harmomap.series import AnalyticSeries, HarmonicMapSeries, weighted_antiderivative

__all__ = [
    "starlike_kernel_value",
    "starlike_kernel_closed_forms",
    "mocanu_kernel_value",
    "mocanu_kernel_closed_forms",
    "starlike_kernel_coeffs",
    "mocanu_kernel_coeffs",
    "direct_starlike_ratio",
]


def _check_zeta(zeta: complex) -> complex:
    zeta = complex(zeta)
    if abs(abs(zeta) - 1.0) > 1e-12:
        raise DomainError(f"zeta must be unimodular (got |zeta| = {abs(zeta):.15g})")
    return zeta


def _check_punctured(z: complex) -> complex:
    z = complex(z)
    if z == 0:
        raise DomainError("z = 0 is excluded")
    if abs(z) >= 1.0:
        raise DomainError("requires |z| < 1")
    return z


def starlike_kernel_coeffs(order: int, zeta: complex) -> tuple[np.ndarray, np.ndarray]:
    """(A_n, B_n) for n = 0..order; A_n = n + (n-1)(zeta-1)/2,
    B_n = n conj(zeta) - (n-1)(conj(zeta)-1)/2."""
    n = np.arange(order + 1, dtype=np.complex128)
    zb = np.conj(zeta)
    a = n + (n - 1.0) * (zeta - 1.0) / 2.0
    b = n * zb - (n - 1.0) * (zb - 1.0) / 2.0
    a[0] = 0.0
    b[0] = 0.0
    return a, b


def starlike_kernel_value(f: HarmonicMapSeries, z: complex, zeta: complex) -> complex:
    """(h * A)(z) - conj((g * B)(z)) for the general starlike test.

    For f with b_1 = 0 this is nonzero for all unimodular zeta != -1 and
    0 < |z| < 1 exactly when f is fully starlike; a zero is a witness
    against.  zeta = -1 is allowed here (raw evaluation only).
    """
    z = _check_punctured(z)
    zeta = _check_zeta(zeta)
    if f.b1 != 0:
        raise DomainError("starlike kernel test requires b1 = 0")
    order = max(f.h.truncation_order, f.g.truncation_order)
    ka, kb = starlike_kernel_coeffs(order, zeta)
    ha = AnalyticSeries(f.h.coeffs * ka[: len(f.h.coeffs)])
    gb = AnalyticSeries(f.g.coeffs * kb[: len(f.g.coeffs)])
    return complex(ha.eval(z) - np.conj(gb.eval(z)))


def starlike_kernel_closed_forms(z: complex, zeta: complex) -> tuple[complex, complex]:
    """The displayed rational kernels; cross-check use at moderate |z| only."""
    z = _check_punctured(z)
    zeta = _check_zeta(zeta)
    zb = np.conj(zeta)
    a = (z + ((zeta - 1.0) / 2.0) * z * z) / (1.0 - z) ** 2
    b = (zb * z - ((zb - 1.0) / 2.0) * z * z) / (1.0 - z) ** 2
    return complex(a), complex(b)


def mocanu_kernel_coeffs(order: int, zeta: complex) -> tuple[np.ndarray, np.ndarray]:
    """(A_n, B_n) for the g' = z h' characterization, n = 0..order.

    A_n = 2n + (n-1)(zeta-1); B_n = n(conj(zeta)+1) + n(conj(zeta)-1)/(n+1),
    the coefficients of (2z + (zeta-1) z^2)/(1-z)^2 and of the log-bearing
    second kernel divided by z.
    """
    n = np.arange(order + 1, dtype=np.complex128)
    zb = np.conj(zeta)
    a = 2.0 * n + (n - 1.0) * (zeta - 1.0)
    b = n * (zb + 1.0) + n * (zb - 1.0) / (n + 1.0)
    a[0] = 0.0
    return a, b


def mocanu_kernel_value(h: AnalyticSeries, z: complex, zeta: complex) -> complex:
    """(h * A)(z) - conj((conj(zeta)+1) z^2 h'(z) + (conj(zeta)-1) W(z))
    where W = integral(0..z) t h'(t) dt, for the map f = h + conj(g) with
    g' = z h'.  A zero at admissible (z, zeta != -1) witnesses against full
    starlikeness of f.
    """
    z = _check_punctured(z)
    zeta = _check_zeta(zeta)
    zb = np.conj(zeta)
    order = h.truncation_order
    ka, _ = mocanu_kernel_coeffs(order, zeta)
    front = AnalyticSeries(h.coeffs * ka)

    n = np.arange(len(h.coeffs), dtype=np.complex128)
    z2hp = np.zeros(len(h.coeffs) + 1, dtype=np.complex128)
    z2hp[1:] = n * h.coeffs  # z^2 h' has coefficient n a_n at index n+1
    bracket = AnalyticSeries(
        (zb + 1.0) * z2hp + (zb - 1.0) * weighted_antiderivative(h).coeffs
    )
    return complex(front.eval(z) - np.conj(bracket.eval(z)))


def mocanu_kernel_closed_forms(z: complex, zeta: complex) -> tuple[complex, complex]:
    """Displayed closed forms: A = (2z + (zeta-1) z^2)/(1-z)^2 and
    B = (2z^2 + z(zb-1) + (1-z)^2 (zb-1) log(1-z)) / (z (1-z)^2)."""
    z = _check_punctured(z)
    zeta = _check_zeta(zeta)
    zb = np.conj(zeta)
    a = (2.0 * z + (zeta - 1.0) * z * z) / (1.0 - z) ** 2
    log1mz = cmath.log(1.0 - z)
    b = (2.0 * z * z + z * (zb - 1.0) + (1.0 - z) ** 2 * (zb - 1.0) * log1mz) / (
        z * (1.0 - z) ** 2
    )
    return complex(a), complex(b)


def direct_starlike_ratio(f: HarmonicMapSeries, z: complex) -> complex:
    """(z h'(z) - conj(z g'(z))) / (h(z) + conj(g(z))).

    The real part of this ratio is the angular derivative of arg f along
    the circle through z; positivity on every circle is full starlikeness.
    """
    z = _check_punctured(z)
    num = z * f.h.derivative().eval(z) - np.conj(z * f.g.derivative().eval(z))
    den = f.h.eval(z) + np.conj(f.g.eval(z))
    if den == 0:
        raise DomainError(f"f vanishes at z = {z}; ratio undefined")
    return complex(num / den)
