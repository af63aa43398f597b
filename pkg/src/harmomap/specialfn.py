"""Gamma, Pochhammer, and Gauss hypergeometric machinery.

Everything here is a pure function of its arguments.  Coefficients A_n of
F(a,b;c;z) are produced by the stable forward recurrence
A_{n+1} = A_n (a+n)(b+n) / ((c+n)(1+n)), never from Gamma quotients.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import Polynomial

from harmomap.errors import ConvergenceError, DomainError, PoleError

__all__ = [
    "MODE_REAL",
    "MODE_CONJUGATE",
    "MODE_NEGATIVE_INTEGER",
    "HypergeometricParams",
    "CoeffSumResult",
    "gamma",
    "pochhammer",
    "gauss_coeff",
    "gauss_coeff_array",
    "gauss_sum",
    "hyp_series",
    "derivative_identity_check",
    "weighted_tail_bound",
]

MODE_REAL = "real-positive-product"
MODE_CONJUGATE = "conjugate-pair"
MODE_NEGATIVE_INTEGER = "negative-integer"

# Lanczos rational approximation, g = 7, 9 terms.  Relative error on the
# |Re z|, |Im z| <= 50 strip is below 1e-12 (checked against an independent
# implementation in the test suite).
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def gamma(z) -> complex:
    """Gamma function on the complex plane.

    Uses the fixed-coefficient Lanczos approximation for Re z >= 0.5 and
    the reflection formula elsewhere.  Raises PoleError at nonpositive
    integers.
    """
    z = complex(z)
    if z.imag == 0.0 and z.real <= 0.0 and z.real == round(z.real):
        raise PoleError(f"gamma has a pole at {z.real:g}")
    if z.real < 0.5:
        return math.pi / (cmath.sin(math.pi * z) * gamma(1.0 - z))
    z -= 1.0
    acc = _LANCZOS[0]
    for i, coef in enumerate(_LANCZOS[1:], start=1):
        acc += coef / (z + i)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (z + 0.5) * cmath.exp(-t) * acc


def pochhammer(a, n: int) -> complex:
    """Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1."""
    if n < 0:
        raise ValueError("pochhammer requires n >= 0")
    out = complex(1.0)
    for k in range(n):
        out *= complex(a) + k
    return out


def _is_real(x, tol: float = 0.0) -> bool:
    return abs(complex(x).imag) <= tol


@dataclass(frozen=True)
class HypergeometricParams:
    """(a, b, c) for F(a,b;c;z) together with the validity mode.

    Modes:
      * real-positive-product: a, b real in (-1, inf) with a*b > 0
      * conjugate-pair: b = conj(a), a != 0
      * negative-integer: a = b = -m for a positive integer m (the series
        terminates; all sums are exact finite sums)

    c must be a positive real, which in particular avoids the poles of
    (c)_n.  Per-theorem extras (e.g. a != 1) are checked by the operations
    that need them.
    """

    a: complex
    b: complex
    c: float
    mode: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "b", complex(self.b))
        object.__setattr__(self, "c", float(self.c))
        if not self.c > 0.0:
            raise DomainError("c must be a positive real number")
        if self.mode == MODE_REAL:
            if not (_is_real(self.a) and _is_real(self.b)):
                raise DomainError("real mode requires real a and b")
            ar, br = self.a.real, self.b.real
            if not (ar > -1.0 and br > -1.0):
                raise DomainError("real mode requires a, b in (-1, inf)")
            if not ar * br > 0.0:
                raise DomainError("real mode requires a*b > 0")
        elif self.mode == MODE_CONJUGATE:
            if self.a == 0:
                raise DomainError("conjugate mode requires a != 0")
            if self.b != self.a.conjugate():
                raise DomainError("conjugate mode requires b = conj(a)")
        elif self.mode == MODE_NEGATIVE_INTEGER:
            if self.a != self.b:
                raise DomainError("negative-integer mode requires a = b")
            m = -self.a.real
            if self.a.imag != 0 or m != round(m) or m < 1:
                raise DomainError("negative-integer mode requires a = b = -m, m >= 1")
        else:
            raise ValueError(f"unknown mode {self.mode!r}")

    # -- canonical constructors ------------------------------------------

    @staticmethod
    def real(a: float, b: float, c: float) -> "HypergeometricParams":
        return HypergeometricParams(a, b, c, MODE_REAL)

    @staticmethod
    def conjugate(a: complex, c: float) -> "HypergeometricParams":
        return HypergeometricParams(a, complex(a).conjugate(), c, MODE_CONJUGATE)

    @staticmethod
    def negative_integer(m: int, c: float) -> "HypergeometricParams":
        return HypergeometricParams(-m, -m, c, MODE_NEGATIVE_INTEGER)

    @staticmethod
    def detect(a: complex, b: complex, c: float) -> "HypergeometricParams":
        """Pick the mode from the values (real preferred over conjugate)."""
        a, b = complex(a), complex(b)
        if a == b and a.imag == 0 and a.real == round(a.real) and a.real <= -1:
            return HypergeometricParams.negative_integer(int(-a.real), c)
        if a.imag == 0 and b.imag == 0:
            return HypergeometricParams.real(a.real, b.real, c)
        return HypergeometricParams(a, b, c, MODE_CONJUGATE)

    # -- derived real quantities -----------------------------------------

    @property
    def sum_ab(self) -> float:
        """Re(a + b); exactly a + b in every admissible mode."""
        return (self.a + self.b).real

    @property
    def product_ab(self) -> float:
        """a*b, real (> 0) in every admissible mode."""
        return (self.a * self.b).real

    @property
    def poly_degree(self) -> int | None:
        """m for the terminating mode, else None."""
        if self.mode == MODE_NEGATIVE_INTEGER:
            return int(round(-self.a.real))
        return None


def gauss_coeff(params: HypergeometricParams, n: int) -> complex:
    """Coefficient A_n = (a)_n (b)_n / ((c)_n (1)_n) via the recurrence."""
    if n < 0:
        raise ValueError("n must be a natural number")
    a, b, c = params.a, params.b, params.c
    out = complex(1.0)
    for k in range(n):
        out *= (a + k) * (b + k) / ((c + k) * (1.0 + k))
    return out


def gauss_coeff_array(params: HypergeometricParams, order: int) -> np.ndarray:
    """A_0..A_order as a real float array (A_n is real in every mode)."""
    s, p, c = params.sum_ab, params.product_ab, params.c
    m = np.arange(order, dtype=np.float64)
    ratios = (m * m + s * m + p) / ((m + c) * (m + 1.0))
    return np.concatenate([[1.0], np.cumprod(ratios)])


def gauss_sum(params: HypergeometricParams) -> float:
    """F(a,b;c;1) = Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b)).

    Requires c > Re(a+b).  The result is provably real in every admissible
    mode; the imaginary round-off is asserted below 1e-10 before being
    dropped.
    """
    a, b, c = params.a, params.b, params.c
    if not params.c > params.sum_ab:
        raise ConvergenceError(
            f"closed form requires c > Re(a+b) (c={params.c:g}, "
            f"Re(a+b)={params.sum_ab:g})"
        )
    val = gamma(c) * gamma(c - a - b) / (gamma(c - a) * gamma(c - b))
    if abs(val.imag) > 1e-10 * max(1.0, abs(val)):
        raise ArithmeticError(f"expected a real value, got {val}")
    return val.real


def _hyp_coeffs_raw(a: complex, b: complex, c: complex, order: int) -> np.ndarray:
    """A_0..A_order for arbitrary complex parameters (no mode checks)."""
    m = np.arange(order, dtype=np.complex128)
    ratios = (a + m) * (b + m) / ((c + m) * (1.0 + m))
    return np.concatenate([[1.0 + 0j], np.cumprod(ratios)])


def hyp_series(params: HypergeometricParams, z: complex, order: int = 2048) -> complex:
    """Truncated series for F(a,b;c;z); |z| <= 0.9 keeps the tail negligible."""
    coeffs = _hyp_coeffs_raw(params.a, params.b, params.c, order)
    return complex(np.polynomial.polynomial.polyval(complex(z), coeffs))


def derivative_identity_check(
    params: HypergeometricParams, z: complex, order: int = 2048
) -> float:
    """Residual |a b F(a+1,b+1;c+1;z) - c F'(a,b;c;z)| from truncated series.

    A self-test quantity: both sides are evaluated independently and the
    residual is expected at round-off level for |z| <= 0.9.
    """
    z = complex(z)
    if abs(z) > 0.9:
        raise DomainError("identity check is calibrated for |z| <= 0.9")
    a, b, c = params.a, params.b, params.c
    shifted = _hyp_coeffs_raw(a + 1, b + 1, c + 1, order)
    lhs = a * b * complex(np.polynomial.polynomial.polyval(z, shifted))
    coeffs = _hyp_coeffs_raw(a, b, c, order)
    dcoeffs = coeffs[1:] * np.arange(1, len(coeffs))
    rhs = c * complex(np.polynomial.polynomial.polyval(z, dcoeffs))
    return abs(lhs - rhs)


@dataclass(frozen=True)
class CoeffSumResult:
    """Value of a nonnegative coefficient sum plus its certification.

    For method="series" the value is the partial sum (a lower bound of the
    true sum) and tail_bound is a certified upper bound on the remainder.
    """

    value: float
    method: str  # "closed-form" | "series"
    truncation: int | None = None
    tail_bound: float | None = None


def _nonneg_on_ray(poly: Polynomial, start: float) -> bool:
    """True when poly(j) > 0 for all j >= start (robust float check)."""
    co = poly.coef.copy()
    scale = max(float(np.abs(co).max()), 1.0)
    while len(co) > 1 and abs(co[-1]) <= 1e-12 * scale:
        co = co[:-1]
    if len(co) == 1:
        return co[0] > 0.0
    if co[-1] <= 0.0:
        return False
    roots = np.roots(co[::-1])
    for r in roots:
        if abs(r.imag) <= 1e-6 * (1.0 + abs(r)) and r.real >= start - 1e-6:
            return False
    return bool(np.polynomial.polynomial.polyval(start, co) > 0.0)


def weighted_tail_bound(
    s: float,
    p: float,
    c: float,
    weight_num,
    weight_den,
    last_index: int,
    last_term: float,
) -> float:
    """Certified upper bound on sum_{m > M} w(m) A_m for nonnegative terms.

    Here A_m are the hypergeometric coefficients determined by the real
    data (s, p, c) = (a+b, ab, c) and w = weight_num/weight_den is a
    positive rational weight; M = last_index and last_term = w(M) A_M
    (any positive prefactor may be folded into last_term).

    Strategy: find kappa > 1 with term ratio rho(j) <= 1 - kappa/(j+c) for
    all j >= M, verified exactly via polynomial positivity; then

        tail <= last_term * (M + c) / (kappa - 1).

    Raises ConvergenceError when no exponent above 1 can be certified.
    """
    wn = Polynomial(list(weight_num))
    wd = Polynomial(list(weight_den))
    lam = (c - s) + (wd.degree() - wn.degree()) + 1.0
    if not lam > 1.0 + 1e-9:
        raise ConvergenceError(
            f"terms decay like m^-{lam:g}; no summable tail exponent above 1"
        )

    quad = Polynomial([p, s, 1.0])  # (j+a)(j+b) with real data
    shift = Polynomial([1.0, 1.0])

    def rho(j: float) -> float:
        return (
            (wn(j + 1.0) / wn(j))
            * (wd(j) / wd(j + 1.0))
            * ((j * j + s * j + p) / ((j + c) * (j + 1.0)))
        )

    n = float(last_index)
    if not rho(n) < 1.0:
        raise ConvergenceError("term ratio has not fallen below 1 at the truncation")

    base = min([lam] + [(j + c) * (1.0 - rho(j)) for j in (n, 2 * n, 8 * n, 64 * n, 1e7)])
    for delta in (0.0, 1e-9, 1e-4, 1e-2, 0.05, 0.1, 0.25, 0.5, 1.0, 2.0):
        kappa = base - delta
        if kappa <= 1.0:
            continue
        lhs = Polynomial([c - kappa, 1.0]) * wn * wd(shift) * Polynomial([1.0, 1.0])
        rhs = wn(shift) * wd * quad
        if _nonneg_on_ray(lhs - rhs, n):
            return last_term * (n + c) / (kappa - 1.0)
    raise ConvergenceError("could not certify a tail exponent above 1")
