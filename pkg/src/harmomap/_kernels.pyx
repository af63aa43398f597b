# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: dense Horner evaluation and the polyline sweep.

Semantics must match `harmomap._kernels_py` exactly (same tolerance rules,
same tie-breaking); `tests/test_kernels.py` enforces parity.
"""

import numpy as np

BACKEND_NAME = "cython"


def polyval_many(coeffs, points):
    """Evaluate sum c[k] * z**k at every point (Horner, complex)."""
    cdef const double complex[::1] c = np.ascontiguousarray(coeffs, dtype=np.complex128)
    cdef const double complex[::1] z = np.ascontiguousarray(points, dtype=np.complex128)
    out = np.empty(z.shape[0], dtype=np.complex128)
    cdef double complex[::1] o = out
    cdef Py_ssize_t n = c.shape[0]
    cdef Py_ssize_t m = z.shape[0]
    cdef Py_ssize_t i, k
    cdef double complex acc, zz
    for i in range(m):
        zz = z[i]
        acc = c[n - 1]
        for k in range(n - 2, -1, -1):
            acc = acc * zz + c[k]
        o[i] = acc
    return out


def first_crossing(xs, ys, double tol=1e-9):
    """First proper self-intersection of the closed polyline (xs, ys).

    Same contract as the fallback: adjacent segments skipped, crossings
    strictly interior to both segments, smallest (i, j) returned, or None.
    """
    cdef const double[::1] x = np.ascontiguousarray(xs, dtype=np.float64)
    cdef const double[::1] y = np.ascontiguousarray(ys, dtype=np.float64)
    cdef Py_ssize_t m = x.shape[0]
    if m < 4:
        return None
    cdef Py_ssize_t i, j, jhi, inext, jnext
    cdef double x1, y1, x2, y2, x3, y3, x4, y4
    cdef double ilox, ihix, iloy, ihiy
    cdef double rx, ry, sx, sy, qx, qy, den, t, u
    for i in range(m - 2):
        inext = i + 1
        x1 = x[i]; y1 = y[i]; x2 = x[inext]; y2 = y[inext]
        ilox = x1 if x1 < x2 else x2
        ihix = x2 if x1 < x2 else x1
        iloy = y1 if y1 < y2 else y2
        ihiy = y2 if y1 < y2 else y1
        jhi = m if i > 0 else m - 1
        for j in range(i + 2, jhi):
            jnext = j + 1
            if jnext == m:
                jnext = 0
            x3 = x[j]; y3 = y[j]; x4 = x[jnext]; y4 = y[jnext]
            if (x3 if x3 < x4 else x4) > ihix:
                continue
            if (x4 if x3 < x4 else x3) < ilox:
                continue
            if (y3 if y3 < y4 else y4) > ihiy:
                continue
            if (y4 if y3 < y4 else y3) < iloy:
                continue
            rx = x2 - x1; ry = y2 - y1
            sx = x4 - x3; sy = y4 - y3
            den = rx * sy - ry * sx
            if den == 0.0:
                continue
            qx = x3 - x1; qy = y3 - y1
            t = (qx * sy - qy * sx) / den
            u = (qx * ry - qy * rx) / den
            if tol < t < 1.0 - tol and tol < u < 1.0 - tol:
                return int(i), int(j), float(t), float(u)
    return None
