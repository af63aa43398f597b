"""NumPy fallback for the hot kernels.

Mirrors the compiled extension in `_kernels.pyx`: same signatures, same
semantics, same tie-breaking.  `harmomap._backend` picks whichever is
available (the extension wins unless HARMOMAP_KERNELS=py).
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"


def polyval_many(coeffs, points):
    """Evaluate sum c[k] * z**k at every point (Horner, complex).

    Both arguments are 1-D; returns a 1-D complex128 array.
    """
    c = np.ascontiguousarray(coeffs, dtype=np.complex128)
    z = np.ascontiguousarray(points, dtype=np.complex128)
    return np.polynomial.polynomial.polyval(z, c)


def first_crossing(xs, ys, tol=1e-9):
    """First proper self-intersection of the closed polyline (xs, ys).

    Segment k joins point k to point (k+1) mod M.  Adjacent segments are
    skipped; intersections are counted only when strictly interior to both
    segments (parameters in (tol, 1-tol)), so touching endpoints and
    collinear overlaps do not register.  Returns (i, j, t, u) for the
    lexicographically smallest crossing pair, or None.
    """
    xs = np.ascontiguousarray(xs, dtype=np.float64)
    ys = np.ascontiguousarray(ys, dtype=np.float64)
    m = xs.shape[0]
    if m < 4:
        return None
    x2 = np.roll(xs, -1)
    y2 = np.roll(ys, -1)
    bxlo = np.minimum(xs, x2)
    bxhi = np.maximum(xs, x2)
    bylo = np.minimum(ys, y2)
    byhi = np.maximum(ys, y2)
    for i in range(m - 2):
        jhi = m if i > 0 else m - 1
        js = np.arange(i + 2, jhi)
        box = (
            (bxlo[js] <= bxhi[i])
            & (bxhi[js] >= bxlo[i])
            & (bylo[js] <= byhi[i])
            & (byhi[js] >= bylo[i])
        )
        if not box.any():
            continue
        js = js[box]
        rx = x2[i] - xs[i]
        ry = y2[i] - ys[i]
        sx = x2[js] - xs[js]
        sy = y2[js] - ys[js]
        qx = xs[js] - xs[i]
        qy = ys[js] - ys[i]
        den = rx * sy - ry * sx
        ok = den != 0.0
        safe = np.where(ok, den, 1.0)
        t = (qx * sy - qy * sx) / safe
        u = (qx * ry - qy * rx) / safe
        hit = ok & (t > tol) & (t < 1.0 - tol) & (u > tol) & (u < 1.0 - tol)
        if hit.any():
            k = int(np.argmax(hit))
            return int(i), int(js[k]), float(t[k]), float(u[k])
    return None
