"""Numba ``@njit`` kernel implementations (the default backend).

Loop bodies replicate :mod:`fasmg.kernels.numpy_backend` expression by
expression, with the same association order and no fastmath, so the two
backends produce bitwise-identical fields.  Sweep-heavy kernels have a
serial and a ``prange``-parallel variant; the parallel one runs only when
the sweep is large enough to amortize thread startup and more than one
numba thread is configured.  Parity decompositions guarantee no write
conflicts, so results are independent of the worker count.
"""

from __future__ import annotations

import numba as nb
from numba import njit, prange

_JIT = {"cache": True, "nogil": True}

ONE_THIRD = 1.0 / 3.0
TWO_THIRDS = 2.0 / 3.0

# Minimum updated points before a sweep is worth parallelizing.
_PAR_MIN = 1 << 15


def _parallel(npoints) -> bool:
    return npoints >= _PAR_MIN and nb.get_num_threads() > 1


def _start(lo, par):
    return lo + ((par - lo) & 1)


# ---------------------------------------------------------------------------
# Colored Gauss-Seidel sweeps
# ---------------------------------------------------------------------------

@njit(**_JIT)
def _gs_2d_ser(p, f, b, h2, denom, i0, ihi, j0, jhi):
    for i in range(i0, ihi + 1, 2):
        for j in range(j0, jhi + 1, 2):
            nsum = ((p[i + 1, j] + p[i - 1, j]) + p[i, j + 1]) + p[i, j - 1]
            p[i, j] = (h2 * f[i, j] + b * nsum) / denom


@njit(parallel=True, **_JIT)
def _gs_2d_par(p, f, b, h2, denom, i0, ihi, j0, jhi):
    for i in prange(i0, ihi + 1, 2):
        for j in range(j0, jhi + 1, 2):
            nsum = ((p[i + 1, j] + p[i - 1, j]) + p[i, j + 1]) + p[i, j - 1]
            p[i, j] = (h2 * f[i, j] + b * nsum) / denom


def gs_sweep_2d(p, f, b, h2, denom, ilo, ihi, jlo, jhi, ipar, jpar):
    i0, j0 = _start(ilo, ipar), _start(jlo, jpar)
    if i0 > ihi or j0 > jhi:
        return
    if _parallel((ihi - ilo + 1) * (jhi - jlo + 1)):
        _gs_2d_par(p, f, b, h2, denom, i0, ihi, j0, jhi)
    else:
        _gs_2d_ser(p, f, b, h2, denom, i0, ihi, j0, jhi)


@njit(**_JIT)
def _gs_3d_ser(p, f, b, h2, denom, i0, ihi, j0, jhi, k0, khi):
    for i in range(i0, ihi + 1, 2):
        for j in range(j0, jhi + 1, 2):
            for k in range(k0, khi + 1, 2):
                nsum = (((((p[i + 1, j, k] + p[i - 1, j, k]) + p[i, j + 1, k])
                          + p[i, j - 1, k]) + p[i, j, k + 1]) + p[i, j, k - 1])
                p[i, j, k] = (h2 * f[i, j, k] + b * nsum) / denom


@njit(parallel=True, **_JIT)
def _gs_3d_par(p, f, b, h2, denom, i0, ihi, j0, jhi, k0, khi):
    for i in prange(i0, ihi + 1, 2):
        for j in range(j0, jhi + 1, 2):
            for k in range(k0, khi + 1, 2):
                nsum = (((((p[i + 1, j, k] + p[i - 1, j, k]) + p[i, j + 1, k])
                          + p[i, j - 1, k]) + p[i, j, k + 1]) + p[i, j, k - 1])
                p[i, j, k] = (h2 * f[i, j, k] + b * nsum) / denom


def gs_sweep_3d(p, f, b, h2, denom, ilo, ihi, jlo, jhi, klo, khi,
                ipar, jpar, kpar):
    i0, j0, k0 = _start(ilo, ipar), _start(jlo, jpar), _start(klo, kpar)
    if i0 > ihi or j0 > jhi or k0 > khi:
        return
    n = (ihi - ilo + 1) * (jhi - jlo + 1) * (khi - klo + 1)
    if _parallel(n):
        _gs_3d_par(p, f, b, h2, denom, i0, ihi, j0, jhi, k0, khi)
    else:
        _gs_3d_ser(p, f, b, h2, denom, i0, ihi, j0, jhi, k0, khi)


# ---------------------------------------------------------------------------
# Helmholtz-family operator a*p - b*Lap(p) and residual
# ---------------------------------------------------------------------------

@njit(**_JIT)
def _apply_2d_ser(out, p, a, b, inv_h2, ilo, ihi, jlo, jhi):
    for i in range(ilo, ihi + 1):
        for j in range(jlo, jhi + 1):
            c = p[i, j]
            nsum = ((p[i + 1, j] + p[i - 1, j]) + p[i, j + 1]) + p[i, j - 1]
            lap = (nsum - 4.0 * c) * inv_h2
            out[i, j] = a * c - b * lap


@njit(parallel=True, **_JIT)
def _apply_2d_par(out, p, a, b, inv_h2, ilo, ihi, jlo, jhi):
    for i in prange(ilo, ihi + 1):
        for j in range(jlo, jhi + 1):
            c = p[i, j]
            nsum = ((p[i + 1, j] + p[i - 1, j]) + p[i, j + 1]) + p[i, j - 1]
            lap = (nsum - 4.0 * c) * inv_h2
            out[i, j] = a * c - b * lap


def apply_op_2d(out, p, a, b, inv_h2, ilo, ihi, jlo, jhi):
    if _parallel((ihi - ilo + 1) * (jhi - jlo + 1)):
        _apply_2d_par(out, p, a, b, inv_h2, ilo, ihi, jlo, jhi)
    else:
        _apply_2d_ser(out, p, a, b, inv_h2, ilo, ihi, jlo, jhi)


@njit(**_JIT)
def _apply_3d_ser(out, p, a, b, inv_h2, ilo, ihi, jlo, jhi, klo, khi):
    for i in range(ilo, ihi + 1):
        for j in range(jlo, jhi + 1):
            for k in range(klo, khi + 1):
                c = p[i, j, k]
                nsum = (((((p[i + 1, j, k] + p[i - 1, j, k]) + p[i, j + 1, k])
                          + p[i, j - 1, k]) + p[i, j, k + 1]) + p[i, j, k - 1])
                lap = (nsum - 6.0 * c) * inv_h2
                out[i, j, k] = a * c - b * lap


@njit(parallel=True, **_JIT)
def _apply_3d_par(out, p, a, b, inv_h2, ilo, ihi, jlo, jhi, klo, khi):
    for i in prange(ilo, ihi + 1):
        for j in range(jlo, jhi + 1):
            for k in range(klo, khi + 1):
                c = p[i, j, k]
                nsum = (((((p[i + 1, j, k] + p[i - 1, j, k]) + p[i, j + 1, k])
                          + p[i, j - 1, k]) + p[i, j, k + 1]) + p[i, j, k - 1])
                lap = (nsum - 6.0 * c) * inv_h2
                out[i, j, k] = a * c - b * lap


def apply_op_3d(out, p, a, b, inv_h2, ilo, ihi, jlo, jhi, klo, khi):
    n = (ihi - ilo + 1) * (jhi - jlo + 1) * (khi - klo + 1)
    if _parallel(n):
        _apply_3d_par(out, p, a, b, inv_h2, ilo, ihi, jlo, jhi, klo, khi)
    else:
        _apply_3d_ser(out, p, a, b, inv_h2, ilo, ihi, jlo, jhi, klo, khi)


@njit(**_JIT)
def _residual_2d_ser(out, p, fsrc, a, b, inv_h2, ilo, ihi, jlo, jhi):
    for i in range(ilo, ihi + 1):
        for j in range(jlo, jhi + 1):
            c = p[i, j]
            nsum = ((p[i + 1, j] + p[i - 1, j]) + p[i, j + 1]) + p[i, j - 1]
            lap = (nsum - 4.0 * c) * inv_h2
            out[i, j] = fsrc[i, j] - (a * c - b * lap)


@njit(parallel=True, **_JIT)
def _residual_2d_par(out, p, fsrc, a, b, inv_h2, ilo, ihi, jlo, jhi):
    for i in prange(ilo, ihi + 1):
        for j in range(jlo, jhi + 1):
            c = p[i, j]
            nsum = ((p[i + 1, j] + p[i - 1, j]) + p[i, j + 1]) + p[i, j - 1]
            lap = (nsum - 4.0 * c) * inv_h2
            out[i, j] = fsrc[i, j] - (a * c - b * lap)


def residual_2d(out, p, fsrc, a, b, inv_h2, ilo, ihi, jlo, jhi):
    if _parallel((ihi - ilo + 1) * (jhi - jlo + 1)):
        _residual_2d_par(out, p, fsrc, a, b, inv_h2, ilo, ihi, jlo, jhi)
    else:
        _residual_2d_ser(out, p, fsrc, a, b, inv_h2, ilo, ihi, jlo, jhi)


@njit(**_JIT)
def _residual_3d_ser(out, p, fsrc, a, b, inv_h2, ilo, ihi, jlo, jhi, klo, khi):
    for i in range(ilo, ihi + 1):
        for j in range(jlo, jhi + 1):
            for k in range(klo, khi + 1):
                c = p[i, j, k]
                nsum = (((((p[i + 1, j, k] + p[i - 1, j, k]) + p[i, j + 1, k])
                          + p[i, j - 1, k]) + p[i, j, k + 1]) + p[i, j, k - 1])
                lap = (nsum - 6.0 * c) * inv_h2
                out[i, j, k] = fsrc[i, j, k] - (a * c - b * lap)


@njit(parallel=True, **_JIT)
def _residual_3d_par(out, p, fsrc, a, b, inv_h2, ilo, ihi, jlo, jhi, klo, khi):
    for i in prange(ilo, ihi + 1):
        for j in range(jlo, jhi + 1):
            for k in range(klo, khi + 1):
                c = p[i, j, k]
                nsum = (((((p[i + 1, j, k] + p[i - 1, j, k]) + p[i, j + 1, k])
                          + p[i, j - 1, k]) + p[i, j, k + 1]) + p[i, j, k - 1])
                lap = (nsum - 6.0 * c) * inv_h2
                out[i, j, k] = fsrc[i, j, k] - (a * c - b * lap)


def residual_3d(out, p, fsrc, a, b, inv_h2, ilo, ihi, jlo, jhi, klo, khi):
    n = (ihi - ilo + 1) * (jhi - jlo + 1) * (khi - klo + 1)
    if _parallel(n):
        _residual_3d_par(out, p, fsrc, a, b, inv_h2, ilo, ihi, jlo, jhi, klo, khi)
    else:
        _residual_3d_ser(out, p, fsrc, a, b, inv_h2, ilo, ihi, jlo, jhi, klo, khi)


# ---------------------------------------------------------------------------
# Cell-centered transfers
# ---------------------------------------------------------------------------

@njit(**_JIT)
def _restrict_cc_2d(fine, coarse, m0, n0):
    for i in range(1, m0 + 1):
        fi = 2 * i
        for j in range(1, n0 + 1):
            fj = 2 * j
            acc = (((fine[fi - 1, fj - 1] + fine[fi - 1, fj])
                    + fine[fi, fj - 1]) + fine[fi, fj])
            coarse[i, j] = acc * 0.25


def restrict_cc_2d(fine, coarse, m0, n0):
    _restrict_cc_2d(fine, coarse, m0, n0)


@njit(**_JIT)
def _restrict_cc_3d(fine, coarse, m0, n0, l0):
    for i in range(1, m0 + 1):
        fi = 2 * i
        for j in range(1, n0 + 1):
            fj = 2 * j
            for k in range(1, l0 + 1):
                fk = 2 * k
                acc = fine[fi - 1, fj - 1, fk - 1]
                acc = acc + fine[fi - 1, fj - 1, fk]
                acc = acc + fine[fi - 1, fj, fk - 1]
                acc = acc + fine[fi - 1, fj, fk]
                acc = acc + fine[fi, fj - 1, fk - 1]
                acc = acc + fine[fi, fj - 1, fk]
                acc = acc + fine[fi, fj, fk - 1]
                acc = acc + fine[fi, fj, fk]
                coarse[i, j, k] = acc * 0.125


def restrict_cc_3d(fine, coarse, m0, n0, l0):
    _restrict_cc_3d(fine, coarse, m0, n0, l0)


@njit(**_JIT)
def _prolong_cc_2d(coarse, fine, m0, n0):
    for i in range(1, m0 + 1):
        fi = 2 * i
        for j in range(1, n0 + 1):
            fj = 2 * j
            c = coarse[i, j]
            fine[fi - 1, fj - 1] = c
            fine[fi - 1, fj] = c
            fine[fi, fj - 1] = c
            fine[fi, fj] = c


def prolong_cc_2d(coarse, fine, m0, n0):
    _prolong_cc_2d(coarse, fine, m0, n0)


@njit(**_JIT)
def _prolong_cc_3d(coarse, fine, m0, n0, l0):
    for i in range(1, m0 + 1):
        fi = 2 * i
        for j in range(1, n0 + 1):
            fj = 2 * j
            for k in range(1, l0 + 1):
                fk = 2 * k
                c = coarse[i, j, k]
                fine[fi - 1, fj - 1, fk - 1] = c
                fine[fi - 1, fj - 1, fk] = c
                fine[fi - 1, fj, fk - 1] = c
                fine[fi - 1, fj, fk] = c
                fine[fi, fj - 1, fk - 1] = c
                fine[fi, fj - 1, fk] = c
                fine[fi, fj, fk - 1] = c
                fine[fi, fj, fk] = c


def prolong_cc_3d(coarse, fine, m0, n0, l0):
    _prolong_cc_3d(coarse, fine, m0, n0, l0)


# ---------------------------------------------------------------------------
# Edge-centered transfers (edge axis = 0)
# ---------------------------------------------------------------------------

@njit(**_JIT)
def _restrict_edge0_2d(fine, coarse, m0, n0):
    for i in range(1, m0):
        fi = 2 * i
        for j in range(1, n0 + 1):
            fj = 2 * j
            t1 = ((fine[fi - 1, fj - 1] + 2.0 * fine[fi - 1, fj])
                  + fine[fi - 1, fj + 1])
            t2 = ((fine[fi, fj - 1] + 2.0 * fine[fi, fj])
                  + fine[fi, fj + 1])
            coarse[i, j] = (t1 + t2) * 0.125


def restrict_edge0_2d(fine, coarse, m0, n0):
    _restrict_edge0_2d(fine, coarse, m0, n0)


@njit(**_JIT)
def _restrict_edge0_3d(fine, coarse, m0, n0, l0):
    for i in range(1, m0):
        fi = 2 * i
        for j in range(1, n0 + 1):
            fj = 2 * j
            for k in range(1, l0 + 1):
                fk = 2 * k
                acc = 0.0
                for fx in (fi - 1, fi):
                    zm = ((fine[fx, fj - 1, fk - 1] + 2.0 * fine[fx, fj - 1, fk])
                          + fine[fx, fj - 1, fk + 1]) * 0.25
                    zc = ((fine[fx, fj, fk - 1] + 2.0 * fine[fx, fj, fk])
                          + fine[fx, fj, fk + 1]) * 0.25
                    zp = ((fine[fx, fj + 1, fk - 1] + 2.0 * fine[fx, fj + 1, fk])
                          + fine[fx, fj + 1, fk + 1]) * 0.25
                    acc = acc + ((zm + 2.0 * zc) + zp) * 0.25
                coarse[i, j, k] = acc * 0.5


def restrict_edge0_3d(fine, coarse, m0, n0, l0):
    _restrict_edge0_3d(fine, coarse, m0, n0, l0)


@njit(**_JIT)
def _prolong_edge0_2d(coarse, fine, m0, n0):
    for i in range(0, m0 + 1):
        fi = 2 * i
        for j in range(1, n0 + 1):
            fj = 2 * j
            fine[fi, fj - 1] = (3.0 * coarse[i, j] + coarse[i, j - 1]) * 0.25
            fine[fi, fj] = (3.0 * coarse[i, j] + coarse[i, j + 1]) * 0.25
    for i in range(0, m0):
        fi = 2 * i + 1
        for fj in range(1, 2 * n0 + 1):
            fine[fi, fj] = (fine[fi - 1, fj] + fine[fi + 1, fj]) * 0.5


def prolong_edge0_2d(coarse, fine, m0, n0):
    _prolong_edge0_2d(coarse, fine, m0, n0)


@njit(**_JIT)
def _prolong_edge0_3d(coarse, fine, m0, n0, l0):
    for i in range(0, m0 + 1):
        fi = 2 * i
        for j in range(1, n0 + 1):
            fj = 2 * j
            for k in range(1, l0 + 1):
                fk = 2 * k
                for dj in (-1, 1):
                    t_near = (3.0 * coarse[i, j, k] + coarse[i, j + dj, k]) * 0.25
                    for dk in (-1, 1):
                        t_far = (3.0 * coarse[i, j, k + dk]
                                 + coarse[i, j + dj, k + dk]) * 0.25
                        fy = fj - 1 if dj == -1 else fj
                        fz = fk - 1 if dk == -1 else fk
                        fine[fi, fy, fz] = (3.0 * t_near + t_far) * 0.25
    for i in range(0, m0):
        fi = 2 * i + 1
        for fj in range(1, 2 * n0 + 1):
            for fk in range(1, 2 * l0 + 1):
                fine[fi, fj, fk] = (fine[fi - 1, fj, fk] + fine[fi + 1, fj, fk]) * 0.5


def prolong_edge0_3d(coarse, fine, m0, n0, l0):
    _prolong_edge0_3d(coarse, fine, m0, n0, l0)


# ---------------------------------------------------------------------------
# Upwind WENO3 derivative along axis 0
# ---------------------------------------------------------------------------

@njit(inline="always")
def _weno_point(dm2, dm1, dp1, dp2, w, inv_2h, eps):
    if w >= 0.0:
        c0 = 3.0 * dm1 - dm2
        c1 = dm1 + dp1
        r0 = dm1 - dm2
        r1 = dp1 - dm1
    else:
        c0 = 3.0 * dp1 - dp2
        c1 = dp1 + dm1
        r0 = dp1 - dp2
        r1 = dm1 - dp1
    e0 = eps + r0 * r0
    e1 = eps + r1 * r1
    a0 = ONE_THIRD / (e0 * e0)
    a1 = TWO_THIRDS / (e1 * e1)
    return ((a0 * c0 + a1 * c1) / (a0 + a1)) * inv_2h


@njit(**_JIT)
def _weno0_2d_ser(out, q, wind, oi, oj, inv_2h, eps):
    ni, nj = out.shape
    for ii in range(ni):
        i = ii + oi
        for jj in range(nj):
            j = jj + oj
            dm2 = q[i - 1, j] - q[i - 2, j]
            dm1 = q[i, j] - q[i - 1, j]
            dp1 = q[i + 1, j] - q[i, j]
            dp2 = q[i + 2, j] - q[i + 1, j]
            w = wind[ii, jj]
            out[ii, jj] += w * _weno_point(dm2, dm1, dp1, dp2, w, inv_2h, eps)


@njit(parallel=True, **_JIT)
def _weno0_2d_par(out, q, wind, oi, oj, inv_2h, eps):
    ni, nj = out.shape
    for ii in prange(ni):
        i = ii + oi
        for jj in range(nj):
            j = jj + oj
            dm2 = q[i - 1, j] - q[i - 2, j]
            dm1 = q[i, j] - q[i - 1, j]
            dp1 = q[i + 1, j] - q[i, j]
            dp2 = q[i + 2, j] - q[i + 1, j]
            w = wind[ii, jj]
            out[ii, jj] += w * _weno_point(dm2, dm1, dp1, dp2, w, inv_2h, eps)


def weno_deriv0_2d(out, q, wind, oi, oj, inv_2h, eps):
    if _parallel(out.size):
        _weno0_2d_par(out, q, wind, oi, oj, inv_2h, eps)
    else:
        _weno0_2d_ser(out, q, wind, oi, oj, inv_2h, eps)


@njit(**_JIT)
def _weno0_3d_ser(out, q, wind, oi, oj, ok, inv_2h, eps):
    ni, nj, nk = out.shape
    for ii in range(ni):
        i = ii + oi
        for jj in range(nj):
            j = jj + oj
            for kk in range(nk):
                k = kk + ok
                dm2 = q[i - 1, j, k] - q[i - 2, j, k]
                dm1 = q[i, j, k] - q[i - 1, j, k]
                dp1 = q[i + 1, j, k] - q[i, j, k]
                dp2 = q[i + 2, j, k] - q[i + 1, j, k]
                w = wind[ii, jj, kk]
                out[ii, jj, kk] += w * _weno_point(dm2, dm1, dp1, dp2, w,
                                                   inv_2h, eps)


@njit(parallel=True, **_JIT)
def _weno0_3d_par(out, q, wind, oi, oj, ok, inv_2h, eps):
    ni, nj, nk = out.shape
    for ii in prange(ni):
        i = ii + oi
        for jj in range(nj):
            j = jj + oj
            for kk in range(nk):
                k = kk + ok
                dm2 = q[i - 1, j, k] - q[i - 2, j, k]
                dm1 = q[i, j, k] - q[i - 1, j, k]
                dp1 = q[i + 1, j, k] - q[i, j, k]
                dp2 = q[i + 2, j, k] - q[i + 1, j, k]
                w = wind[ii, jj, kk]
                out[ii, jj, kk] += w * _weno_point(dm2, dm1, dp1, dp2, w,
                                                   inv_2h, eps)


def weno_deriv0_3d(out, q, wind, oi, oj, ok, inv_2h, eps):
    if _parallel(out.size):
        _weno0_3d_par(out, q, wind, oi, oj, ok, inv_2h, eps)
    else:
        _weno0_3d_ser(out, q, wind, oi, oj, ok, inv_2h, eps)
