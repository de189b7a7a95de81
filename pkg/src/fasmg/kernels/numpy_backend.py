"""Pure-numpy kernel implementations (the fallback backend).

Every kernel here is the reference the numba backend must match bitwise:
expressions are written with explicit association, squares are spelled as
products, and scale factors arrive precomputed from the caller.  Colored
sweeps vectorize exactly because no two points of one parity class are
neighbors of each other.
"""

from __future__ import annotations

import numpy as np

ONE_THIRD = 1.0 / 3.0
TWO_THIRDS = 2.0 / 3.0


def _prng(lo, hi, par):
    """Start of the parity-``par`` index run inside inclusive ``[lo, hi]``."""
    return lo + ((par - lo) & 1)


# ---------------------------------------------------------------------------
# Colored Gauss-Seidel sweeps
# ---------------------------------------------------------------------------

def gs_sweep_2d(p, f, b, h2, denom, ilo, ihi, jlo, jhi, ipar, jpar):
    """In-place update of one parity class:

        p[i,j] = (h2*f[i,j] + b*(((E+W)+N)+S)) / denom

    with ``denom = a*h2 + 4b`` supplied by the caller.  With a=b=1 this is
    the classic five-point update ``(sum of neighbors + h^2 f)/(4 + h^2)``.
    """
    i0, j0 = _prng(ilo, ihi, ipar), _prng(jlo, jhi, jpar)
    if i0 > ihi or j0 > jhi:
        return
    si, sj = slice(i0, ihi + 1, 2), slice(j0, jhi + 1, 2)
    e = p[i0 + 1:ihi + 2:2, sj]
    w = p[i0 - 1:ihi:2, sj]
    n = p[si, j0 + 1:jhi + 2:2]
    s = p[si, j0 - 1:jhi:2]
    nsum = ((e + w) + n) + s
    p[si, sj] = (h2 * f[si, sj] + b * nsum) / denom


def gs_sweep_3d(p, f, b, h2, denom, ilo, ihi, jlo, jhi, klo, khi,
                ipar, jpar, kpar):
    i0, j0, k0 = _prng(ilo, ihi, ipar), _prng(jlo, jhi, jpar), _prng(klo, khi, kpar)
    if i0 > ihi or j0 > jhi or k0 > khi:
        return
    si = slice(i0, ihi + 1, 2)
    sj = slice(j0, jhi + 1, 2)
    sk = slice(k0, khi + 1, 2)
    e = p[i0 + 1:ihi + 2:2, sj, sk]
    w = p[i0 - 1:ihi:2, sj, sk]
    n = p[si, j0 + 1:jhi + 2:2, sk]
    s = p[si, j0 - 1:jhi:2, sk]
    t = p[si, sj, k0 + 1:khi + 2:2]
    bo = p[si, sj, k0 - 1:khi:2]
    nsum = ((((e + w) + n) + s) + t) + bo
    p[si, sj, sk] = (h2 * f[si, sj, sk] + b * nsum) / denom


# ---------------------------------------------------------------------------
# Helmholtz-family operator a*p - b*Lap(p) and residual
# ---------------------------------------------------------------------------

def _lap_2d(p, ilo, ihi, jlo, jhi, inv_h2):
    c = p[ilo:ihi + 1, jlo:jhi + 1]
    e = p[ilo + 1:ihi + 2, jlo:jhi + 1]
    w = p[ilo - 1:ihi, jlo:jhi + 1]
    n = p[ilo:ihi + 1, jlo + 1:jhi + 2]
    s = p[ilo:ihi + 1, jlo - 1:jhi]
    nsum = ((e + w) + n) + s
    return c, (nsum - 4.0 * c) * inv_h2


def _lap_3d(p, ilo, ihi, jlo, jhi, klo, khi, inv_h2):
    c = p[ilo:ihi + 1, jlo:jhi + 1, klo:khi + 1]
    e = p[ilo + 1:ihi + 2, jlo:jhi + 1, klo:khi + 1]
    w = p[ilo - 1:ihi, jlo:jhi + 1, klo:khi + 1]
    n = p[ilo:ihi + 1, jlo + 1:jhi + 2, klo:khi + 1]
    s = p[ilo:ihi + 1, jlo - 1:jhi, klo:khi + 1]
    t = p[ilo:ihi + 1, jlo:jhi + 1, klo + 1:khi + 2]
    bo = p[ilo:ihi + 1, jlo:jhi + 1, klo - 1:khi]
    nsum = ((((e + w) + n) + s) + t) + bo
    return c, (nsum - 6.0 * c) * inv_h2


def apply_op_2d(out, p, a, b, inv_h2, ilo, ihi, jlo, jhi):
    """out = a*p - b*Lap_h(p) on the interior (5-point Laplacian)."""
    c, lap = _lap_2d(p, ilo, ihi, jlo, jhi, inv_h2)
    out[ilo:ihi + 1, jlo:jhi + 1] = a * c - b * lap


def apply_op_3d(out, p, a, b, inv_h2, ilo, ihi, jlo, jhi, klo, khi):
    c, lap = _lap_3d(p, ilo, ihi, jlo, jhi, klo, khi, inv_h2)
    out[ilo:ihi + 1, jlo:jhi + 1, klo:khi + 1] = a * c - b * lap


def residual_2d(out, p, fsrc, a, b, inv_h2, ilo, ihi, jlo, jhi):
    """out = f - (a*p - b*Lap_h(p)) on the interior."""
    c, lap = _lap_2d(p, ilo, ihi, jlo, jhi, inv_h2)
    sl = (slice(ilo, ihi + 1), slice(jlo, jhi + 1))
    out[sl] = fsrc[sl] - (a * c - b * lap)


def residual_3d(out, p, fsrc, a, b, inv_h2, ilo, ihi, jlo, jhi, klo, khi):
    c, lap = _lap_3d(p, ilo, ihi, jlo, jhi, klo, khi, inv_h2)
    sl = (slice(ilo, ihi + 1), slice(jlo, jhi + 1), slice(klo, khi + 1))
    out[sl] = fsrc[sl] - (a * c - b * lap)


# ---------------------------------------------------------------------------
# Cell-centered transfers: 4(8)-point average down, injection up
# ---------------------------------------------------------------------------

def restrict_cc_2d(fine, coarse, m0, n0):
    """coarse[i,j] = mean of its 2x2 fine children."""
    f11 = fine[1:2 * m0:2, 1:2 * n0:2]
    f12 = fine[1:2 * m0:2, 2:2 * n0 + 1:2]
    f21 = fine[2:2 * m0 + 1:2, 1:2 * n0:2]
    f22 = fine[2:2 * m0 + 1:2, 2:2 * n0 + 1:2]
    coarse[1:m0 + 1, 1:n0 + 1] = (((f11 + f12) + f21) + f22) * 0.25


def restrict_cc_3d(fine, coarse, m0, n0, l0):
    si1, si2 = slice(1, 2 * m0, 2), slice(2, 2 * m0 + 1, 2)
    sj1, sj2 = slice(1, 2 * n0, 2), slice(2, 2 * n0 + 1, 2)
    sk1, sk2 = slice(1, 2 * l0, 2), slice(2, 2 * l0 + 1, 2)
    acc = fine[si1, sj1, sk1]
    for si in (si1, si2):
        for sj in (sj1, sj2):
            for sk in (sk1, sk2):
                if (si, sj, sk) == (si1, sj1, sk1):
                    continue
                acc = acc + fine[si, sj, sk]
    coarse[1:m0 + 1, 1:n0 + 1, 1:l0 + 1] = acc * 0.125


def prolong_cc_2d(coarse, fine, m0, n0):
    """Piecewise-constant injection: each coarse value to its 4 children."""
    c = coarse[1:m0 + 1, 1:n0 + 1]
    for si in (slice(1, 2 * m0, 2), slice(2, 2 * m0 + 1, 2)):
        for sj in (slice(1, 2 * n0, 2), slice(2, 2 * n0 + 1, 2)):
            fine[si, sj] = c


def prolong_cc_3d(coarse, fine, m0, n0, l0):
    c = coarse[1:m0 + 1, 1:n0 + 1, 1:l0 + 1]
    for si in (slice(1, 2 * m0, 2), slice(2, 2 * m0 + 1, 2)):
        for sj in (slice(1, 2 * n0, 2), slice(2, 2 * n0 + 1, 2)):
            for sk in (slice(1, 2 * l0, 2), slice(2, 2 * l0 + 1, 2)):
                fine[si, sj, sk] = c


# ---------------------------------------------------------------------------
# Edge-centered transfers (edge axis = 0; other components via axis views)
# ---------------------------------------------------------------------------

def restrict_edge0_2d(fine, coarse, m0, n0):
    """coarse[i,j] = (1,2,1)/4-weighted tangential average at the two fine
    edge columns 2i-1 and 2i, averaged with weight 1/2 each (the fine column
    2i coincides with the coarse edge).  Reads tangential ghosts at j=0 and
    j=n1+1, so the fine field must be freshly filled."""
    sj_m = slice(1, 2 * n0, 2)       # fine row 2j-1
    sj_c = slice(2, 2 * n0 + 1, 2)   # fine row 2j
    sj_p = slice(3, 2 * n0 + 2, 2)   # fine row 2j+1
    t1 = ((fine[1:2 * m0 - 2:2, sj_m] + 2.0 * fine[1:2 * m0 - 2:2, sj_c])
          + fine[1:2 * m0 - 2:2, sj_p])
    t2 = ((fine[2:2 * m0 - 1:2, sj_m] + 2.0 * fine[2:2 * m0 - 1:2, sj_c])
          + fine[2:2 * m0 - 1:2, sj_p])
    coarse[1:m0, 1:n0 + 1] = (t1 + t2) * 0.125


def restrict_edge0_3d(fine, coarse, m0, n0, l0):
    si_m = slice(1, 2 * m0 - 2, 2)   # fine column 2i-1, coarse i = 1..m0-1
    si_c = slice(2, 2 * m0 - 1, 2)   # fine column 2i
    sj = [slice(1, 2 * n0, 2), slice(2, 2 * n0 + 1, 2), slice(3, 2 * n0 + 2, 2)]
    sk = [slice(1, 2 * l0, 2), slice(2, 2 * l0 + 1, 2), slice(3, 2 * l0 + 2, 2)]

    def tang(si):
        rows = []
        for j in range(3):
            zc = ((fine[si, sj[j], sk[0]] + 2.0 * fine[si, sj[j], sk[1]])
                  + fine[si, sj[j], sk[2]]) * 0.25
            rows.append(zc)
        return ((rows[0] + 2.0 * rows[1]) + rows[2]) * 0.25

    coarse[1:m0, 1:n0 + 1, 1:l0 + 1] = (tang(si_m) + tang(si_c)) * 0.5


def prolong_edge0_2d(coarse, fine, m0, n0):
    """Fine edges on coarse edge lines get (3*near + far)/4 tangential
    interpolation; fine edges between coarse lines get the mean of the two
    already-filled neighbors.  Writes fine columns 0..2*m0 over interior
    tangential rows; reads coarse tangential ghosts."""
    c_c = coarse[0:m0 + 1, 1:n0 + 1]
    c_m = coarse[0:m0 + 1, 0:n0]
    c_p = coarse[0:m0 + 1, 2:n0 + 2]
    fine[0:2 * m0 + 1:2, 1:2 * n0:2] = (3.0 * c_c + c_m) * 0.25
    fine[0:2 * m0 + 1:2, 2:2 * n0 + 1:2] = (3.0 * c_c + c_p) * 0.25
    fine[1:2 * m0:2, 1:2 * n0 + 1] = (
        fine[0:2 * m0 - 1:2, 1:2 * n0 + 1] + fine[2:2 * m0 + 1:2, 1:2 * n0 + 1]
    ) * 0.5


def prolong_edge0_3d(coarse, fine, m0, n0, l0):
    si = slice(0, m0 + 1)
    cjs = {-1: slice(0, n0), 0: slice(1, n0 + 1), +1: slice(2, n0 + 2)}
    cks = {-1: slice(0, l0), 0: slice(1, l0 + 1), +1: slice(2, l0 + 2)}
    fjs = {-1: slice(1, 2 * n0, 2), +1: slice(2, 2 * n0 + 1, 2)}
    fks = {-1: slice(1, 2 * l0, 2), +1: slice(2, 2 * l0 + 1, 2)}
    for dj in (-1, +1):
        t_near = (3.0 * coarse[si, cjs[0], cks[0]] + coarse[si, cjs[dj], cks[0]]) * 0.25
        for dk in (-1, +1):
            t_far = (3.0 * coarse[si, cjs[0], cks[dk]]
                     + coarse[si, cjs[dj], cks[dk]]) * 0.25
            fine[0:2 * m0 + 1:2, fjs[dj], fks[dk]] = (3.0 * t_near + t_far) * 0.25
    fine[1:2 * m0:2, 1:2 * n0 + 1, 1:2 * l0 + 1] = (
        fine[0:2 * m0 - 1:2, 1:2 * n0 + 1, 1:2 * l0 + 1]
        + fine[2:2 * m0 + 1:2, 1:2 * n0 + 1, 1:2 * l0 + 1]
    ) * 0.5


# ---------------------------------------------------------------------------
# Upwind WENO3 derivative along axis 0
# ---------------------------------------------------------------------------

def weno_deriv0_2d(out, q, wind, oi, oj, inv_2h, eps):
    """Accumulate ``wind * dq/dx0`` into ``out`` with third-order upwind
    WENO along axis 0.

    Two two-point candidate slopes (one-sided and central) are blended with
    ideal weights (1/3, 2/3) and smoothness indicators equal to squared
    undivided second differences; the upwind side is chosen by the sign of
    ``wind``.  ``out`` and ``wind`` are interior-shaped; ``q`` is the full
    array with the interior origin at ``(oi, oj)`` and a two-point halo.
    """
    ni, nj = out.shape
    sj = slice(oj, oj + nj)
    qm2 = q[oi - 2:oi + ni - 2, sj]
    qm1 = q[oi - 1:oi + ni - 1, sj]
    qc = q[oi:oi + ni, sj]
    qp1 = q[oi + 1:oi + ni + 1, sj]
    qp2 = q[oi + 2:oi + ni + 2, sj]
    out += wind * _weno_blend(qm2, qm1, qc, qp1, qp2, wind, inv_2h, eps)


def weno_deriv0_3d(out, q, wind, oi, oj, ok, inv_2h, eps):
    ni, nj, nk = out.shape
    sj = slice(oj, oj + nj)
    sk = slice(ok, ok + nk)
    qm2 = q[oi - 2:oi + ni - 2, sj, sk]
    qm1 = q[oi - 1:oi + ni - 1, sj, sk]
    qc = q[oi:oi + ni, sj, sk]
    qp1 = q[oi + 1:oi + ni + 1, sj, sk]
    qp2 = q[oi + 2:oi + ni + 2, sj, sk]
    out += wind * _weno_blend(qm2, qm1, qc, qp1, qp2, wind, inv_2h, eps)


def _weno_blend(qm2, qm1, qc, qp1, qp2, wind, inv_2h, eps):
    dm2 = qm1 - qm2
    dm1 = qc - qm1
    dp1 = qp1 - qc
    dp2 = qp2 - qp1
    pos = wind >= 0.0
    c0 = np.where(pos, 3.0 * dm1 - dm2, 3.0 * dp1 - dp2)
    c1 = np.where(pos, dm1 + dp1, dp1 + dm1)
    r0 = np.where(pos, dm1 - dm2, dp1 - dp2)
    r1 = np.where(pos, dp1 - dm1, dm1 - dp1)
    e0 = eps + r0 * r0
    e1 = eps + r1 * r1
    a0 = ONE_THIRD / (e0 * e0)
    a1 = TWO_THIRDS / (e1 * e1)
    return ((a0 * c0 + a1 * c1) / (a0 + a1)) * inv_2h
