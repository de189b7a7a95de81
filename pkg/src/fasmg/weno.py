"""Third-order upwind WENO convection for staggered velocity fields.

Computes ``(u . grad) q`` for one velocity component ``q`` at its native
edge points.  Per axis, the derivative uses two two-point candidate slopes
blended with ideal weights (1/3, 2/3) and smoothness indicators equal to
squared undivided second differences, regularized by ``eps``; the upwind
side follows the sign of the advecting velocity at the target point.

Advecting components that live elsewhere on the MAC cell are moved to the
target's points by two-point averaging per mismatched axis (four values in
total), the standard staggered collocation fix.  The wide stencil reads two
halo rings, so velocity fields here carry ``halo=2``.
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .errors import LocationMismatch, UnfilledGhosts
from .grid import Field

WENO_EPS = 1e-6


def _avg_to_target(adv: Field, target_axis: int) -> np.ndarray:
    """Average an advecting component onto the target component's interior
    points.  ``0.25 * ((a + b) + (c + d))`` over the two offsets along the
    target's edge axis and the two along the advecting component's own."""
    adv_axis = adv.location.edge_axis
    core = adv.core
    dim = adv.grid.dim

    def pick(d_target, d_adv):
        sl = []
        for axis in range(dim):
            n_int = adv.grid.shape[axis] - (1 if axis == adv_axis else 0)
            if axis == target_axis:
                # target interior along its edge axis is 1..M-1; advecting
                # values sit at cells i and i+1 around the target edge
                lo = 1 + d_target
                sl.append(slice(lo, lo + adv.grid.shape[axis] - 1))
            elif axis == adv_axis:
                # target is cell-located here; edges j-1 and j surround it
                lo = 0 + d_adv
                sl.append(slice(lo, lo + adv.grid.shape[axis]))
            else:
                sl.append(slice(1, 1 + n_int))
        return core[tuple(sl)]

    return 0.25 * ((pick(0, 0) + pick(0, 1)) + (pick(1, 0) + pick(1, 1)))


def weno3_convect(vel: tuple[Field, ...], target: int,
                  out: Field | None = None, eps: float = WENO_EPS) -> Field:
    """Convection of component ``target`` by the velocity tuple ``vel``.

    Returns a field on the target's location whose interior holds
    ``sum_axis  wind_axis * d(q)/d(axis)``; ghosts are left stale.
    """
    q = vel[target]
    dim = q.grid.dim
    if len(vel) != dim:
        raise LocationMismatch(f"{len(vel)} velocity components on a {dim}D grid")
    for c in vel:
        if c.halo < 2:
            raise ValueError("weno3_convect needs velocity fields with halo >= 2")
        if not c.ghosts_fresh:
            raise UnfilledGhosts("weno3_convect needs fresh velocity ghosts")

    conv = np.zeros(q.interior_shape)
    inv_2h = 0.5 / q.grid.h
    g = q.halo
    for axis in range(dim):
        if axis == target:
            wind = np.ascontiguousarray(q.interior)
        else:
            wind = np.ascontiguousarray(_avg_to_target(vel[axis], target))
        conv_v = np.moveaxis(conv, axis, 0)
        q_v = np.moveaxis(q.data, axis, 0)
        wind_v = np.moveaxis(wind, axis, 0)
        if dim == 2:
            kernels.weno_deriv0_2d(conv_v, q_v, wind_v, g, g, inv_2h, eps)
        else:
            kernels.weno_deriv0_3d(conv_v, q_v, wind_v, g, g, g, inv_2h, eps)

    if out is None:
        out = Field(q.grid, q.location)
    out.interior[...] = conv
    out.ghosts_fresh = False
    return out
