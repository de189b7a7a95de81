"""Intergrid transfers between consecutive levels, cell- and edge-centered.

Cell-centered: restriction is the 4-point (8-point in 3D) block average,
prolongation is piecewise-constant injection to the block children; the two
compose to the identity on coarse fields.

Edge-centered (written for the x-edge case, other components by axis
symmetry): restriction applies (1,2,1)/4 weights along each tangential axis
at the two fine edge columns ``2i-1`` and ``2i`` and averages them; the fine
column ``2i`` coincides with the coarse edge.  Prolongation fills fine edges
on coarse edge lines with the second-order tangential interpolation
``(3*near + far)/4`` per tangential axis, then fills the in-between columns
with the mean of their two filled neighbors.  Both read one tangential
ghost ring, so inputs must be freshly filled; both write interiors plus (for
prolongation) the wall-coincident columns, and outputs are returned with
stale ghosts.
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .errors import UnfilledGhosts
from .grid import Field, GridLevel, Location


def _coarse_grid(fine: GridLevel) -> GridLevel:
    return fine.coarsen()


def _fine_grid(coarse: GridLevel) -> GridLevel:
    return GridLevel(
        level=coarse.level + 1,
        shape=tuple(2 * n for n in coarse.shape),
        domain_min=coarse.domain_min,
        domain_max=coarse.domain_max,
    )


def _edge_views(f: Field):
    """Core view with the edge axis moved first, plus the permuted shape."""
    ea = f.location.edge_axis
    perm = (ea, *(a for a in range(f.grid.dim) if a != ea))
    return np.moveaxis(f.core, ea, 0), perm


def restrict_cc(fine: Field, out: Field | None = None) -> Field:
    if fine.location is not Location.CELL:
        raise ValueError("restrict_cc takes a cell-centered field")
    if out is None:
        out = Field(_coarse_grid(fine.grid), Location.CELL)
    shape = out.grid.shape
    if fine.grid.dim == 2:
        kernels.restrict_cc_2d(fine.core, out.core, *shape)
    else:
        kernels.restrict_cc_3d(fine.core, out.core, *shape)
    out.ghosts_fresh = False
    return out


def prolong_cc(coarse: Field, out: Field | None = None) -> Field:
    if coarse.location is not Location.CELL:
        raise ValueError("prolong_cc takes a cell-centered field")
    if out is None:
        out = Field(_fine_grid(coarse.grid), Location.CELL)
    shape = coarse.grid.shape
    if coarse.grid.dim == 2:
        kernels.prolong_cc_2d(coarse.core, out.core, *shape)
    else:
        kernels.prolong_cc_3d(coarse.core, out.core, *shape)
    out.ghosts_fresh = False
    return out


def restrict_edge(fine: Field, out: Field | None = None) -> Field:
    if fine.location.edge_axis is None:
        raise ValueError("restrict_edge takes an edge-centered field")
    if not fine.ghosts_fresh:
        raise UnfilledGhosts("restrict_edge reads tangential ghosts")
    if out is None:
        out = Field(_coarse_grid(fine.grid), fine.location)
    fv, perm = _edge_views(fine)
    ov, _ = _edge_views(out)
    shape = tuple(out.grid.shape[a] for a in perm)
    if fine.grid.dim == 2:
        kernels.restrict_edge0_2d(fv, ov, *shape)
    else:
        kernels.restrict_edge0_3d(fv, ov, *shape)
    out.ghosts_fresh = False
    return out


def prolong_edge(coarse: Field, out: Field | None = None) -> Field:
    if coarse.location.edge_axis is None:
        raise ValueError("prolong_edge takes an edge-centered field")
    if not coarse.ghosts_fresh:
        raise UnfilledGhosts("prolong_edge reads tangential ghosts")
    if out is None:
        out = Field(_fine_grid(coarse.grid), coarse.location)
    cv, perm = _edge_views(coarse)
    ov, _ = _edge_views(out)
    shape = tuple(coarse.grid.shape[a] for a in perm)
    if coarse.grid.dim == 2:
        kernels.prolong_edge0_2d(cv, ov, *shape)
    else:
        kernels.prolong_edge0_3d(cv, ov, *shape)
    out.ghosts_fresh = False
    return out


def restrict(fine: Field, out: Field | None = None) -> Field:
    """Location-dispatching restriction."""
    if fine.location is Location.CELL:
        return restrict_cc(fine, out)
    return restrict_edge(fine, out)


def prolong(coarse: Field, out: Field | None = None) -> Field:
    """Location-dispatching prolongation."""
    if coarse.location is Location.CELL:
        return prolong_cc(coarse, out)
    return prolong_edge(coarse, out)
