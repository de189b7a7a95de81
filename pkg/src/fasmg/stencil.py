"""Matrix-free discrete operators on staggered fields.

The workhorse is the Helmholtz-family operator ``a*p - b*Lap_h(p)`` with the
5-point (2D) or 7-point (3D) Laplacian, applied to cell- or edge-centered
fields.  Alongside it live the staggered first-order operators: gradients
from cell centers to edges, divergence from edges to cell centers, and the
global divergence integral used as an incompressibility diagnostic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import LocationMismatch, UnfilledGhosts
from .grid import Field, GridLevel, Location


@dataclass(frozen=True)
class OperatorCoeffs:
    """Coefficients of ``a*p - b*Lap_h(p)``.

    ``a=b=1`` is the screened-Poisson benchmark operator; an implicit
    momentum step uses ``a=1, b=dt/Re`` (or ``dt/(2 Re)``); the pressure
    update uses ``a=0, b=dt`` and needs a zero-mean right-hand side.
    """

    a: float
    b: float

    def __post_init__(self):
        if self.a < 0 or self.b <= 0:
            raise ValueError(f"need a >= 0 and b > 0, got a={self.a}, b={self.b}")

    def gs_denom(self, h2: float, dim: int) -> float:
        return self.a * h2 + (2 * dim) * self.b


def _require_fresh(p: Field, what: str):
    if not p.ghosts_fresh:
        raise UnfilledGhosts(f"{what} needs fresh ghosts; call fill_ghosts first")


def _interior_bounds(p: Field) -> tuple[int, ...]:
    bounds = []
    for axis in range(p.grid.dim):
        bounds.extend((1, p.interior_extent(axis)))
    return tuple(bounds)


def apply_operator(p: Field, coeffs: OperatorCoeffs, out: Field | None = None) -> Field:
    """Evaluate ``a*p - b*Lap_h(p)`` on interior points."""
    _require_fresh(p, "apply_operator")
    if out is None:
        out = p.like(halo=1)
    inv_h2 = 1.0 / (p.grid.h * p.grid.h)
    args = (out.core, p.core, coeffs.a, coeffs.b, inv_h2, *_interior_bounds(p))
    if p.grid.dim == 2:
        kernels.apply_op_2d(*args)
    else:
        kernels.apply_op_3d(*args)
    out.ghosts_fresh = False
    return out


def residual(f: Field, p: Field, coeffs: OperatorCoeffs,
             out: Field | None = None) -> Field:
    """Pointwise residual ``r = f - (a*p - b*Lap_h(p))``."""
    if f.location is not p.location or f.grid.shape != p.grid.shape:
        raise LocationMismatch(
            f"rhs on {f.location.value}{f.grid.shape} vs "
            f"solution on {p.location.value}{p.grid.shape}"
        )
    _require_fresh(p, "residual")
    if out is None:
        out = p.like(halo=1)
    inv_h2 = 1.0 / (p.grid.h * p.grid.h)
    args = (out.core, p.core, f.core, coeffs.a, coeffs.b, inv_h2,
            *_interior_bounds(p))
    if p.grid.dim == 2:
        kernels.residual_2d(*args)
    else:
        kernels.residual_3d(*args)
    out.ghosts_fresh = False
    return out


_EDGE_OF_AXIS = (Location.EDGE_EW, Location.EDGE_NS, Location.EDGE_TB)


def gradient_cc_to_edges(p: Field, out: tuple[Field, ...] | None = None
                         ) -> tuple[Field, ...]:
    """Staggered gradient: ``(grad p)_x[i+1/2,j] = (p[i+1,j] - p[i,j])/h``
    and per-axis analogs.  Writes interior edge points only."""
    if p.location is not Location.CELL:
        raise LocationMismatch("gradient takes a cell-centered field")
    grid = p.grid
    inv_h = 1.0 / grid.h
    if out is None:
        out = tuple(Field(grid, _EDGE_OF_AXIS[a]) for a in range(grid.dim))
    pc = p.core
    for axis, g in enumerate(out):
        hi = [slice(1, n + 1) for n in grid.shape]
        lo = [slice(1, n + 1) for n in grid.shape]
        hi[axis] = slice(2, grid.shape[axis] + 1)
        lo[axis] = slice(1, grid.shape[axis])
        g.interior[...] = (pc[tuple(hi)] - pc[tuple(lo)]) * inv_h
        g.ghosts_fresh = False
    return out


def gradient_axis(p: Field, axis: int) -> np.ndarray:
    """One component of the staggered gradient as a bare interior array
    (shape of the axis' edge field interior)."""
    if p.location is not Location.CELL:
        raise LocationMismatch("gradient takes a cell-centered field")
    grid = p.grid
    pc = p.core
    hi = [slice(1, n + 1) for n in grid.shape]
    lo = [slice(1, n + 1) for n in grid.shape]
    hi[axis] = slice(2, grid.shape[axis] + 1)
    lo[axis] = slice(1, grid.shape[axis])
    return (pc[tuple(hi)] - pc[tuple(lo)]) * (1.0 / grid.h)


def divergence_edges_to_cc(u: Field, v: Field, w: Field | None = None,
                           out: Field | None = None) -> Field:
    """Staggered divergence at cell centers; reads wall-coincident edge
    values, so the normal components must hold their prescribed values."""
    comps = (u, v) if w is None else (u, v, w)
    grid = u.grid
    if len(comps) != grid.dim:
        raise LocationMismatch(f"{len(comps)} components for a {grid.dim}D grid")
    for axis, c in enumerate(comps):
        if c.location is not _EDGE_OF_AXIS[axis]:
            raise LocationMismatch(
                f"component {axis} is {c.location.value}, expected "
                f"{_EDGE_OF_AXIS[axis].value}"
            )
    if out is None:
        out = Field(grid, Location.CELL)
    inv_h = 1.0 / grid.h
    acc = None
    for axis, c in enumerate(comps):
        cc = c.core
        hi = [slice(1, n + 1) for n in grid.shape]
        lo = [slice(1, n + 1) for n in grid.shape]
        hi[axis] = slice(1, grid.shape[axis] + 1)
        lo[axis] = slice(0, grid.shape[axis])
        term = (cc[tuple(hi)] - cc[tuple(lo)]) * inv_h
        acc = term if acc is None else acc + term
    out.interior[...] = acc
    out.ghosts_fresh = False
    return out


def integral_divergence(u: Field, v: Field, w: Field | None = None) -> float:
    """``h^d * sum over cells`` of the discrete divergence.

    Algebraically this telescopes to the net boundary flux; with exact wall
    values it cancels to machine precision, which makes it a sensitive
    incompressibility diagnostic.  Summed with numpy's pairwise order for
    run-to-run stability.
    """
    div = divergence_edges_to_cc(u, v, w)
    grid = u.grid
    return grid.h ** grid.dim * float(np.sum(div.interior))


def assemble_dense_operator(grid: GridLevel, location: Location,
                            coeffs: OperatorCoeffs, bc) -> np.ndarray:
    """Dense matrix of the operator with ghosts folded in, for small grids.

    Independent cross-check used by tests and kept here because it documents
    the exact boundary closure: a Dirichlet ghost ``2v - p`` adds ``b/h^2``
    to the diagonal (the inhomogeneous part is a RHS contribution, not
    assembled), a Neumann copy subtracts it, periodic wraps, and an
    edge-axis Dirichlet neighbor is a prescribed value (no column).
    """
    from .boundary import AXIS_NAMES

    f = Field(grid, location)
    shape = f.interior_shape
    n = int(np.prod(shape))
    mat = np.zeros((n, n))
    inv_h2 = 1.0 / (grid.h * grid.h)
    dim = grid.dim
    idx = {t: k for k, t in enumerate(np.ndindex(*shape))}
    for t, row in idx.items():
        mat[row, row] += coeffs.a + coeffs.b * 2 * dim * inv_h2
        for axis in range(dim):
            for step in (-1, +1):
                nb = list(t)
                nb[axis] += step
                if 0 <= nb[axis] < shape[axis]:
                    mat[row, idx[tuple(nb)]] -= coeffs.b * inv_h2
                    continue
                face = bc.face(f"{AXIS_NAMES[axis]}{'lo' if step < 0 else 'hi'}")
                if axis == location.edge_axis:
                    if face.kind == "periodic":
                        # wall point = opposite wall point, still prescribed
                        continue
                    # boundary point is prescribed data, no matrix column
                    continue
                if face.kind == "dirichlet":
                    # ghost = 2v - p_interior mirrors the same cell
                    mat[row, row] += coeffs.b * inv_h2
                elif face.kind == "neumann":
                    mat[row, row] -= coeffs.b * inv_h2
                else:  # periodic
                    nb[axis] = nb[axis] % shape[axis]
                    mat[row, idx[tuple(nb)]] -= coeffs.b * inv_h2
    return mat
