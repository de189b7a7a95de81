"""Colored Gauss-Seidel smoothing: pointwise update plus sweep drivers.

The pointwise rule for ``a*p - b*Lap_h(p) = f`` is

    p[i,j] <- (h^2 f[i,j] + b * sum of 2d neighbors) / (a h^2 + 2d b),

which with ``a = b = 1`` in 2D is the classic ``(sum + h^2 f)/(4 + h^2)``.
Grid points are partitioned by index parity so every class updates in
parallel without read/write conflicts:

* ``x`` shape visits (odd,even), (even,odd), (even,even), (odd,odd) - the
  diagonal-pair order.  Its first two classes do not read each other, nor
  do the last two, so the sweep is equivalent to red-black Gauss-Seidel
  while staying branch-free and fully vectorizable.
* ``u`` and ``z`` shapes visit the four 2x2 sub-block positions in
  boustrophedon and raster order respectively (slower; kept for the
  ordering comparison).
* ``rbgs`` uses the two classes of ``(i+j) mod 2``; each class is swept as
  its two parity sub-classes back to back without a ghost refresh between
  them, which is exactly the simultaneous red/black update.

In 3D the ``x`` shape visits the eight parity triples in the order
(o,e,e), (e,o,e), (e,e,o), (o,o,o), (o,e,o), (e,o,o), (e,e,e), (o,o,e).

One ``smooth`` call is one smoothing step.  The default sequence runs the
color list twice forward (``ff``); ``fb`` appends the reversed list instead,
the symmetric variant.  Ghosts are refreshed before every color sub-sweep,
preserving Gauss-Seidel semantics at the boundary.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .boundary import BoundaryCondition, fill_ghosts
from .errors import PlanDimMismatch, UnfilledGhosts
from .grid import Field
from .stencil import OperatorCoeffs

_X_2D = ((1, 0), (0, 1), (0, 0), (1, 1))
_U_2D = ((1, 1), (0, 1), (0, 0), (1, 0))
_Z_2D = ((1, 1), (0, 1), (1, 0), (0, 0))
_X_3D = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1),
         (1, 0, 1), (0, 1, 1), (0, 0, 0), (1, 1, 0))


@dataclass(frozen=True)
class ColorSet:
    """One update class: either an index-parity tuple or a diagonal class
    (parity of the index sum), the latter decomposed into parity tuples for
    the kernels."""

    kind: str                    # "axis" | "diag"
    parities: tuple[int, ...]    # per-axis parity, or (sum parity,)

    def subsets(self, dim: int) -> tuple[tuple[int, ...], ...]:
        if self.kind == "axis":
            if len(self.parities) != dim:
                raise PlanDimMismatch(
                    f"color {self.parities} is {len(self.parities)}D, grid is {dim}D"
                )
            return (self.parities,)
        want = self.parities[0]
        base = _X_2D if dim == 2 else _X_3D
        return tuple(t for t in base if sum(t) % 2 == want)


@dataclass(frozen=True)
class SweepPlan:
    """Ordered color visits of one smoothing step."""

    shape: str
    dim: int
    sequence: tuple[ColorSet, ...]

    def __post_init__(self):
        seen = set()
        for c in self.sequence:
            seen.update(c.subsets(self.dim))
        if len(seen) != 2 ** self.dim:
            raise PlanDimMismatch(
                f"plan visits {len(seen)} of {2 ** self.dim} parity classes"
            )


def make_plan(shape: str, dim: int, sequence: str = "ff") -> SweepPlan:
    """Build a sweep plan.  ``sequence`` is ``ff`` (two forward passes) or
    ``fb`` (forward then backward)."""
    shape = shape.lower()
    if shape == "rbgs":
        base = [ColorSet("diag", (1,)), ColorSet("diag", (0,))]
    elif shape == "x":
        order = _X_2D if dim == 2 else _X_3D
        base = [ColorSet("axis", t) for t in order]
    elif shape in ("u", "z"):
        if dim != 2:
            raise PlanDimMismatch(f"{shape}-shape ordering is defined in 2D only")
        base = [ColorSet("axis", t) for t in (_U_2D if shape == "u" else _Z_2D)]
    else:
        raise ValueError(f"unknown sweep shape {shape!r}")
    if sequence == "ff":
        seq = base + base
    elif sequence == "fb":
        seq = base + base[::-1]
    elif sequence == "single":
        seq = base
    else:
        raise ValueError(f"unknown sequence {sequence!r}")
    return SweepPlan(shape, dim, tuple(seq))


def _bounds(p: Field) -> tuple[int, ...]:
    b = []
    for axis in range(p.grid.dim):
        b.extend((1, p.interior_extent(axis)))
    return tuple(b)


def gs_update(f: Field, p: Field, coeffs: OperatorCoeffs, color: ColorSet) -> Field:
    """One in-place colored update; ghosts must be fresh for the current
    array state.  Within a class the result is traversal-order independent,
    since parity keeps same-class points out of each other's stencils."""
    if not p.ghosts_fresh:
        raise UnfilledGhosts("gs_update needs fresh ghosts")
    dim = p.grid.dim
    h2 = p.grid.h * p.grid.h
    denom = coeffs.gs_denom(h2, dim)
    sweep = kernels.gs_sweep_2d if dim == 2 else kernels.gs_sweep_3d
    for sub in color.subsets(dim):
        sweep(p.core, f.core, coeffs.b, h2, denom, *_bounds(p), *sub)
    p.ghosts_fresh = False
    return p


def smooth(f: Field, p: Field, coeffs: OperatorCoeffs, plan: SweepPlan,
           bc: BoundaryCondition) -> Field:
    """One smoothing step: execute the plan's color sequence, refreshing
    ghosts before each color sub-sweep.  Leaves ghosts stale."""
    if plan.dim != p.grid.dim:
        raise PlanDimMismatch(f"plan is {plan.dim}D, field is {p.grid.dim}D")
    dim = p.grid.dim
    h2 = p.grid.h * p.grid.h
    denom = coeffs.gs_denom(h2, dim)
    sweep = kernels.gs_sweep_2d if dim == 2 else kernels.gs_sweep_3d
    pc, fc = p.core, f.core
    bounds = _bounds(p)
    for color in plan.sequence:
        fill_ghosts(p, bc)
        for sub in color.subsets(dim):
            sweep(pc, fc, coeffs.b, h2, denom, *bounds, *sub)
    p.ghosts_fresh = False
    return p
