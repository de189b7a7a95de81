"""Uniform staggered-grid geometry and field storage.

A level hosts four classes of unknowns on an M x N (x L) cell grid over
``[a_1,b_1] x [a_2,b_2] (x [a_3,b_3])`` with one spacing ``h`` shared by all
axes:

* cell-centered values ``p[i,j]`` at ``x_i = a + (i - 1/2) h``, interior
  indices ``1..M``, plus ghost indices ``0`` and ``M+1`` per axis;
* edge-centered values, e.g. ``u[i+1/2,j]`` at ``x = a + i h``, interior
  indices ``1..M-1``; indices ``0`` and ``M`` land exactly on the domain
  boundary and hold prescribed wall values rather than unknowns.

Arrays are stored with a configurable halo width.  ``halo=1`` is the layout
every stencil kernel sees (one ghost ring for cell axes, boundary points
only for edge axes); ``halo=2`` adds an extra ring used by the wide
convection stencils.  For any halo the ``core`` view strips the extra rings
so that array index equals the grid index above.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import NonDivisibleGrid


class Location(enum.Enum):
    """Grid location class of a field."""

    CELL = "cell"
    EDGE_EW = "edge_ew"  # x-normal edges (u component)
    EDGE_NS = "edge_ns"  # y-normal edges (v component)
    EDGE_TB = "edge_tb"  # z-normal edges (w component)

    @property
    def edge_axis(self) -> int | None:
        return {"cell": None, "edge_ew": 0, "edge_ns": 1, "edge_tb": 2}[self.value]


EDGE_LOCATIONS = (Location.EDGE_EW, Location.EDGE_NS, Location.EDGE_TB)


@dataclass(frozen=True)
class GridLevel:
    """One uniform grid level: cell counts, physical extent and spacing."""

    level: int
    shape: tuple[int, ...]               # cells per axis (M, N[, L])
    domain_min: tuple[float, ...]
    domain_max: tuple[float, ...]

    def __post_init__(self):
        if self.dim not in (2, 3):
            raise ValueError(f"grid must be 2D or 3D, got dim={self.dim}")
        if any(n < 2 for n in self.shape):
            raise ValueError(f"need at least 2 cells per axis, got {self.shape}")
        spacings = [
            (hi - lo) / n
            for lo, hi, n in zip(self.domain_min, self.domain_max, self.shape)
        ]
        h0 = spacings[0]
        if any(abs(h - h0) > 1e-12 * abs(h0) for h in spacings):
            raise ValueError(f"non-uniform spacing {spacings}; all axes must share h")

    @property
    def dim(self) -> int:
        return len(self.shape)

    @property
    def h(self) -> float:
        return (self.domain_max[0] - self.domain_min[0]) / self.shape[0]

    def coarsen(self) -> "GridLevel":
        if any(n % 2 for n in self.shape):
            raise NonDivisibleGrid(f"cannot halve odd-sized grid {self.shape}")
        return GridLevel(
            level=self.level - 1,
            shape=tuple(n // 2 for n in self.shape),
            domain_min=self.domain_min,
            domain_max=self.domain_max,
        )

    # Coordinate helpers (index conventions from the module docstring).
    def cell_coords(self, axis: int) -> np.ndarray:
        """Coordinates of interior cell centers along ``axis`` (index 1..M)."""
        n = self.shape[axis]
        return self.domain_min[axis] + (np.arange(1, n + 1) - 0.5) * self.h

    def edge_coords(self, axis: int) -> np.ndarray:
        """Coordinates of all edge points along ``axis`` (index 0..M)."""
        n = self.shape[axis]
        return self.domain_min[axis] + np.arange(0, n + 1) * self.h


def unit_grid(shape: tuple[int, ...], level: int = 0) -> GridLevel:
    """Grid on the unit square/cube, the setting of every shipped benchmark."""
    dim = len(shape)
    return GridLevel(level, tuple(shape), (0.0,) * dim, (1.0,) * dim)


@dataclass(frozen=True)
class GridHierarchy:
    """Coarsening chain, finest first.  ``levels[0]`` is the fine grid."""

    levels: tuple[GridLevel, ...]

    @property
    def mesh_level(self) -> int:
        return len(self.levels) - 1

    @property
    def fine(self) -> GridLevel:
        return self.levels[0]

    def __iter__(self):
        return iter(self.levels)


def make_hierarchy(fine_grid: GridLevel, mesh_level: int) -> GridHierarchy:
    """Build ``mesh_level + 1`` levels by halving every axis.

    Every level in the chain, the coarsest included, must be even-sized:
    the transfer stencils assume exact 2:1 nesting, so a chain that hits an
    odd size anywhere is rejected.
    """
    if mesh_level < 1:
        raise ValueError(f"mesh_level must be >= 1, got {mesh_level}")
    for axis, n in enumerate(fine_grid.shape):
        for k in range(mesh_level + 1):
            if (n >> k) << k != n or (n >> k) % 2:
                raise NonDivisibleGrid(
                    f"axis {axis} size {n} does not stay even through "
                    f"{mesh_level} coarsenings"
                )
    levels = [fine_grid]
    for _ in range(mesh_level):
        levels.append(levels[-1].coarsen())
    return GridHierarchy(tuple(levels))


class Field:
    """A scalar array on one grid location with a ghost halo.

    ``data`` axis layout for interior extent ``M`` (cells) and halo ``g``:

    * cell axis: length ``M + 2g``, interior slice ``[g : g+M]``;
    * edge axis: length ``M + 1 + 2(g-1)``, interior slice ``[g : g+M-1]``
      (edge index 0 and M are boundary points, extra rings lie beyond them).

    ``ghosts_fresh`` tracks whether the halo matches the current interior;
    operators that read neighbors refuse stale fields rather than silently
    refilling, which catches sequencing mistakes in schedules.
    """

    __slots__ = ("grid", "location", "halo", "data", "ghosts_fresh")

    def __init__(self, grid: GridLevel, location: Location, halo: int = 1,
                 data: np.ndarray | None = None):
        if halo < 1:
            raise ValueError("halo must be >= 1")
        if location.edge_axis is not None and location.edge_axis >= grid.dim:
            raise ValueError(f"{location} not available on a {grid.dim}D grid")
        self.grid = grid
        self.location = location
        self.halo = halo
        shape = self._full_shape()
        if data is None:
            data = np.zeros(shape)
        elif data.shape != shape:
            raise ValueError(f"data shape {data.shape} != expected {shape}")
        self.data = data
        self.ghosts_fresh = False

    def _full_shape(self) -> tuple[int, ...]:
        g = self.halo
        ea = self.location.edge_axis
        return tuple(
            (n + 1 + 2 * (g - 1)) if a == ea else (n + 2 * g)
            for a, n in enumerate(self.grid.shape)
        )

    def interior_extent(self, axis: int) -> int:
        n = self.grid.shape[axis]
        return n - 1 if axis == self.location.edge_axis else n

    @property
    def interior_shape(self) -> tuple[int, ...]:
        return tuple(self.interior_extent(a) for a in range(self.grid.dim))

    @property
    def core(self) -> np.ndarray:
        """Halo-1 view: array index equals grid index on every axis."""
        g = self.halo
        ea = self.location.edge_axis
        sl = tuple(
            slice(g - 1, g - 1 + n + (1 if a == ea else 2))
            for a, n in enumerate(self.grid.shape)
        )
        return self.data[sl]

    @property
    def interior(self) -> np.ndarray:
        g = self.halo
        sl = tuple(
            slice(g, g + self.interior_extent(a)) for a in range(self.grid.dim)
        )
        return self.data[sl]

    @interior.setter
    def interior(self, values):
        self.interior[...] = values

    def copy(self) -> "Field":
        out = Field(self.grid, self.location, self.halo, self.data.copy())
        out.ghosts_fresh = self.ghosts_fresh
        return out

    def like(self, halo: int | None = None) -> "Field":
        """Fresh zero field with the same grid/location."""
        return Field(self.grid, self.location, self.halo if halo is None else halo)

    def assert_finite(self):
        if not np.isfinite(self.interior).all():
            raise FloatingPointError("field interior contains NaN/Inf")

    def __repr__(self):
        return (f"Field({self.location.value}, shape={self.grid.shape}, "
                f"halo={self.halo}, fresh={self.ghosts_fresh})")


def norm_l2_scaled(f: Field | np.ndarray, grid: GridLevel | None = None) -> float:
    """Discrete L2 norm ``h^(d/2) * sqrt(sum of interior squares)``.

    In 2D this is exactly ``h * sqrt(sum r^2)``, the residual measure that
    drives convergence control; the ``h^(d/2)`` factor generalizes it to 3D.
    Uses numpy's pairwise summation so the value is identical across kernel
    backends and run-to-run stable.
    """
    if isinstance(f, Field):
        vals, grid = f.interior, f.grid
    else:
        if grid is None:
            raise ValueError("grid required when passing a bare array")
        vals = f
    return grid.h ** (grid.dim / 2.0) * math.sqrt(float(np.sum(vals * vals)))


def mean_interior(f: Field) -> float:
    """Interior mean, used for nullspace projection of all-Neumann solves."""
    return float(np.mean(f.interior))
