"""Closed-form test problems: exact solutions, right-hand sides, forcings.

Poisson-family benchmark on the unit square/cube, exact solution

    p(x, y[, z]) = prod_axes sin(pi * sin(pi * s)),

which vanishes on the whole boundary.  The "algebraic" right-hand side is
the discrete operator applied to the sampled exact solution (so the only
error left is iteration error); the "asymptotic" right-hand side samples
the continuous ``p - Lap p`` (so discretization error dominates and the
second-order rate is observable).

Unsteady Stokes-like benchmark for the projection schemes, with a forcing
chosen so that

    u =  sin(t) sin^2(pi x) sin(2 pi y)
    v = -sin(t) sin(2 pi x) sin^2(pi y)
    p =  sin(t) (sin(pi y) - 2/pi)

solves the forced momentum equation; the pair (u, v) is solenoidal, the
velocity vanishes on the boundary for all t, and p has zero mean.
"""

from __future__ import annotations

import numpy as np

from .grid import Field, GridLevel, Location


# ---------------------------------------------------------------------------
# Poisson family
# ---------------------------------------------------------------------------

def _g(s):
    return np.sin(np.pi * np.sin(np.pi * s))


def _g2(s):
    """Second derivative of ``sin(pi sin(pi s))``."""
    pi = np.pi
    inner = pi * np.sin(pi * s)
    return (-np.sin(inner) * (pi * pi * np.cos(pi * s)) ** 2
            - np.cos(inner) * pi ** 3 * np.sin(pi * s))


def poisson_exact(grid: GridLevel) -> Field:
    """Exact solution sampled at interior cell centers."""
    out = Field(grid, Location.CELL)
    axes = [_g(grid.cell_coords(a)) for a in range(grid.dim)]
    if grid.dim == 2:
        out.interior[...] = axes[0][:, None] * axes[1][None, :]
    else:
        out.interior[...] = (axes[0][:, None, None] * axes[1][None, :, None]
                             * axes[2][None, None, :])
    return out


def poisson_rhs_continuous(grid: GridLevel) -> Field:
    """Samples of the continuous ``p - Lap p`` at interior cell centers."""
    out = Field(grid, Location.CELL)
    g = [_g(grid.cell_coords(a)) for a in range(grid.dim)]
    g2 = [_g2(grid.cell_coords(a)) for a in range(grid.dim)]
    if grid.dim == 2:
        p = g[0][:, None] * g[1][None, :]
        lap = g2[0][:, None] * g[1][None, :] + g[0][:, None] * g2[1][None, :]
    else:
        p = g[0][:, None, None] * g[1][None, :, None] * g[2][None, None, :]
        lap = (g2[0][:, None, None] * g[1][None, :, None] * g[2][None, None, :]
               + g[0][:, None, None] * g2[1][None, :, None] * g[2][None, None, :]
               + g[0][:, None, None] * g[1][None, :, None] * g2[2][None, None, :])
    out.interior[...] = p - lap
    return out


def poisson_rhs_discrete(grid: GridLevel, coeffs=None) -> Field:
    """Discrete operator applied to the sampled exact solution."""
    from .boundary import BoundaryCondition, fill_ghosts
    from .stencil import OperatorCoeffs, apply_operator

    coeffs = coeffs or OperatorCoeffs(1.0, 1.0)
    p = poisson_exact(grid)
    fill_ghosts(p, BoundaryCondition.dirichlet(grid.dim))
    return apply_operator(p, coeffs)


# ---------------------------------------------------------------------------
# Forced unsteady flow (2D)
# ---------------------------------------------------------------------------

def _mesh(grid: GridLevel, location: Location):
    ea = location.edge_axis
    coords = [
        grid.edge_coords(a)[1:-1] if a == ea else grid.cell_coords(a)
        for a in range(grid.dim)
    ]
    return np.meshgrid(*coords, indexing="ij")


def flow_exact_u(grid: GridLevel, t: float) -> np.ndarray:
    x, y = _mesh(grid, Location.EDGE_EW)
    return np.sin(t) * np.sin(np.pi * x) ** 2 * np.sin(2 * np.pi * y)


def flow_exact_v(grid: GridLevel, t: float) -> np.ndarray:
    x, y = _mesh(grid, Location.EDGE_NS)
    return -np.sin(t) * np.sin(2 * np.pi * x) * np.sin(np.pi * y) ** 2


def flow_exact_p(grid: GridLevel, t: float) -> np.ndarray:
    _, y = _mesh(grid, Location.CELL)
    return np.sin(t) * (np.sin(np.pi * y) - 2.0 / np.pi)


def flow_forcing(component: str, grid: GridLevel, t: float, re: float
                 ) -> np.ndarray:
    """Body force making the fields above an exact solution of the 2D
    momentum equation at Reynolds number ``re``."""
    pi = np.pi
    st, ct = np.sin(t), np.cos(t)
    if component == "u":
        x, y = _mesh(grid, Location.EDGE_EW)
        s2x = np.sin(pi * x) ** 2
        w2y = np.sin(2 * pi * y)
        u = st * s2x * w2y
        v = -st * np.sin(2 * pi * x) * np.sin(pi * y) ** 2
        dt_u = ct * s2x * w2y
        ux = st * pi * np.sin(2 * pi * x) * w2y
        uy = st * s2x * 2 * pi * np.cos(2 * pi * y)
        lap_u = st * (2 * pi ** 2 * np.cos(2 * pi * x) * w2y
                      - 4 * pi ** 2 * s2x * w2y)
        px = 0.0
        return dt_u + u * ux + v * uy - lap_u / re + px
    if component == "v":
        x, y = _mesh(grid, Location.EDGE_NS)
        s2y = np.sin(pi * y) ** 2
        w2x = np.sin(2 * pi * x)
        u = st * np.sin(pi * x) ** 2 * np.sin(2 * pi * y)
        v = -st * w2x * s2y
        dt_v = -ct * w2x * s2y
        vx = -st * 2 * pi * np.cos(2 * pi * x) * s2y
        vy = -st * w2x * pi * np.sin(2 * pi * y)
        lap_v = st * (4 * pi ** 2 * w2x * s2y
                      - 2 * pi ** 2 * w2x * np.cos(2 * pi * y))
        py = st * pi * np.cos(pi * y)
        return dt_v + u * vx + v * vy - lap_v / re + py
    raise ValueError(f"no forcing for component {component!r}")
