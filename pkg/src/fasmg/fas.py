"""Full Approximation Storage multigrid: V-cycle and outer solve loop.

One V-cycle on level k (finest is 0):

1. ``s`` smoothing steps;
2. residual ``r = f - L_h(p)``;
3. restrict both the solution and the residual; the coarse right-hand side
   ``f_c = R(r) + L_2h(R(p))`` is accumulated into the restricted-residual
   buffer, so no extra coarse array is needed;
4. recurse (or, on the coarsest level, apply ``s`` smoothing steps instead
   of a direct solve - the solver stays matrix-free);
5. coarse correction ``c = p_c - R(p)`` is prolonged and added;
6. ``s`` smoothing steps.

The outer loop repeats V-cycles until the scaled residual norm drops to
``tol`` or ``k_max`` cycles have run.  Full solutions (not corrections) move
between levels, so coarse levels apply the true boundary condition while
corrections and residuals are transferred under its homogenized form.

For the singular all-Neumann pressure problem (``a = 0``) the right-hand
side mean is removed before the loop and the solution mean after it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .boundary import BoundaryCondition, fill_ghosts
from .grid import Field, GridHierarchy, Location, make_hierarchy, norm_l2_scaled
from .smoothers import SweepPlan, smooth
from .stencil import OperatorCoeffs, apply_operator, residual
from .transfer import prolong, restrict


@dataclass(frozen=True)
class FasParams:
    """User-facing solver knobs: tolerance, cycle cap, smoothing steps per
    stage, and recursion depth."""

    tol: float
    k_max: int
    s: int
    mesh_level: int

    def __post_init__(self):
        if self.tol <= 0 or self.k_max < 1 or self.s < 1 or self.mesh_level < 1:
            raise ValueError(f"invalid solver parameters {self}")


@dataclass
class SolveReport:
    iterations: int
    residual_history: list[float]
    converged: bool

    @property
    def final_residual(self) -> float:
        return self.residual_history[-1] if self.residual_history else float("nan")


class FasSolver:
    """Reusable solver: owns one workspace set per level.

    Building a solver once and calling :meth:`solve` repeatedly is how the
    time steppers avoid reallocating coarse levels every step; the
    workspaces are scratch in the sense of the resident-variable accounting.
    """

    def __init__(self, hierarchy: GridHierarchy, location: Location,
                 bc: BoundaryCondition, plan: SweepPlan, coeffs: OperatorCoeffs):
        self.hierarchy = hierarchy
        self.location = location
        self.bc = bc
        self.bc_homog = bc.homogenized()
        self.plan = plan
        self.coeffs = coeffs
        levels = hierarchy.levels
        nl = len(levels)
        # coarse solution/rhs pairs (k >= 1), residual scratch everywhere,
        # prolongation target on every level that receives a correction
        self._p = [None] + [Field(levels[k], location) for k in range(1, nl)]
        self._f = [None] + [Field(levels[k], location) for k in range(1, nl)]
        self._r = [Field(levels[k], location) for k in range(nl)]
        self._ptmp = [Field(levels[k], location) for k in range(nl - 1)]
        self._pinit = [None] + [
            np.zeros(self._p[k].interior_shape) for k in range(1, nl)
        ]

    # -- one V-cycle -------------------------------------------------------

    def vcycle(self, p: Field, f: Field, s: int) -> Field:
        return self._vcycle(0, p, f, s)

    def _vcycle(self, k: int, p: Field, f: Field, s: int) -> Field:
        for _ in range(s):
            smooth(f, p, self.coeffs, self.plan, self.bc)
        fill_ghosts(p, self.bc)
        r = self._r[k]
        residual(f, p, self.coeffs, out=r)

        p_c, f_c = self._p[k + 1], self._f[k + 1]
        restrict(p, out=p_c)
        fill_ghosts(r, self.bc_homog)
        restrict(r, out=f_c)
        fill_ghosts(p_c, self.bc)
        lp = self._r[k + 1]
        apply_operator(p_c, self.coeffs, out=lp)
        f_c.interior += lp.interior

        self._pinit[k + 1][...] = p_c.interior
        if k + 1 == self.hierarchy.mesh_level:
            for _ in range(s):
                smooth(f_c, p_c, self.coeffs, self.plan, self.bc)
        else:
            self._vcycle(k + 1, p_c, f_c, s)

        p_c.interior -= self._pinit[k + 1]
        p_c.ghosts_fresh = False
        fill_ghosts(p_c, self.bc_homog)
        prolong(p_c, out=self._ptmp[k])
        p.interior += self._ptmp[k].interior
        p.ghosts_fresh = False

        for _ in range(s):
            smooth(f, p, self.coeffs, self.plan, self.bc)
        return p

    # -- outer loop --------------------------------------------------------

    def _singular(self) -> bool:
        return self.coeffs.a == 0.0 and all(
            rule.kind != "dirichlet" for _, rule in self.bc.faces
        )

    def solve(self, p: Field, f: Field, params: FasParams) -> SolveReport:
        """Iterate V-cycles on ``p`` in place until ``res <= tol``.

        For a singular problem the rhs is shifted to zero mean in place and
        the returned solution is shifted to zero mean.
        """
        singular = self._singular()
        if singular:
            f.interior -= np.mean(f.interior)
        history: list[float] = []
        for _ in range(params.k_max):
            self._vcycle(0, p, f, params.s)
            fill_ghosts(p, self.bc)
            residual(f, p, self.coeffs, out=self._r[0])
            res = norm_l2_scaled(self._r[0])
            history.append(res)
            if res <= params.tol:
                break
        if singular:
            p.interior -= np.mean(p.interior)
            p.ghosts_fresh = False
        return SolveReport(
            iterations=len(history),
            residual_history=history,
            converged=bool(history and history[-1] <= params.tol),
        )


def vcycle(p: Field, f: Field, coeffs: OperatorCoeffs, params: FasParams,
           plan: SweepPlan, bc: BoundaryCondition,
           solver: FasSolver | None = None) -> Field:
    """One V-cycle (convenience wrapper building a solver on the fly)."""
    if solver is None:
        hier = make_hierarchy(p.grid, params.mesh_level)
        solver = FasSolver(hier, p.location, bc, plan, coeffs)
    return solver.vcycle(p, f, params.s)


def solve(p0: Field, f: Field, coeffs: OperatorCoeffs, params: FasParams,
          plan: SweepPlan, bc: BoundaryCondition) -> tuple[Field, SolveReport]:
    """Solve ``a p - b Lap(p) = f`` starting from ``p0`` (updated in place)."""
    hier = make_hierarchy(p0.grid, params.mesh_level)
    solver = FasSolver(hier, p0.location, bc, plan, coeffs)
    report = solver.solve(p0, f, params)
    return p0, report
