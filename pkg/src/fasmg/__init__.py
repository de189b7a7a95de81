"""Matrix-free FAS multigrid on uniform staggered grids.

Core pieces: colored Gauss-Seidel smoothers (x/u/z multi-color orderings and
red-black), cell- and edge-centered transfer operators, a recursive FAS
V-cycle with residual-controlled outer loop, and first/second-order
projection schemes for the incompressible Navier-Stokes equations driven by
slot schedules (classical and 8-slot memory-efficient variants).

Kernels run on numba by default with a pure-numpy fallback; see
``fasmg.kernels`` and the ``FASMG_BACKEND`` environment variable.
"""

from .boundary import BoundaryCondition, FaceRule, fill_ghosts
from .errors import (ConfigError, FasmgError, IncompatibleRHS,
                     LocationMismatch, MissingBinding, NonDivisibleGrid,
                     PlanDimMismatch, UnfilledGhosts)
from .fas import FasParams, FasSolver, SolveReport, solve, vcycle
from .grid import (Field, GridHierarchy, GridLevel, Location, make_hierarchy,
                   norm_l2_scaled, unit_grid)
from .smoothers import ColorSet, SweepPlan, gs_update, make_plan, smooth
from .stencil import (OperatorCoeffs, apply_operator, divergence_edges_to_cc,
                      gradient_cc_to_edges, integral_divergence, residual)
from .transfer import (prolong, prolong_cc, prolong_edge, restrict,
                       restrict_cc, restrict_edge)
from .weno import weno3_convect

__version__ = "0.1.0"
