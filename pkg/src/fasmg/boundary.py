"""Boundary conditions applied through ghost and boundary points.

Three rules per face:

* ``dirichlet`` (reflected): the wall value ``v`` is imposed to second order
  by ``ghost = 2 v - mirror``.  On an axis where the field is edge-centered
  the wall point itself exists and is set to ``v`` directly (a moving-lid
  tangential speed is the same rule with nonzero ``v``).
* ``neumann`` (copy): ``ghost = mirror``, zero normal derivative.
* ``periodic``: ghosts wrap to the opposite interior; on an edge axis the
  high boundary point is identified with the low one.

Fill order is fixed: higher axes first, the x pass last, so corner cells are
written by exactly one designated pass and the fill is idempotent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grid import Field

AXIS_NAMES = "xyz"
_KINDS = ("dirichlet", "neumann", "periodic")


@dataclass(frozen=True)
class FaceRule:
    kind: str
    value: float = 0.0

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown boundary kind {self.kind!r}")


@dataclass(frozen=True)
class BoundaryCondition:
    """Per-face rules for one field; periodic faces must come in pairs."""

    dim: int
    faces: tuple[tuple[str, FaceRule], ...]

    def __post_init__(self):
        names = {f"{AXIS_NAMES[a]}{s}" for a in range(self.dim) for s in ("lo", "hi")}
        got = {name for name, _ in self.faces}
        if got != names:
            raise ValueError(f"faces {sorted(got)} != required {sorted(names)}")
        for a in range(self.dim):
            lo, hi = self.face(f"{AXIS_NAMES[a]}lo"), self.face(f"{AXIS_NAMES[a]}hi")
            if (lo.kind == "periodic") != (hi.kind == "periodic"):
                raise ValueError(f"periodic must be set on both {AXIS_NAMES[a]} faces")

    def face(self, name: str) -> FaceRule:
        for n, rule in self.faces:
            if n == name:
                return rule
        raise KeyError(name)

    @classmethod
    def dirichlet(cls, dim: int, value: float = 0.0) -> "BoundaryCondition":
        return cls._uniform(dim, FaceRule("dirichlet", value))

    @classmethod
    def neumann(cls, dim: int) -> "BoundaryCondition":
        return cls._uniform(dim, FaceRule("neumann"))

    @classmethod
    def periodic(cls, dim: int) -> "BoundaryCondition":
        return cls._uniform(dim, FaceRule("periodic"))

    @classmethod
    def _uniform(cls, dim: int, rule: FaceRule) -> "BoundaryCondition":
        faces = tuple(
            (f"{AXIS_NAMES[a]}{s}", rule) for a in range(dim) for s in ("lo", "hi")
        )
        return cls(dim, faces)

    def with_face(self, name: str, rule: FaceRule) -> "BoundaryCondition":
        faces = tuple((n, rule if n == name else r) for n, r in self.faces)
        return BoundaryCondition(self.dim, faces)

    def homogenized(self) -> "BoundaryCondition":
        """Same rule kinds with zero wall values; corrections and residuals
        transferred between levels satisfy this form."""
        faces = tuple((n, FaceRule(r.kind, 0.0)) for n, r in self.faces)
        return BoundaryCondition(self.dim, faces)


def fill_ghosts(field: Field, bc: BoundaryCondition) -> Field:
    """Fill every ghost ring (and edge-axis boundary points) of ``field``.

    Interior values are never touched.  Returns the same field with
    ``ghosts_fresh`` set.
    """
    if bc.dim != field.grid.dim:
        raise ValueError(f"bc is {bc.dim}D but field is {field.grid.dim}D")
    data = field.data
    g = field.halo
    for axis in reversed(range(field.grid.dim)):
        name = AXIS_NAMES[axis]
        _fill_axis(
            data, axis, axis == field.location.edge_axis, g,
            field.grid.shape[axis], bc.face(f"{name}lo"), bc.face(f"{name}hi"),
        )
    field.ghosts_fresh = True
    return field


def _fill_axis(data, axis, is_edge, g, m, lo, hi):
    def at(idx):
        s = [slice(None)] * data.ndim
        s[axis] = idx
        return tuple(s)

    if is_edge:
        b_lo, b_hi = g - 1, g - 1 + m
        if lo.kind == "dirichlet":
            data[at(b_lo)] = lo.value
        elif lo.kind == "neumann":
            data[at(b_lo)] = data[at(b_lo + 1)]
        if hi.kind == "dirichlet":
            data[at(b_hi)] = hi.value
        elif hi.kind == "neumann":
            data[at(b_hi)] = data[at(b_hi - 1)]
        elif hi.kind == "periodic":
            data[at(b_hi)] = data[at(b_lo)]
        for r in range(1, g):
            if lo.kind == "dirichlet":
                data[at(b_lo - r)] = 2.0 * lo.value - data[at(b_lo + r)]
            elif lo.kind == "neumann":
                data[at(b_lo - r)] = data[at(b_lo + r)]
            else:
                data[at(b_lo - r)] = data[at(b_hi - r)]
            if hi.kind == "dirichlet":
                data[at(b_hi + r)] = 2.0 * hi.value - data[at(b_hi - r)]
            elif hi.kind == "neumann":
                data[at(b_hi + r)] = data[at(b_hi - r)]
            else:
                data[at(b_hi + r)] = data[at(b_lo + r)]
    else:
        for r in range(1, g + 1):
            lo_ghost, lo_mirror = g - r, g + r - 1
            hi_ghost, hi_mirror = g + m + r - 1, g + m - r
            if lo.kind == "dirichlet":
                data[at(lo_ghost)] = 2.0 * lo.value - data[at(lo_mirror)]
            elif lo.kind == "neumann":
                data[at(lo_ghost)] = data[at(lo_mirror)]
            else:
                data[at(lo_ghost)] = data[at(g + m - r)]
            if hi.kind == "dirichlet":
                data[at(hi_ghost)] = 2.0 * hi.value - data[at(hi_mirror)]
            elif hi.kind == "neumann":
                data[at(hi_ghost)] = data[at(hi_mirror)]
            else:
                data[at(hi_ghost)] = data[at(g + r - 1)]
