"""Exception types raised by the solver layers."""


class FasmgError(Exception):
    """Base class for all package errors."""


class NonDivisibleGrid(FasmgError):
    """Grid cannot be coarsened to the requested depth with even sizes."""


class UnfilledGhosts(FasmgError):
    """An operator needed fresh ghost values but the field is stale."""


class LocationMismatch(FasmgError):
    """Fields passed to an operation live on incompatible grid locations."""


class PlanDimMismatch(FasmgError):
    """A sweep plan was built for a different dimensionality."""


class MissingBinding(FasmgError):
    """A schedule step reads a quantity that no slot currently holds."""


class IncompatibleRHS(FasmgError):
    """All-Neumann Poisson right-hand side has a nonzero mean."""


class ConfigError(FasmgError):
    """Invalid run configuration (unknown key, bad value, missing file)."""
