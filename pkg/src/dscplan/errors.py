"""Exceptions shared across the solvers and the command line front end."""


class SolverError(RuntimeError):
    """A numerical search failed (no bracket, no sign change, empty grid)."""


class InsufficientPowerError(ValueError):
    """The link budget does not close even directly below the transmitter."""
