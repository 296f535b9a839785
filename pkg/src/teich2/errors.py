"""Exception types shared across the library."""

from __future__ import annotations

__all__ = [
    "DomainError",
    "OutOfDomainError",
    "StepTooLargeError",
    "BallCapacityError",
]


class DomainError(ValueError):
    """A quantity left the region where the defining formulas are valid."""


class OutOfDomainError(DomainError):
    """Octagon parameters violate the admissible region.

    ``which`` names the violated inequality (``lower_a``, ``upper_a`` or
    ``alpha_range``); ``bound`` is the offending bound and ``value`` the
    rejected input.
    """

    def __init__(self, which: str, bound: float, value: float):
        self.which = which
        self.bound = bound
        self.value = value
        super().__init__(f"{which}: value {value!r} violates bound {bound!r}")


class StepTooLargeError(DomainError):
    """A finite-difference step would leave the admissible region."""


class BallCapacityError(RuntimeError):
    """Group-ball enumeration exceeded the configured element cap."""
