"""Exception types shared across the package."""

from __future__ import annotations


class ZeroTermError(ArithmeticError):
    """A sequence term inside a reciprocal sum's index window is zero.

    The sum is undefined at such a grid point; ``index`` names the first
    offending sequence index (scanning the window in ascending order).
    """

    def __init__(self, index: int, seeds: tuple[int, int] | None = None):
        self.index = index
        self.seeds = seeds
        where = f" for seeds ({seeds[0]}, {seeds[1]})" if seeds is not None else ""
        super().__init__(f"zero term at index {index}{where}")


class IntegralityError(ArithmeticError):
    """An integer-valued closed form failed its exact-divisibility check.

    This signals an implementation or transcription bug, never a bad input:
    every integer-valued identity divides exactly for all valid arguments.
    """


class DomainError(ValueError):
    """Arguments fall outside an operation's validity domain."""


class UnknownIdentityError(LookupError):
    """Identity id not present in the registry."""
