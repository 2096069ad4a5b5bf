"""Exception types shared across the package."""


class TileWalksError(Exception):
    """Base class for all package errors."""


class NonIntegralStep(TileWalksError):
    """An exact division that must yield an integer left a remainder."""


class UnstratifiableSystem(TileWalksError):
    """A coupled recurrence system has a same-step dependency cycle."""


class RadicalResidue(TileWalksError):
    """A quantity that must be rational kept a nonzero sqrt(5) component."""


class BudgetExceeded(TileWalksError):
    """A brute-force enumeration would exceed the configured tiling budget."""


class UnknownSequence(TileWalksError):
    """The CLI was asked for a sequence name it does not know."""


class UnknownFixture(TileWalksError):
    """No embedded b-file fixture exists for the requested id."""


class FetchFailed(TileWalksError):
    """A b-file could not be obtained from network, cache, or fixture."""


class BFileParseError(TileWalksError):
    """Malformed b-file content."""

    def __init__(self, message, line_number):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class InsufficientOverlap(TileWalksError):
    """Fewer than the required number of indices overlap in a comparison."""


class IndexOutOfRange(TileWalksError):
    """A tiling index beyond the number of tilings of the board."""
