"""Exception hierarchy shared by all primeth modules."""


class PrimethError(Exception):
    """Base class for all library errors."""


class InvalidRangeError(PrimethError):
    """A sieving range with lo > hi or lo < 2."""


class SegmentTooLargeError(PrimethError):
    """Requested segment exceeds the configured memory budget."""


class UnsupportedRangeError(PrimethError):
    """Input lies beyond the deterministic regime (e.g. primality above 2^64)."""


class BudgetExceededError(PrimethError):
    """A computation needed a prime value above the configured budget.

    ``deepest_level`` reports the last tower level that completed before
    the budget stopped the computation (0 when nothing completed).
    """

    def __init__(self, message, deepest_level=0):
        super().__init__(message)
        self.deepest_level = deepest_level


class CacheFormatError(PrimethError):
    """Malformed line in a tower cache file; never skipped silently."""


class DomainError(PrimethError):
    """Argument outside the mathematical domain of a formula."""


class InapplicableIndexError(PrimethError):
    """A bound was requested for an index outside its stated hypothesis."""


class HypothesisViolatedError(PrimethError):
    """The huge-n lower bound was evaluated outside its hypothesis."""


class ThresholdViolatedError(PrimethError):
    """A sampled point at or above 4200 fell below the certified floor.

    This would contradict a proved inequality, so it is treated as a
    build-stopping defect rather than a reportable data point.
    """
