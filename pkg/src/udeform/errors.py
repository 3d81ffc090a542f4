"""Exception types shared across the package."""


class UdeformError(Exception):
    pass


class DomainMismatch(UdeformError):
    pass


class NotAUnit(UdeformError):
    pass


class NonDivisibleExponent(UdeformError):
    pass


class InvalidIndex(UdeformError):
    pass


class ZeroToPrecision(UdeformError):
    """All stored coefficients vanish up to the truncation order.

    Carries the precision at which the series was found to be
    indistinguishable from zero, so callers can escalate.
    """

    def __init__(self, prec):
        super().__init__(f"series vanishes to precision {prec}")
        self.prec = prec


class PrecisionExhausted(UdeformError):
    pass


class NormalizationGateFailed(UdeformError):
    pass


class RootObstruction(UdeformError):
    pass


class RecursionInconsistent(UdeformError):
    pass


class DepthInsufficient(UdeformError):
    pass


class EmptySpace(UdeformError):
    pass


class NotHomogeneous(UdeformError):
    pass


class BothEFree(UdeformError):
    pass


class NoSolutionAtBudget(UdeformError):
    pass


class ConditionViolated(UdeformError):
    pass
