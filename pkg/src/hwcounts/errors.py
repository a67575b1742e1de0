"""Exception hierarchy shared by all hwcounts modules."""


class HwcountsError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(HwcountsError):
    """An argument lies outside the mathematical domain of an operation."""


class RangeError(HwcountsError):
    """A result or intermediate quantity left the representable range."""


class NoConvergence(HwcountsError):
    """An iterative scheme (quadrature, root finding) failed to converge."""


class MethodDisagreement(HwcountsError):
    """Two independent evaluation routes disagree beyond tolerance."""


class CrossCheckFailure(HwcountsError):
    """A closed-form value disagrees with its derivative-based cross-check."""


class UnsupportedOrder(HwcountsError):
    """A series/derivative order above the precomputed table range."""


class PositivityViolation(HwcountsError):
    """A quantity that must be strictly positive came out non-positive."""


class InsufficientReplicates(HwcountsError):
    """Too few Monte Carlo replicates for the requested statistic."""
