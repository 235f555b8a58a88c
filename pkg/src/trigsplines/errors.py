"""Exception types shared across the package.

Everything derives from SplineError so callers can catch the whole family
with one clause.  Validation problems (bad grids, bad orders, mismatched
shapes) and numeric problems (near-singular denominators, truncation that
did not reach its target) get separate branches because the CLI maps them
to different exit codes.
"""


class SplineError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(SplineError):
    """Bad input: configuration that can never compute."""


class NumericError(SplineError):
    """Computation started but could not be carried out reliably."""


class InvalidGrid(ValidationError):
    """Node count must be an odd integer >= 3 and the indicator 0 or 1."""


class InvalidFrequency(ValidationError):
    """Convergence factors are defined for integer frequencies k >= 1."""


class InvalidResolution(ValidationError):
    """Sample counts / partition sizes must be positive (and large enough)."""


class ArityMismatch(ValidationError):
    """Number of supplied node values does not match the grid size."""


class DerivativeOrderTooHigh(ValidationError):
    """Requested derivative order exceeds what the degree supports (q <= r-1)."""


class UnsupportedForDegree(ValidationError):
    """Functional not defined for this degree (e.g. half-degree seminorm needs odd r)."""


class UseDPartitionVariation(ValidationError):
    """Derivative-based variation needs r >= 2; use the partition-sum route instead."""


class NearSingularDenominator(NumericError):
    """A normalizing denominator h_j is too close to zero to divide by.

    Carries the frequency index and the offending value so sweep drivers can
    mark the sample invalid instead of aborting the whole run.
    """

    def __init__(self, j: int, value: float, threshold: float):
        self.j = j
        self.value = value
        self.threshold = threshold
        super().__init__(
            f"denominator h_{j} = {value:.3e} is below the safe threshold "
            f"{threshold:.3e}; spline is ill-conditioned at this parameter"
        )


class TruncationNotConverged(NumericError):
    """Series truncation hit the term cap before reaching the requested tail.

    Only raised in strict contexts; the lenient path returns the partial
    result with ``converged=False`` and the achieved bound attached.
    """

    def __init__(self, achieved: float, requested: float, m_max: int):
        self.achieved = achieved
        self.requested = requested
        self.m_max = m_max
        super().__init__(
            f"tail bound {achieved:.3e} after m_max={m_max} blocks "
            f"(requested {requested:.3e})"
        )
