"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where a quantity is defined."""


class InfeasibleError(ValueError):
    """No physical parameter value can satisfy the requested target."""


class NumericalError(ArithmeticError):
    """A numerical procedure failed to reach its requested accuracy.

    The last estimate and its error bound are kept so callers can decide
    whether a partially converged answer is still usable.
    """

    def __init__(self, message, estimate=float("nan"), error_bound=float("inf")):
        super().__init__(message)
        self.estimate = estimate
        self.error_bound = error_bound
