"""Exception types shared across the package."""


class HarmomapError(Exception):
    """Base class for all package-specific errors."""


class DomainError(HarmomapError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class HypothesisError(HarmomapError, ValueError):
    """A sufficient-condition hypothesis is violated; the message names it."""


class PoleError(DomainError):
    """Evaluation requested at a pole (e.g. Gamma at a nonpositive integer)."""


class ConvergenceError(HarmomapError, ArithmeticError):
    """A series cannot be summed/bounded under the requested constraints."""


class DegenerateThresholdError(HarmomapError, ValueError):
    """The threshold quadratic degenerates to a linear equation.

    Carries the single root of the linear case.
    """

    def __init__(self, message: str, single_root: float):
        super().__init__(message)
        self.single_root = single_root
