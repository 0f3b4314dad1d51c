"""Exception hierarchy shared by the design, load and CLI modules."""


class CatwellError(Exception):
    """Base class for all errors raised by catwell."""


class DomainError(CatwellError, ValueError):
    """An argument lies outside the domain of the operation."""


class NumericError(CatwellError, ArithmeticError):
    """A computation produced a non-finite value."""


class BracketError(NumericError):
    """The root-finding bracket does not contain a sign change."""


class ConvergenceError(NumericError):
    """An iterative method ran out of iterations."""


class InfeasibleDesignError(CatwellError):
    """The requested well geometry cannot be built from the inputs."""


class PlanConsistencyError(CatwellError):
    """A well plan's sections are not contiguous or continuous."""


class ComparisonError(CatwellError):
    """Two plans cannot be compared (e.g. differing azimuths)."""


class ConfigError(CatwellError):
    """A configuration file is malformed or fails validation."""
