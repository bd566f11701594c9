"""Exception hierarchy shared by every module."""


class DistPairError(Exception):
    """Base class for all errors raised by distpair."""


class DegreeCapExceeded(DistPairError):
    """A polynomial operation would exceed ``DEGREE_CAP``."""


class InvalidTolerance(DistPairError, ValueError):
    pass


class BudgetExhausted(DistPairError):
    """Quadrature would need more integrand evaluations than the work budget."""


class NoConvergence(DistPairError):
    """A symmetric-truncation limit did not settle by the largest radius."""


class DepthExceeded(DistPairError):
    pass


class InvalidRoute(DistPairError, ValueError):
    pass


class InvalidOrder(DistPairError, ValueError):
    pass


class InvalidInput(DistPairError, ValueError):
    pass


class ParseError(DistPairError, ValueError):
    pass


class ConfigError(DistPairError):
    pass
