"""Exception types raised by the orbit pipeline."""


class BilliardError(Exception):
    pass


class InvalidInputError(BilliardError, ValueError):
    pass


class DegeneratePolygonError(BilliardError):
    """Two consecutive vertices are closer than the chord threshold."""


class SingularHessianError(BilliardError):
    pass


class ClassificationError(BilliardError):
    pass


class StatisticsError(BilliardError):
    pass
