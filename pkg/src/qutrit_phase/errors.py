"""Exception hierarchy shared by every module."""


class QutritError(ValueError):
    """Base class for domain errors raised by this package."""


class NonOrthogonalBasis(QutritError):
    pass


class NotAState(QutritError):
    pass


class NotPure(QutritError):
    pass


class BadLevel(QutritError):
    pass


class BadLevelPair(QutritError):
    pass


class NotNormalized(QutritError):
    pass


class SingularDesign(QutritError):
    pass


class MismatchedN(QutritError):
    pass


class QuadratureBudgetExceeded(QutritError):
    pass


class NonFiniteIntegrand(QutritError):
    pass
