"""Exceptions raised by the algebra modules."""


class AffineWeylError(ValueError):
    """Base class for every domain error of the toolkit"""


class DimensionMismatchError(AffineWeylError):
    pass


class UnsupportedRootSystemError(AffineWeylError):
    pass


class NonRegularPointError(AffineWeylError):
    """Point lies on a reflecting hyperplane"""


class LatticeViolationError(AffineWeylError):
    """Translation part left the translation lattice"""


class NotInOrbitError(AffineWeylError):
    pass


class NotDominantError(AffineWeylError):
    pass


class NotInPalcError(AffineWeylError):
    pass


class NormalizationError(AffineWeylError):
    """An exponent or dimension that must be an integer was not"""


class InvalidWindowError(AffineWeylError):
    """Window values do not seed a bijection of Z, or the text is malformed"""


class MembershipError(AffineWeylError):
    pass


class ContextError(AffineWeylError):
    pass
