"""Exception types raised by the library.

Validation failures are ``ValueError`` subclasses so callers can catch them
broadly; the concrete class names the violated condition.
"""


class StructuralError(ValueError):
    """Malformed input: wrong coordinate counts, mixed groups, bad orders."""


class InvalidSystem(ValueError):
    """A tuple of group elements is not a spherical system of generators."""


class ContainsIdentity(InvalidSystem):
    pass


class ProductNotIdentity(InvalidSystem):
    pass


class DoesNotGenerate(InvalidSystem):
    pass


class TooShort(InvalidSystem):
    pass


class IdentityElement(ValueError):
    """Fixed-point counts are undefined for the identity; use the Euler number."""


class InvalidSurface(ValueError):
    """A pair of spherical systems does not define a surface isogenous to a product."""


class NotDisjoint(InvalidSurface):
    pass


class GenusTooSmall(InvalidSurface):
    pass


class UnknownFamily(ValueError):
    pass


class NotAnInvolution(ValueError):
    pass


class NotNumericallyTrivial(ValueError):
    pass


class ChiOutOfRange(ValueError):
    pass


class UnboundedSystem(ValueError):
    """A ledger unknown is not bounded by any equation with nonnegative coefficients."""
