"""Exception hierarchy.

Everything raised on purpose by the library derives from :class:`HBSiegelError`
so the CLI can map it onto exit codes in one place.
"""


class HBSiegelError(Exception):
    """Base class for library errors."""


class InputError(HBSiegelError):
    """Malformed or inconsistent input (CLI exit code 2)."""


class RepeatedRoots(InputError):
    pass


class NotTotallyReal(InputError):
    pass


class NotAnOrder(InputError):
    pass


class SingularBasis(InputError):
    pass


class OddDimension(InputError):
    pass


class NonSquare(InputError):
    pass


class LevelTooSmall(InputError):
    pass


class BudgetExceeded(InputError):
    pass


class WrongLength(InputError):
    pass


class DegreeMismatch(InputError):
    pass


class DegreeZero(InputError):
    pass


class DivisionByZero(HBSiegelError, ZeroDivisionError):
    pass


class SingularMatrix(HBSiegelError, ZeroDivisionError):
    pass


class SingularDenominator(HBSiegelError, ZeroDivisionError):
    """``C tau + D`` is not invertible."""


class MembershipError(HBSiegelError):
    """A group-membership precondition failed (CLI exit code 1)."""


class NotInGPrime(MembershipError):
    pass


class NotInLatticeGroup(MembershipError):
    pass


class NotUpperHalf(MembershipError):
    pass
