"""Exception hierarchy shared by every layer of the package."""


class PolySuffixError(Exception):
    pass


class EmptyInput(PolySuffixError, ValueError):
    pass


class CapViolation(PolySuffixError, ValueError):
    """Input exceeds a limit of the packed 32-bit factor layout."""


class AlphabetTooLarge(CapViolation):
    pass


class DegreeOverflow(CapViolation):
    pass


class CoefficientOverflow(CapViolation):
    pass


class UnknownSymbol(PolySuffixError, KeyError):
    pass


class MalformedWord(PolySuffixError, ValueError):
    pass


class NotDivisible(PolySuffixError, ValueError):
    pass


class DuplicateKey(PolySuffixError, ValueError):
    pass
