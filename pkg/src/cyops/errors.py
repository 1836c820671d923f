"""Exception hierarchy shared by all cyops modules."""


class CyopsError(Exception):
    """Base class for every error raised by this package."""


class InputError(CyopsError):
    """Malformed or inadmissible input (maps to CLI exit code 2)."""


class ResourceCapExceeded(CyopsError):
    """A configured size/time cap was hit (maps to CLI exit code 3)."""


# series layer
class DivisionByZeroConstantTerm(InputError):
    pass


class BadConstantTerm(InputError):
    pass


class NotInvertible(InputError):
    pass


class InsufficientTruncation(InputError):
    pass


class ZeroConstantDenominator(InputError):
    pass


# operator layer
class WrongOrder(InputError):
    pass


class DegreeCapExceeded(ResourceCapExceeded):
    pass


class IrregularPoint(InputError):
    pass


class NonFuchsian(InputError):
    pass


class NonSimplePole(InputError):
    pass


class NotMUM(InputError):
    pass


class ResonanceBreakdown(CyopsError):
    pass


class NotOrderFour(InputError):
    pass


class NonPositiveDegree(InputError):
    pass


# sources
class UnboundedRegion(InputError):
    pass


class SingularBranch(InputError):
    pass


class NonIntegralSequence(InputError):
    pass


# fitting
class NotFound(CyopsError):
    pass


class AmbiguousKernel(CyopsError):
    def __init__(self, shape, dimension):
        super().__init__(f"kernel of dimension {dimension} at shape (order, degree) = {shape}")
        self.shape = shape
        self.dimension = dimension


# records
class ParseError(InputError):
    def __init__(self, message, line=None, column=None, expected=()):
        where = f" at line {line}, column {column}" if line is not None else ""
        exp = f" (expected one of: {', '.join(sorted(expected))})" if expected else ""
        super().__init__(f"{message}{where}{exp}")
        self.line = line
        self.column = column
        self.expected = frozenset(expected)


class ArityError(InputError):
    pass
