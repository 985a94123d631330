"""Exception types raised across the package."""


class OpdiskError(Exception):
    """Base class for every error raised by opdisk."""


class InputError(OpdiskError, ValueError):
    """Invalid input: bad shape, violated precondition, malformed file."""


class NumericalError(OpdiskError, ArithmeticError):
    """A computation could not be carried out within tolerance."""


class DimensionMismatch(InputError):
    pass


class NotHermitian(InputError):
    pass


class DomainError(InputError):
    """A scalar function was applied outside its domain on some eigenvalue."""


class Singular(NumericalError):
    pass


class SingularG(Singular):
    pass


class SingularFirstComponent(Singular):
    pass


class SingularDenominator(Singular):
    pass


class NotThetaUnitary(InputError):
    pass


class NotBorel(InputError):
    pass


class NotInDisk(InputError):
    pass


class NotBoundary(InputError):
    pass


class CoincidentPoints(InputError):
    pass


class NotTangent(InputError):
    pass


class ZeroVector(InputError):
    pass


class NoSolution(NumericalError):
    """The parallel-projection systems of a cross ratio have no (unique) solution."""


class BaseMismatch(InputError):
    pass


class NotDiagonal(InputError):
    pass


class BlockPatternViolation(InputError):
    pass


class ParseError(InputError):
    pass


class SuiteFailure(NumericalError):
    """A verification suite exceeded its residual budget.

    ``instance`` holds a JSON-serialisable record of the worst sample.
    """

    def __init__(self, message, instance=None):
        super().__init__(message)
        self.instance = instance
