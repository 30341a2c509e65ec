"""Exception hierarchy shared by every layer of the package."""


class LabatieError(Exception):
    """Base class for all errors raised by this package."""


class FieldMismatch(LabatieError, TypeError):
    """Operands live over different ground fields."""


class NotPrime(LabatieError, ValueError):
    pass


class DivisionByZeroPoly(LabatieError, ZeroDivisionError):
    pass


class BothZero(LabatieError, ValueError):
    """gcd(0, 0) is undefined."""


class ZeroPolynomial(LabatieError, ValueError):
    """An operation that needs a non-zero polynomial got zero."""


class InexactDivision(LabatieError, ArithmeticError):
    """A division that must be exact left a remainder.

    Raised only on internal-logic violations; the elimination engine
    relies on divisibility facts that should always hold.
    """


class DegreeOrder(LabatieError, ValueError):
    """The y-degrees of a pseudo-division pair are out of order."""


class ZeroInput(LabatieError, ValueError):
    pass


class DegyZero(LabatieError, ValueError):
    """A y-primitive part has y-degree 0, so there is nothing to eliminate."""


class NotCoprime(LabatieError, ValueError):
    """The two inputs share a factor of positive y-degree.

    ``common`` holds the y-primitive common factor found by the remainder
    sequence (the last non-zero remainder).
    """

    def __init__(self, message, common=None):
        super().__init__(message)
        self.common = common


class PolySyntaxError(LabatieError, ValueError):
    """Malformed polynomial text; ``pos`` is the 0-based character offset."""

    def __init__(self, message, pos=None):
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)
        self.pos = pos


class NegativeExponent(PolySyntaxError):
    pass


class ZeroDenominator(PolySyntaxError):
    pass


class ModulusMismatch(PolySyntaxError):
    """Fractional literal given while parsing over GF(p)."""


class InfiniteMultiplicity(LabatieError, ValueError):
    """The query point lies on a common component of the two curves."""


class CapExceeded(LabatieError, RuntimeError):
    """The local-algebra dimension did not stabilize below the truncation cap."""
