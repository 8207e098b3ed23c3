class SpeciesError(ValueError):
    """Base class for user-facing input and evaluation errors."""


class SortMismatchError(SpeciesError):
    pass


class ConstantTermError(SpeciesError):
    pass


class TruncationError(SpeciesError):
    pass


class InvalidAtomError(SpeciesError):
    pass


class UnknownSpeciesError(SpeciesError):
    pass


class OracleSizeError(SpeciesError):
    pass


class SequenceFileError(SpeciesError):
    pass


class NonIntegralCountError(SpeciesError, ArithmeticError):
    """A count read off a series that is not a whole number, e.g. labeled counts of 1/2*X."""


class SpeciesSyntaxError(SpeciesError):
    """Raised by the expression parser; position is a 0-based character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class GraphFormatError(SpeciesError):
    """Raised on malformed graph files; line is 1-based, None when unknown."""

    def __init__(self, message: str, line: int = None):
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"{message}{where}")
        self.line = line
