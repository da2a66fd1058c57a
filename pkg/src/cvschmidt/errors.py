"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class NumericalError(RuntimeError):
    """A numerical routine failed to produce a trustworthy result."""


class StateFileError(ValueError):
    """A state file could not be parsed.

    Parameters
    ----------
    message : str
        Description of the problem.
    line : int, optional
        1-based line number of the offending content.
    column : int, optional
        1-based column (or field index) within that line.
    """

    def __init__(self, message, line=None, column=None):
        suffix = ""
        if line is not None:
            suffix = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + suffix)
        self.line = line
        self.column = column
