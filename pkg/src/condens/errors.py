"""Exception hierarchy shared across the package.

Two branches matter for the CLI exit codes: ``DataError`` (bad input,
exit 3) and ``NumericError`` (a computation could not be completed at the
requested accuracy, exit 4). Anything else is a usage/programming error.
"""


class CondensError(Exception):
    """Base class for all package-specific errors."""

    exit_code = 1


class DataError(CondensError):
    """Invalid or unusable input data."""

    exit_code = 3


class NumericError(CondensError):
    """A numeric routine failed to reach its accuracy contract."""

    exit_code = 4


class EmptySample(DataError):
    pass


class DegreeTooHigh(DataError):
    """Requested basis degree >= number of distinct sample values."""


class DegreeOutOfRange(DataError):
    """Evaluation requested for a degree outside the constructed basis."""


class DomainError(DataError):
    """Argument outside the mathematical domain of the function."""


class DimensionMismatch(DataError):
    pass


class SingleGroup(DataError):
    """k-sample comparison needs at least two groups."""


class DegenerateArm(DataError):
    """Binary treatment with an empty arm."""


class DegenerateSplit(DataError):
    """Train/holdout split would leave one side empty."""


class MissingColumn(DataError):
    def __init__(self, name):
        super().__init__(f"required column {name!r} not found in header")
        self.name = name


class ParseError(DataError):
    def __init__(self, row, column, message):
        super().__init__(f"row {row}, column {column}: {message}")
        self.row = row
        self.column = column


class EnvelopeDegenerate(NumericError):
    """Rejection-sampling envelope has non-positive maximum."""


class IterationCap(NumericError):
    """Sampler exhausted its proposal budget."""


class GridTooCoarse(NumericError):
    """Region search could not meet the coverage tolerance."""


class ConstantColumnWarning(UserWarning):
    """A feature column with a single distinct value was skipped."""


class SingularDesignWarning(UserWarning):
    """Least squares fell back to the minimum-norm solution."""
