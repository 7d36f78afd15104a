"""Exception types raised by the pacsent library."""


class PacsentError(Exception):
    """Base class for all library-specific errors."""


class RangeError(PacsentError, ValueError):
    """Input lies outside the supported numeric range."""


class ConvergenceError(PacsentError, RuntimeError):
    """A series did not converge within the iteration budget."""


class TruncationError(PacsentError, RuntimeError):
    """A Fock-space truncation could not be certified."""


class RankViolationError(PacsentError, RuntimeError):
    """A state expected to have Schmidt rank <= 2 did not."""


class DegenerateSpecError(PacsentError, ValueError):
    """The two superposition branches are (numerically) the same ray."""


class NumericalFailureError(PacsentError, RuntimeError):
    """An eigenvalue computation produced materially complex or negative values."""


class XShapeError(PacsentError, ValueError):
    """A density matrix does not have the required symmetric X shape."""


class BracketError(PacsentError, RuntimeError):
    """The threshold scan found no sign structure to bisect on."""


class GridError(PacsentError, ValueError):
    """A sweep grid definition is invalid."""
