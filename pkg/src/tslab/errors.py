"""Exception types shared across the library.

Input and precondition problems map to CLI exit code 1, internal
invariant violations to exit code 2.
"""


class TslabError(Exception):
    """Base class for all library errors."""


class InvalidInput(TslabError):
    """Malformed argument, schema violation or unmet precondition."""


class NotFullDimensional(TslabError):
    """The affine hull of the data is a proper subspace."""


class InconsistentInput(TslabError):
    """The two polytope descriptions, or the inequalities alone, clash."""


class Unbounded(TslabError):
    """An inequality system with a nontrivial recession cone."""


class NotFano(TslabError):
    """The fan has no ample anticanonical polytope (unbounded or not reflexive)."""


class DimensionMismatch(TslabError):
    """Vectors of different lengths where equal lengths are required."""


class EnumerationBudgetExceeded(TslabError):
    """Lattice point scan hit the work cap; raise the budget to continue."""


class ZeroSlope(TslabError):
    """Twisted bundle slope vanishes, the Chow weight is undefined."""


class ZeroChi(TslabError):
    """Euler characteristic in a denominator vanishes at this level."""


class DivisionByZero(TslabError):
    """A rational expression was evaluated where its denominator vanishes."""


class FitFailed(TslabError):
    """Sample grid too small for the polynomial bidegree being fitted."""


class NotFound(TslabError):
    """No catalog entry with the requested name."""


class ValidationFailed(TslabError):
    """An internal cross-check that must hold by theorem did not."""


def exit_code_for(err: BaseException) -> int:
    """Map an exception to the CLI exit convention (1 input, 2 internal)."""
    if isinstance(err, ValidationFailed):
        return 2
    if isinstance(err, TslabError):
        return 1
    return 2
