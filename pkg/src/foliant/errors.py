"""Exception hierarchy shared across the package.

The CLI maps these onto process exit codes; library users can catch
``FoliantError`` to intercept every domain failure at once.
"""


class FoliantError(Exception):
    """Base class for all domain errors raised by this package."""


class PolynomialSyntaxError(FoliantError):
    """Raised on malformed polynomial or vector-field text.

    ``position`` is the 0-based character offset of the offending token
    in the input string.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class MixedDegreeError(FoliantError):
    """Components of a vector field have different total degrees."""


class NullFoliationError(FoliantError):
    """The field is a multiple of the radial field; it defines no foliation."""


class NotSingularError(FoliantError):
    """A local invariant was requested at a point that is not singular."""


class NotIsolatedError(FoliantError):
    """The field has a one-dimensional singular locus."""


class UnsupportedDegreeError(FoliantError):
    """An operation specific to one degree was called with another."""


class DegenerateResultantError(FoliantError):
    """Resultant requested with respect to a variable absent from an input."""


class FamilyConditionError(FoliantError):
    """A family constructor was called with parameters violating its
    hypotheses, or post-validation of the constructed field failed.

    ``condition`` names the violated condition.
    """

    def __init__(self, condition: str, message: str = ""):
        super().__init__(message or condition)
        self.condition = condition


class OracleBudgetError(FoliantError):
    """The Groebner oracle exceeded its configured step budget."""
