"""Exception hierarchy shared across the package."""


class EquizetaError(Exception):
    """Base class for all errors raised by this package."""


class ZeroDenominator(EquizetaError):
    """A rational function was built with a zero denominator."""


class DivisionByZero(EquizetaError):
    """Division of a rational function by zero."""


class NotExpandable(EquizetaError):
    """A rational function has no integer Laurent expansion in u^-1."""


class NotSeriesExpandable(EquizetaError):
    """The T-constant part of a denominator vanishes, so no T-power-series exists."""


class UnknownAtom(EquizetaError):
    """A G-space atom name is not in the catalog."""


class RankTooLarge(EquizetaError):
    """A declared differential rank exceeds an available page dimension."""


class TailMismatch(EquizetaError):
    """A spectral page disagrees with the declared stable tail dimensions."""


class ParseError(EquizetaError):
    """Input text is not well-formed JSON."""


class SchemaError(EquizetaError):
    """Well-formed JSON that does not match the expected schema."""


class UnknownFixture(EquizetaError):
    """A requested catalog fixture does not exist."""


class InvalidResolution(EquizetaError):
    """Resolution data failed validation; diagnostics attached."""

    def __init__(self, diagnostics):
        super().__init__("; ".join(diagnostics))
        self.diagnostics = list(diagnostics)


class NotInvariant(EquizetaError):
    """A monomial germ is not invariant under the given sign action."""
