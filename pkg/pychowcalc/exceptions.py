"""
PyChowCalc exception types

Created on 2 Sep 2026

@author: semuadmin
"""


class ChowCalcError(Exception):
    """
    Base class for all PyChowCalc errors.
    """

    kind = "error"


class MalformedInputError(ChowCalcError):
    """
    Input refers to unknown generators, mismatched rings or out-of-range values.
    """

    kind = "malformed"


class UnsupportedError(ChowCalcError):
    """
    Parameters outside the domain of a constructor or rank cap.
    """

    kind = "unsupported"


class ConsistencyError(ChowCalcError):
    """
    An internal identity failed to hold (integrality, closed forms, termination).
    """

    kind = "consistency"


class InconsistentInputsError(ChowCalcError):
    """
    Declared inputs contradict each other or the computed Chern data.
    """

    kind = "inconsistent-inputs"


class FixtureError(ChowCalcError):
    """
    Fixture corpus missing or unreadable.
    """

    kind = "fixture"


class ScenarioSyntaxError(ChowCalcError):
    """
    Lexical, syntax, binding or arity error in a scenario script.
    """

    kind = "syntax"

    def __init__(self, message: str, line: int = 0, column: int = 0):
        """
        Constructor.

        :param str message: error description
        :param int line: 1-based source line
        :param int column: 1-based source column
        """

        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column

    def __str__(self) -> str:
        return f"line {self.line}, column {self.column}: {self.message}"
