"""Exception hierarchy shared by every module."""


class TgrsError(ValueError):
    """Base class for invalid input anywhere in the library."""


class FieldMismatchError(TgrsError):
    """Operands live in different finite fields."""


class HypothesisError(TgrsError):
    """A criterion was asked about parameters outside the range where it is a theorem.

    Distinct from a ``False`` verdict: the library declines to answer.
    """


class BudgetExceededError(TgrsError):
    """An exhaustive computation would exceed its configured budget."""
