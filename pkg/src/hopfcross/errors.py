"""Exception hierarchy shared by every module."""


class HopfError(Exception):
    """Base class for all library errors."""


class FieldMismatch(HopfError, TypeError):
    pass


class DivisionByZero(HopfError, ZeroDivisionError):
    pass


class ParseError(HopfError, ValueError):
    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


class CharMismatch(HopfError, ValueError):
    pass


class MalformedData(HopfError, ValueError):
    pass


class ShapeMismatch(HopfError, ValueError):
    pass


class SingularMatrix(HopfError, ArithmeticError):
    pass


class NotGroupLike(HopfError, ValueError):
    pass


class BudgetExceeded(HopfError, RuntimeError):
    def __init__(self, needed, budget):
        self.needed = needed
        self.budget = budget
        super().__init__(f"enumeration needs {needed} candidates, budget is {budget}")


class WrongField(HopfError, ValueError):
    pass


class NotCocentral(HopfError, ValueError):
    pass


class InvalidSystem(HopfError, ValueError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"crossed system fails: {', '.join(report.failed_names())}")


class NotHopfMap(HopfError, ValueError):
    pass


class NotASection(HopfError, ValueError):
    pass


class NotCoalgebraMap(HopfError, ValueError):
    pass


class NotCentralPrimitive(HopfError, ValueError):
    pass


class PreconditionViolated(HopfError, ValueError):
    pass


class GeneratorsDontSpan(HopfError, ValueError):
    pass


class UnknownModel(HopfError, ValueError):
    pass


class HypothesisUnchecked(UserWarning):
    """The trivial-Hopf-map-to-H4 hypothesis could not be certified."""
