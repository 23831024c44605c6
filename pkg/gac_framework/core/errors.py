from typing import Optional


class GacError(Exception):
    """Base class for every error raised by the framework"""


class InstanceError(GacError):
    """An instance violates one of its structural invariants"""


class InstanceParseError(InstanceError):
    def __init__(self, message: str, location: Optional[str] = None):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class MissingVariableError(GacError):
    def __init__(self, missing):
        self.missing = tuple(missing)
        super().__init__(f"Tuple does not cover scope variables: {', '.join(self.missing)}")


class BudgetExhaustedError(GacError):
    def __init__(self, tuples_explored: int):
        self.tuples_explored = tuples_explored
        super().__init__(f"Search budget exhausted after {tuples_explored} tuples")


class UnsupportedInstanceError(GacError):
    """A specialized propagator was given an instance outside its preconditions"""


class ArityTooLargeError(UnsupportedInstanceError):
    pass


class SourceError(GacError):
    """A source problem (formula, graph) is invalid or could not be parsed"""


class GadgetError(GacError):
    """A gadget builder's precondition does not hold"""


class ScaleLimitError(GacError):
    pass
