"""Exception hierarchy.

Every library error carries the name of the module that raised it so the
CLI can report ``error [module] Name: message``.
"""


class GenProbError(Exception):
    """Base class for all domain errors (CLI exit code 1)."""

    module = "genprob"

    @property
    def kind(self):
        return type(self).__name__


class CapabilityMissing(GenProbError):
    module = "algebra"


class DivisionByZero(GenProbError, ZeroDivisionError):
    module = "algebra"


class LawViolation(GenProbError):
    """A structure failed one of its claimed axioms."""

    module = "algebra"

    def __init__(self, axiom, counterexample, structure="", shown=None):
        self.axiom = axiom
        self.counterexample = counterexample
        shown = repr(counterexample) if shown is None else shown
        super().__init__(f"{structure} violates {axiom} at {shown}")


class SpaceMismatch(GenProbError):
    module = "space"


class NotMeasurable(GenProbError):
    module = "measure"


class NotNormalized(GenProbError):
    module = "measure"


class NegativeWeight(GenProbError):
    module = "measure"


class EmptyIntersection(GenProbError):
    module = "measure"


class ZeroCondition(GenProbError):
    module = "inference"


class NotAPartition(GenProbError):
    module = "inference"


class UnresolvableTerm(GenProbError):
    module = "inference"

    def __init__(self, cell, message):
        self.cell = cell
        super().__init__(message)


class OverlappingTerms(GenProbError):
    module = "integral"


class NegativeValue(GenProbError):
    module = "integral"


class ParseError(GenProbError):
    """Malformed model file or query (CLI exit code 2)."""

    module = "cli"


class UnknownName(ParseError):
    module = "cli"


class UnknownInstance(ParseError):
    module = "instances"
