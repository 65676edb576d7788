"""Exception hierarchy shared by every lattika module."""

from __future__ import annotations


class LattikaError(Exception):
    """Base class for all errors raised by lattika."""


class CyclicCovers(LattikaError):
    pass


class NotALattice(LattikaError):
    def __init__(self, message: str, witness: tuple | None = None):
        super().__init__(message)
        self.witness = witness


class Unbounded(LattikaError):
    pass


class TooLarge(LattikaError):
    pass


class UnknownName(LattikaError):
    pass


class BadParams(LattikaError):
    pass


class EmptyGeneratorSet(LattikaError):
    pass


class MixedLattices(LattikaError):
    pass


class NotAFilterResult(LattikaError):
    def __init__(self, message: str, members: int):
        super().__init__(message)
        self.members = members


class ImproperFilter(LattikaError):
    pass


class DisjointnessViolated(LattikaError):
    pass


class NonDistributive(LattikaError):
    pass


class SaturationNotFilter(LattikaError):
    def __init__(self, message: str, members: int):
        super().__init__(message)
        self.members = members


class EmptyFamily(LattikaError):
    pass


class NotAllSFilters(LattikaError):
    pass


class NotAnSFilter(LattikaError):
    pass


class SNotContained(LattikaError):
    pass


class CheckFailed(LattikaError):
    """Both sides of a checked equivalence were computed and disagree."""


class DecompositionMismatch(CheckFailed):
    """An S-complete set is not the complement of its disjoint S-filters."""


class NotAHom(LattikaError):
    def __init__(self, message: str, pair: tuple | None = None, law: str | None = None):
        super().__init__(message)
        self.pair = pair
        self.law = law


class NotTopPreserving(LattikaError):
    pass


class NotComplemented(LattikaError):
    pass


class NotOnto(LattikaError):
    pass


class KernelNotContained(LattikaError):
    pass


class ModulusNotContained(LattikaError):
    pass


class QuotientOrderIllDefined(LattikaError):
    def __init__(self, message: str, witness: tuple | None = None):
        super().__init__(message)
        self.witness = witness


class ArityMismatch(LattikaError):
    pass


class EmptyCatalog(LattikaError):
    pass


class UnknownHypothesis(LattikaError):
    pass


class UnknownTheorem(LattikaError):
    pass


class ParseError(LattikaError):
    def __init__(self, reason: str, line: int | None = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{reason}")
        self.line = line
        self.reason = reason
