"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class AptError(ValueError):
    """Base class for every error raised by this package."""


class InvalidTripleError(AptError):
    """A triple component is not a positive integer."""


class InvalidParamsError(AptError):
    """Euclid parameters (s, k) do not generate a primitive triple."""


class InvalidIndexError(AptError):
    """Family index i is below 2."""


class InvalidTError(AptError):
    """Scale parameter t is below 1."""


class InvalidBoundError(AptError):
    """An enumeration bound is too small."""


class NotAPPTError(AptError):
    """The input triple is not a primitive Pythagorean triple in normal form."""


class SolverError(AptError):
    """The constant system has no usable answer (distinct from bad input)."""


class NoSolutionError(SolverError):
    pass


class AmbiguousSolutionError(SolverError):
    def __init__(self, ppt, solutions):
        self.ppt = ppt
        self.solutions = list(solutions)
        super().__init__(
            f"{len(self.solutions)} box solutions for {tuple(ppt)}, expected 2: {self.solutions}"
        )
