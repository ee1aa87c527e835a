"""Exception hierarchy.

Two families: ``ValidationError`` for malformed input (presentations, task
files, shapes) and ``ComputationError`` for well-formed input that a
computation cannot accept (wrong ordering, uninvertible data).  The CLI maps
them to exit codes 2 and 3.
"""


class DDGKError(Exception):
    """Base class for all library errors."""


class ValidationError(DDGKError):
    pass


class ComputationError(DDGKError):
    pass


# scalar
class ZeroInversion(ComputationError):
    pass


class ReducibleModulus(ComputationError):
    """An inversion met a nontrivial gcd with the minimal polynomial."""


class NotAnAutomorphism(ValidationError):
    pass


class InvalidFieldAutomorphism(ValidationError):
    pass


# algebra
class SingularSigmaMatrix(ValidationError):
    pass


class NonCommutingSigmas(ValidationError):
    pass


class MixedMonomial(ComputationError):
    pass


class PresentationMismatch(ValidationError):
    pass


class ShapeMismatch(ValidationError):
    pass


# groebner / modfree
class ZeroElement(ComputationError):
    pass


class NotDivisible(ComputationError):
    pass


class RankMismatch(ValidationError):
    pass


# dimension / oracle
class NonDegreeOrdering(ComputationError):
    pass


class UncertifiedBasis(ComputationError):
    pass


# cli
class ParseError(ValidationError):
    pass
