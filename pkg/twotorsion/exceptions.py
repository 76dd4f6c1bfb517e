from typing import Iterable, Tuple


class TwoTorsionError(ValueError):
    """Base class for every error raised by twotorsion."""


class ParseError(TwoTorsionError):
    """
    Raised when a polynomial or list argument does not conform to the input
    grammar. ``offset`` is the byte offset of the offending character and
    ``expected`` the set of tokens that would have been accepted there.
    """

    def __init__(self, text: str, offset: int, expected: Iterable[str]) -> None:
        self.text = text
        self.offset = offset
        self.expected: Tuple[str, ...] = tuple(sorted(set(expected)))
        super(ParseError, self).__init__(
            "Unable to parse '{}' at offset {}: expected one of {}".format(
                text, offset, ", ".join(self.expected)
            )
        )


class DomainError(TwoTorsionError):
    """A mathematical precondition of an operation does not hold."""


class ZeroInput(DomainError):
    pass


class BadPrime(DomainError):
    pass


class SingularGram(DomainError):
    pass


class NotSquarefree(DomainError):
    pass


class NotInvertible(DomainError):
    pass


class DimensionMismatch(DomainError):
    pass


class InvalidType(DomainError):
    pass


class ComplexSemiOrientation(DomainError):
    pass


class NotRealTheta(DomainError):
    pass


class ZeroLowerBlock(DomainError):
    pass


class OutOfRegime(DomainError):
    pass


class NotARoot(DomainError):
    pass


class EqualRoots(DomainError):
    pass


class IrrationalRealRoot(DomainError):
    pass


class ModelMismatch(DomainError):
    pass


class OddIntersection(DomainError):
    """
    b2(S, T) has no rational value computable from x-only representatives
    when |S ∩ T| is odd. The real sign is still available via
    ``b2_real_sign``.
    """


class SupportCollision(DomainError):
    pass


class SharedSupport(DomainError):
    pass


class RepeatedRoots(DomainError):
    pass


class DegenerateModel(DomainError):
    pass
