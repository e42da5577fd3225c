"""Exception types shared across the package."""


class CapExceeded(RuntimeError):
    """A multiplicative closure outgrew its cap: the generators are either
    mis-specified or generate something that is not desk scale."""


class NotInvertible(ValueError):
    """A generator matrix is singular."""


class UnsupportedExponent(ValueError):
    """The group exponent does not divide 24, so character values would
    leave Q(zeta24)."""


class InternalInconsistency(AssertionError):
    """An exact self-check failed (e.g. a lifted character table breaking
    orthogonality); indicates a bug, never bad user input."""


class NotAClassFunction(ValueError):
    """Inner products came out non-integral, typically from mixing a real
    character with a complex table or vice versa."""


class NotAbelian(ValueError):
    """Operation defined only for abelian groups."""


class NotIdempotent(ValueError):
    """Element failed the a*a == a check."""


class WrongGroup(ValueError):
    """Operation is specific to one built-in group."""


class UnknownName(KeyError):
    """No built-in object under that name."""


class NotAHomomorphism(ValueError):
    """Generator images do not satisfy the group's relations."""


class NotClifford(ValueError):
    """An anticommutator check failed; carries the offending pair."""

    def __init__(self, pair, message):
        super().__init__(message)
        self.pair = pair
