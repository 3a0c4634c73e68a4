"""Exception types shared across the package."""


class CutGroupsError(Exception):
    """Base class for all errors raised by this package."""


class NotClosed(CutGroupsError):
    """A multiplication table contains an entry outside 0..order-1."""


class NoIdentity(CutGroupsError):
    """Element 0 does not act as a two-sided identity."""


class NotAssociative(CutGroupsError):
    """Associativity fails; carries a witness triple (g, h, k)."""

    def __init__(self, g: int, h: int, k: int):
        self.triple = (g, h, k)
        super().__init__(f"(g*h)*k != g*(h*k) for (g, h, k) = ({g}, {h}, {k})")


class NotInvertible(CutGroupsError):
    """Some element has no two-sided inverse."""


class InvalidPresentation(CutGroupsError):
    """Metacyclic parameters violate a defining constraint."""


class SizeLimit(CutGroupsError):
    """A group exceeds the configured size cap for the operation."""


class NotNormal(CutGroupsError):
    """A subgroup required to be normal is not."""


class NotA2Group(CutGroupsError):
    """The group order is not a power of 2."""


class NotA3Group(CutGroupsError):
    """The group order is not a power of 3."""


class TrivialGroup(CutGroupsError):
    """The operation is undefined for the trivial group."""


class ParentMismatch(CutGroupsError):
    """Two group-algebra elements live over different groups."""


class NotNormalInH(CutGroupsError):
    """K is not a normal subgroup of H."""


class NotCoprime(CutGroupsError):
    """Arguments required to be coprime are not."""


class NonIntegralCoefficient(CutGroupsError):
    """A polynomial expected to have integer coefficients does not.

    This signals an internal arithmetic bug, never bad user input.
    """


class RecipeInapplicable(CutGroupsError):
    """No candidate pair from the metacyclic recipe verifies."""


class NotStronglyMonomialVerified(CutGroupsError):
    """The idempotents found do not form a verified complete set."""
