"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input is outside the operation's mathematical domain.

    Raised for non-coprime pairs, non-positive integers where positives
    are required, zero directions, parameters outside (0,1), and values
    beyond the supported integer range.
    """


class HypothesisError(ValueError):
    """A stated hypothesis of a verified claim is violated.

    Carries a message naming the violated hypothesis, e.g.
    ``requires p > 3`` or ``requires epsilon > 1``.
    """
