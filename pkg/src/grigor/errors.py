"""Exception types shared across the package."""


class CapExceeded(RuntimeError):
    """A configured depth or length cap was hit before an answer was found."""


class WordLengthCapExceeded(CapExceeded):
    """A commutator tower outgrew the configured word-length cap."""


class SectionContractionError(RuntimeError):
    """A first-level section failed the (len+1)//2 contraction bound.

    This should be impossible for reduced words; it aborts the recursion
    instead of risking nontermination.
    """


class SearchExhausted(RuntimeError):
    """A randomized search ran out of budget without finding a witness."""


class PreconditionViolated(ValueError):
    """An operation was called outside its stated precondition."""
