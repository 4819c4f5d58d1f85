"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or out-of-range input (bad indices, broken invariants)."""


class PreconditionError(ValueError):
    """An algorithm's stated precondition does not hold for the given input.

    Carries an optional machine-readable witness (e.g. a hole certifying
    non-chordality, or a vertex subset violating a coloring property).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class GuaranteeError(RuntimeError):
    """A step that is mathematically guaranteed to succeed on valid input failed.

    Seeing this means the input slipped past validation or there is a bug;
    the offending instance is attached for post-mortem.
    """

    def __init__(self, message, instance=None):
        super().__init__(message)
        self.instance = instance


class SizeLimitError(ValueError):
    """Instance exceeds the configured bound for an exhaustive search."""
