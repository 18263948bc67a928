"""Exception hierarchy for the gifss package."""


class GifssError(Exception):
    """Base class for all domain errors raised by this package."""


class DegreeError(GifssError):
    """Invalid unit-interval degree: bad type, out of range, or too many digits."""


class ValidityError(GifssError):
    """Membership plus non-membership exceeds 1."""


class UniverseMismatchError(GifssError):
    """Operation across two structures with different universes."""


class NormPairError(GifssError):
    """Bad norm pair: mixed duals, unknown name, or failed axiom check."""


class CoverageError(GifssError):
    """Relation entries do not cover the full parameter product exactly."""


class ContainmentError(GifssError):
    """Relation entry exceeds the bound set by its parent sets."""


class ParentMismatchError(GifssError):
    """Relations built over different parents or norm pairs were combined."""


class ChainMismatchError(GifssError):
    """Composition of relations whose inner parents do not agree."""


class DatasetError(GifssError):
    """Dataset file content violates a structural or domain constraint."""


class DatasetParseError(DatasetError):
    """Dataset file is unreadable or not well-formed."""
