"""Exception hierarchy for annular_nc."""


class AnnularNCError(Exception):
    """Base class for every error raised by the package."""


class RankMismatchError(AnnularNCError, ValueError):
    """Two operands live on different ranks or ground sets."""


class BoundExceededError(AnnularNCError, ValueError):
    """A configured exhaustive bound or a hard cap was exceeded."""


class CycleNotationError(AnnularNCError, ValueError):
    """Cycle-notation text could not be parsed into a signed permutation."""


class NotInPosetError(AnnularNCError, ValueError):
    """An input lies outside the poset or orbit family an operation is defined on."""


class NotAPartialOrderError(AnnularNCError, ValueError):
    """A relation handed to FinitePoset is not reflexive, antisymmetric and transitive."""


class ConfigurationError(AnnularNCError, ValueError):
    """A setting or environment override has an invalid value."""


class InternalInvariantError(AnnularNCError, AssertionError):
    """A quantity that is guaranteed by theory came out wrong; this is a bug."""


class NotInGroupError(AnnularNCError, ValueError):
    """A signed permutation is outside the subgroup (D_n) an operation needs."""


class UnsupportedReferenceError(AnnularNCError, ValueError):
    """The reference permutation has more than two cycles."""
