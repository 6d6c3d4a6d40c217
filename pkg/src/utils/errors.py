"""Exception hierarchy for irrlab.

Input and domain errors also derive from ``ValueError`` so callers that only
know the standard library can still catch them.
"""


class IrrlabError(Exception):
    """Base class for every error raised by irrlab."""


class GraphError(IrrlabError, ValueError):
    """A graph could not be built from the given data."""


class OutOfRangeVertex(GraphError):
    """An edge endpoint lies outside ``0..n-1``."""


class SelfLoop(GraphError):
    """An edge joins a vertex to itself."""


class MalformedGraph6(GraphError):
    """A graph6 string could not be decoded."""


class MalformedEdgeList(GraphError):
    """An edge-list block could not be decoded."""


class TooLarge(IrrlabError, ValueError):
    """The input exceeds a search or enumeration budget."""


class BudgetExceeded(TooLarge):
    """A corpus requested from the verifier exceeds its enumeration budget."""


class TooSmall(IrrlabError, ValueError):
    """The requested order is below the family's minimum."""


class NonPositiveP(IrrlabError, ValueError):
    """The exponent of the general Albertson index must be positive."""


class CompleteGraph(IrrlabError, ValueError):
    """The minimum non-adjacent degree sum is undefined on complete graphs."""


class InvalidSpine(IrrlabError, ValueError):
    """A caterpillar spine degree list is not realizable."""


class InvalidParams(IrrlabError, ValueError):
    """Construction parameters violate their constraints."""


class BadProbability(IrrlabError, ValueError):
    """An edge probability outside ``[0, 1]``."""


class ClaimError(IrrlabError, ValueError):
    """Base class for claim evaluation errors."""


class KindMismatch(ClaimError):
    """The subject kind does not match the claim kind."""


class InadmissibleParams(ClaimError):
    """Parameters outside the claim's admissible grid."""


class UnknownClaimId(ClaimError):
    """A claim id that is not in the registry."""


class NotAFailure(ClaimError):
    """Shrinking was requested for a subject that does not fail the claim."""
