"""Exception types shared across the package."""


class FinframeError(Exception):
    """Base class for all finframe errors."""


class NotAntisymmetric(FinframeError):
    """The input order relation contains a cycle."""


class NotALattice(FinframeError):
    """Some pair of elements lacks a meet or a join."""


class NotDistributive(FinframeError):
    """Binary meets fail to distribute over binary joins.

    ``witness`` holds an offending triple of element ids.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotATopology(FinframeError):
    """The open-set family is not closed under union/intersection or misses a required member."""


class CyclicPoset(FinframeError):
    """The cover relation of a poset contains a cycle."""


class TooLarge(FinframeError):
    """The requested object exceeds a configured size cap."""


class NotPrime(FinframeError):
    """The element is not a prime (point) of the frame."""


class NotDense(FinframeError):
    """The sublocale is not dense, violating a density hypothesis."""


class EmptyList(FinframeError):
    """An empty collection was given where a universe frame is required."""


class FrameMismatch(FinframeError):
    """Values attached to different frames were mixed in one operation."""


class MalformedJson(FinframeError):
    """The input text is not valid JSON or lacks required structure."""


class UnknownKind(FinframeError):
    """The frame description names an unsupported kind."""


class IntegrityError(FinframeError):
    """Two computations that must agree disagreed; indicates a kernel bug or corrupted tables."""


class OracleFailure(FinframeError):
    """A brute-force enumeration contradicted a structural guarantee."""
