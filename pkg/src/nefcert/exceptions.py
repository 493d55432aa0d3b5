"""Exception types shared across the package."""


class NefcertError(Exception):
    """Base class for all errors raised by this package."""


class NotAConfiguration(NefcertError):
    """The columns do not lie on a common affine hyperplane off the origin."""


class RepeatedColumns(NefcertError):
    """Input columns or points collide."""


class EmptyInput(NefcertError):
    """An operation received an empty point or column list."""


class DimensionMismatch(NefcertError):
    """Operands live in different ambient dimensions."""


class NotConnected(NefcertError):
    """A graph operation requires a connected graph."""


class NoEdges(NefcertError):
    """A graph operation requires at least one edge."""


class BadParams(NefcertError):
    """Invalid parameters for a named graph family."""


class CycleBudgetExceeded(NefcertError):
    """Odd-cycle enumeration exceeded its configured budget."""


class NonHomogeneousInput(NefcertError):
    """The binomial engine only accepts homogeneous input."""


class NotSquarefree(NefcertError):
    """A squarefree monomial ideal was required."""


class NotUnimodular(NefcertError):
    """A conformance check requires a unimodular configuration."""


class HypothesisNotMet(NefcertError):
    """A stated precondition on lattice points failed."""


class InternalInconsistency(NefcertError):
    """An internal cross-check failed; this always signals a bug."""
