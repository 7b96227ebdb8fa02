"""Exception hierarchy.

Three families, matching the CLI exit codes: validation problems (bad
input, exit 2), budget overruns (state/term spaces too large, exit 3),
and internal invariant violations (exit 4).
"""


class NetOutageError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(NetOutageError):
    """Invalid input: malformed file, bad graph, bad parameters."""


class ParseError(ValidationError):
    """Network or partition file could not be parsed."""


class InvalidNetwork(ValidationError):
    """Structurally invalid network (bad indices, bad shapes)."""


class SourceEqualsTerminal(InvalidNetwork):
    """Source and terminal must be distinct nodes."""


class CyclicGraph(InvalidNetwork):
    """The directed graph contains a cycle."""


class NotConnected(InvalidNetwork):
    """No directed path exists from source to terminal."""


class NonPositiveSnr(ValidationError):
    """Mean SNR values must be strictly positive."""


class InvalidCount(ValidationError):
    """A count argument is out of range, e.g. a per-edge vector of the
    wrong length or an outage count above the block size."""


class PartitionMismatch(ValidationError):
    """Correlation partition does not cover the network's edge set."""


class DisjointCutsRequired(ValidationError):
    """The fast capacity route needs pairwise-disjoint minimal cut-sets."""


class InvalidConfig(ValidationError):
    """Simulation configuration is inconsistent or incomplete."""


class BudgetExceeded(NetOutageError):
    """An enumeration would exceed the configured budget."""


class TooManyEdges(BudgetExceeded):
    """Edge count exceeds the bitset limit or the 2^n state budget."""


class PathBudgetExceeded(BudgetExceeded):
    """Inclusion-exclusion over paths would exceed the term budget."""


class CutBudgetExceeded(BudgetExceeded):
    """Inclusion-exclusion over cuts would exceed the term budget."""


class InternalError(NetOutageError):
    """An internal invariant was violated; indicates a bug."""
