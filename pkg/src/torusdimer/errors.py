"""Exception types shared across the package.

Everything derives from TorusDimerError so callers (and the CLI) can treat
"bad input" uniformly.  VerificationFailure is special: it signals that a
cross-check of a proved property came out false, which is a red alert rather
than a usage problem, and the CLI maps it to its own exit code.
"""


class TorusDimerError(Exception):
    """Base class for all errors raised by this package."""


class VerificationFailure(TorusDimerError):
    """A property that is proved in general failed on a concrete instance.

    Subclasses mark specific assert-level failures; the CLI maps this whole
    family to exit code 3.
    """


class BadParameters(TorusDimerError):
    """Arguments outside an operation's stated domain."""


class MissingRotation(TorusDimerError):
    """The operation needs a rotation system and the graph has none."""


class NotCellular(TorusDimerError):
    """The embedding is not cellular on the torus (Euler count is off)."""


class Unbalanced(TorusDimerError):
    """num_white != num_black, so no perfect matching can exist."""


class InvalidMatching(TorusDimerError):
    """An edge set that is not a perfect matching of the graph."""


class NoMatchings(TorusDimerError):
    """The graph admits no perfect matching at all."""


class ZeroHomology(TorusDimerError):
    """The operation needs a nonzero total homology vector."""


class InconsistentHeights(VerificationFailure):
    """Height increments failed to integrate; indicates an internal bug."""


class SigningInconsistent(VerificationFailure):
    """The GF(2) face-parity system has no solution (malformed face data)."""


class SigningMismatch(VerificationFailure):
    """A proposed edge signing violates the face-parity rule."""


class Disconnected(TorusDimerError):
    """gcd(n, a, b) != 1: the circulant digraph is not connected."""


class BruteForceTooLarge(TorusDimerError):
    """Exhaustive search refused beyond its hard size bound."""


class NotInLattice(TorusDimerError):
    """The vector is not a member of the given sublattice."""


class PreconditionViolated(TorusDimerError):
    """A lattice-path precondition failed; .reason names which one."""

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


class NotClosed(TorusDimerError):
    """A walk meant to be a circuit does not return to its start."""


class RepeatedVertex(TorusDimerError):
    """A walk meant to be a simple circuit revisits a vertex."""


class SingularMatrix(TorusDimerError):
    """The period matrix must be nonsingular."""


class NotVisible(TorusDimerError):
    """The point is a proper multiple of another lattice point."""


class OutsideTriangle(TorusDimerError):
    """The requested height change lies outside the realization triangle."""


class NoPatternFound(VerificationFailure):
    """No sign pattern of the four evaluations recovers the matching count."""
