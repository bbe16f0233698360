"""
Error Types

Every failure raised by the gsemi packages derives from GsemiError so the
command line can map it to an exit code in one place.
"""


class GsemiError(Exception):
    """Base class for all user-facing gsemi errors (exit code 1)."""

    exit_code = 1


class ParseError(GsemiError):
    """Input text does not follow the algebra/quiver file syntax."""


class ValidationError(GsemiError):
    """Input parsed but violates a structural invariant."""


class InfiniteDimensional(GsemiError):
    """A cycle of nonzero compositions makes the algebra infinite-dimensional."""


class NonQuadratic(GsemiError):
    """A relation of length other than 2 was declared."""


class NotComposable(GsemiError):
    """Two paths cannot be concatenated (target/source mismatch)."""


class NotStable(GsemiError):
    """Operation needs a non-projective Gorenstein projective module."""


class PatternViolation(GsemiError):
    """A stable representation has a nonzero entry between different indecomposables."""


class NotCovered(GsemiError):
    """No almost split sequence is known for the requested right end."""


class UnsupportedFormat(GsemiError):
    """Requested export format is not available for this object."""


class Disconnected(GsemiError):
    """Quiver is not connected."""


class ZeroModule(GsemiError):
    """Operation is undefined on the zero module."""


class NotEquivariant(GsemiError):
    """A realized map does not commute with the arrow actions."""


class ShapeMismatch(GsemiError):
    """Matrix shapes are not composable."""


class ModuleTooLarge(GsemiError):
    """Realized module exceeds the oracle's dimension limit."""


class OracleInconclusive(GsemiError):
    """The oracle could neither certify nor refute a claim (exit code 2)."""

    exit_code = 2


# is_isomorphic reports this name
Inconclusive = OracleInconclusive
