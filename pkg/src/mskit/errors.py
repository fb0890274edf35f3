"""Exception hierarchy.

Every error carries the CLI exit code it maps to, so the command line front
end never needs its own table.
"""


class MskitError(Exception):
    exit_code = 2


class BadInput(MskitError):
    """Unreadable file or JSON that does not match the expected format."""

    exit_code = 2


# -- surface complexes ------------------------------------------------------

class SurfaceError(MskitError):
    exit_code = 2


class MalformedGluing(SurfaceError):
    pass


class PuncturedVertex(SurfaceError):
    pass


class ForbiddenComponent(SurfaceError):
    pass


class ArcCountMismatch(SurfaceError):
    pass


class UnknownEdge(MskitError):
    exit_code = 5


class MissingCopy(MskitError):
    exit_code = 5


# -- charts and coloured quivers --------------------------------------------

class CrossingInput(MskitError):
    exit_code = 5


class InvalidArc(MskitError):
    exit_code = 5


class UnsupportedSurface(MskitError):
    exit_code = 4


class MissingWindow(MskitError):
    exit_code = 3


class VertexMismatch(MskitError):
    exit_code = 7


class WindowMismatch(MskitError):
    exit_code = 7


# -- type A algorithm -------------------------------------------------------

class IsolatedVertex(MskitError):
    exit_code = 6


class InconsistentQuiver(MskitError):
    exit_code = 6


class NotTypeA(MskitError):
    exit_code = 6


# -- quivers with potential -------------------------------------------------

class NotFullTriangulation(MskitError):
    exit_code = 7


class TwoCycleAtK(MskitError):
    exit_code = 7


class NonQuadraticRelations(MskitError):
    exit_code = 7
