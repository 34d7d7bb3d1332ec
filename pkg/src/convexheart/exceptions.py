"""Exception hierarchy shared by every module of the package."""


class HeartError(Exception):
    """Base class for all errors raised by convexheart."""


class InvalidPolygon(HeartError, ValueError):
    """Input vertices do not describe a valid convex body."""


class TooFewVertices(InvalidPolygon):
    pass


class NotConvex(InvalidPolygon):
    pass


class Degenerate(InvalidPolygon):
    """The vertices enclose zero area."""


class MonotonicityViolation(HeartError):
    """The fold admissibility predicate was not monotone in the offset."""


class InternalError(HeartError, RuntimeError):
    """A numerical invariant that must hold in exact arithmetic was broken."""


class PointTooCloseToBoundary(HeartError, ValueError):
    pass


class DegenerateTriangle(InvalidPolygon):
    pass


class NotObtuseConfiguration(HeartError, ValueError):
    pass


class ParseError(HeartError, ValueError):
    """A body file could not be read or does not match the schema."""
