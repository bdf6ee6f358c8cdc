"""Exception types raised by the geometry routines."""


class CPGeomError(ValueError):
    """Base class for all library errors."""


class ZeroVector(CPGeomError):
    """A homogeneous representative with (numerically) vanishing norm."""


class DimensionMismatch(CPGeomError):
    """Operands live in projective spaces of different dimension."""


class MissingPhase(CPGeomError):
    """A fiber phase is absent where its radius is nonzero."""


class EdgePoint(CPGeomError):
    """Octant-torus coordinates degenerate on the octant boundary."""


class OutsideChart(CPGeomError):
    """A map point falls outside the image of the octant."""


class DegeneratePair(CPGeomError):
    """Equal or antipodal endpoints define no unique great circle."""


class InvalidSigma(CPGeomError):
    """Schmidt angle outside the open interval (0, pi/4)."""


class InvalidRadius(CPGeomError):
    """Geodesic-sphere radius outside the valid range."""


class NotMaxEntangled(CPGeomError):
    """Operation requires a maximally entangled state."""


class OutOfRange(CPGeomError):
    """Scalar argument outside its documented domain."""


class EmptySample(CPGeomError):
    """Statistic requested on an empty sample."""
