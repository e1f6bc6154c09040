"""Exception types shared across the package."""


class HoroautError(Exception):
    """Base class for all errors raised by this package."""


class InvalidRank(HoroautError):
    """Simple factor type/rank outside the classification bounds."""


class InvalidMarking(HoroautError):
    """Marked node does not exist, or was listed twice."""


class DimensionMismatch(HoroautError):
    """Vectors belong to root systems of different shapes."""


class NotDominant(HoroautError):
    """Weight has a negative fundamental-weight coefficient."""


class NotACharacterOfP(HoroautError):
    """Weight has a nonzero coefficient on an unmarked node."""


class FanError(HoroautError):
    """Base class for fan validation failures."""


class NotPrimitiveRay(FanError):
    """Ray generator is zero or not primitive."""


class NotSmooth(FanError):
    """A maximal cone is not generated by part of a lattice basis."""


class NotComplete(FanError):
    """The maximal cones do not cover the whole space."""


class BadFaceStructure(FanError):
    """Cones overlap badly, or indices/rays are inconsistent."""


class EmbeddingNotInjective(HoroautError):
    """The supplied lattice embedding has a kernel."""


class EmbeddingNotCharacterOfP(HoroautError):
    """An embedding weight is nonzero on an unmarked node."""


class PreconditionViolated(HoroautError):
    """Operation invoked outside its stated domain."""


class SchemaError(HoroautError):
    """Input document does not match the expected JSON shape."""
