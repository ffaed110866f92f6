"""Exception hierarchy.

Every error raised by the library derives from :class:`MovingEdgeError` so
callers can catch the whole family; the concrete classes also subclass
``ValueError`` because they all signal an argument outside an operation's
domain.
"""


class MovingEdgeError(ValueError):
    pass


class DomainError(MovingEdgeError):
    """Non-finite or otherwise invalid numeric input."""


class SingularArgumentError(MovingEdgeError):
    """The two-term asymptotic form of G was asked for at a = 0."""


class EdgeSingularityError(MovingEdgeError):
    """Exact field requested within the exclusion radius of the edge."""


class ShadowBoundaryError(MovingEdgeError):
    """GO field requested on (or within tolerance of) a shadow boundary."""


class SingularityLineError(MovingEdgeError):
    """Asymptotic diffracted field requested on one of its singular rays."""


class EdgeLocusError(MovingEdgeError):
    """Diffraction factors requested at the moving edge itself (r = 0)."""


class NoSuchWavefrontError(MovingEdgeError):
    """Equiphase level whose circle would have negative radius."""


class UndefinedLocusError(MovingEdgeError):
    """Locus that does not exist for the given motion (e.g. beta = 0)."""


class PreconditionError(MovingEdgeError):
    """Validation harness called outside its stated preconditions."""
