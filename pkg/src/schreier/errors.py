"""Exception types shared across the toolkit.

Every structured failure derives from ToolkitError and carries a witness
where one exists, so callers (and the CLI) can report the first offending
cell instead of a bare boolean.
"""


class ToolkitError(Exception):
    pass


class ShapeError(ToolkitError):
    """Malformed table, map, name list, or index data."""


class SizeLimit(ToolkitError):
    """A construction or search would exceed the configured bound."""


class NotAssociative(ToolkitError):
    def __init__(self, x, y, z):
        self.witness = (x, y, z)
        super().__init__("table not associative at (%d, %d, %d)" % (x, y, z))


class BadIdentity(ToolkitError):
    def __init__(self, identity, x):
        self.witness = x
        super().__init__("index %d is not a two-sided identity, fails at %d" % (identity, x))


class NotAHomomorphism(ToolkitError):
    def __init__(self, msg, witness=None):
        self.witness = witness
        super().__init__(msg)


class NotASubmonoid(ToolkitError):
    pass


class ComposabilityError(ToolkitError):
    """Sources and targets do not line up."""


class TriangleError(ToolkitError):
    """A map that must commute with the given projections does not."""


class NotPrefibration(ToolkitError):
    pass


class NotAnAction(ToolkitError):
    """A claimed strict action table fails one of the action axioms."""

    def __init__(self, msg, witness=None):
        self.witness = witness
        super().__init__(msg)


class InvalidAction(ToolkitError):
    """A lax action failed its axiom audit."""

    def __init__(self, msg, failing=()):
        self.failing = tuple(failing)
        super().__init__(msg)


class InvalidLaxHom(ToolkitError):
    def __init__(self, msg, witness=None):
        self.witness = witness
        super().__init__(msg)


class InvalidCell(ToolkitError):
    def __init__(self, msg, witness=None):
        self.witness = witness
        super().__init__(msg)


class InvalidCocycle(ToolkitError):
    def __init__(self, msg, witness=None):
        self.witness = witness
        super().__init__(msg)


class NotKernelPreserving(ToolkitError):
    pass


class NotCartesian(ToolkitError):
    pass


class NotRegular(ToolkitError):
    """A cocycle or twisting value is required to be invertible and is not."""


class NotRegularSchreier(ToolkitError):
    """Operation needs a fibration with commutative kernel."""


class VerificationError(ToolkitError):
    """A machine-checked identity that must hold failed.

    Raised when re-auditing a result that the theory guarantees; seeing one
    means the implementation (or the input's claimed provenance) is wrong.
    """

    def __init__(self, msg, witness=None):
        self.witness = witness
        super().__init__(msg)
