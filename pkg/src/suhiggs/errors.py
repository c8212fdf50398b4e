"""Exception hierarchy.

Two families matter to the CLI: input problems (``InputError``, exit 2) and
mathematical precondition failures (``DomainError``, exit 3).
"""


class InputError(ValueError):
    """Malformed or schema-violating input."""


class ParseError(InputError):
    pass


class SchemaError(InputError):
    pass


class DomainError(ValueError):
    """A mathematical precondition does not hold."""


class ShapeError(DomainError):
    pass


class CapacityError(DomainError):
    """Brute-force enumeration requested beyond the supported size."""


class StructureError(DomainError):
    """A claimed structure (fiber, multiset, pairing) fails its invariants."""


class RootVerificationError(StructureError):
    pass


class NonRegularPointError(DomainError):
    pass


class ReductionError(DomainError):
    pass


class GenericityError(DomainError):
    pass


class InternalInconsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""
