"""Exception hierarchy shared across the engine.

Three broad classes map onto the CLI exit codes: validation failures
(bad input data, exit 2), precondition failures (structurally valid input
that violates an operation's contract, exit 3) and I/O or parse problems
(exit 4).
"""

from __future__ import annotations


class InvKahlerError(Exception):
    """Base class for every error raised by this package."""


class ValidationFailure(InvKahlerError):
    """Input data fails a structural invariant (Jacobi, J^2 = -I, ...)."""


class PreconditionFailure(InvKahlerError):
    """A contract precondition of an operation does not hold."""


class IOFailure(InvKahlerError):
    """File or JSON level problem."""


# -- validation ------------------------------------------------------------

class JacobiViolation(ValidationFailure):
    def __init__(self, i: int, j: int, k: int, residual=None):
        self.triple = (i, j, k)
        msg = f"Jacobi identity fails on basis triple ({i},{j},{k})"
        if residual is not None:
            msg += f": cyclic sum = {residual}"
        super().__init__(msg)


class IndexOutOfRange(ValidationFailure):
    pass


class DimensionMismatch(ValidationFailure):
    pass


class JSquareViolation(ValidationFailure):
    """J.J != -I; carries the first offending matrix entry."""

    def __init__(self, i: int, j: int, value):
        self.entry = (i, j)
        super().__init__(f"J^2 differs from -I at entry ({i},{j}): {value}")


class SingularMatrix(ValidationFailure):
    pass


class NotCommutative(ValidationFailure):
    pass


class NotAssociative(ValidationFailure):
    pass


class InvalidRealification(ValidationFailure):
    pass


class UnknownName(ValidationFailure):
    pass


class ParamOutOfRange(ValidationFailure):
    def __init__(self, name: str, value, admissible: str):
        self.param = name
        self.admissible = admissible
        super().__init__(f"parameter {name}={value} outside admissible range: {admissible}")


class ParseError(IOFailure):
    def __init__(self, message: str, field: str | None = None):
        self.field = field
        super().__init__(message if field is None else f"{field}: {message}")


# -- preconditions ----------------------------------------------------------

class NotIntegrable(PreconditionFailure):
    pass


class NotClosed(PreconditionFailure):
    pass


class NotCompatible(PreconditionFailure):
    pass


class Degenerate(PreconditionFailure):
    pass


class DegenerateMetric(PreconditionFailure):
    pass


class NotAnAutomorphism(PreconditionFailure):
    pass


class PreconditionFailed(PreconditionFailure):
    """Named clause of a compound precondition failed."""

    def __init__(self, clause: str):
        self.clause = clause
        super().__init__(f"precondition failed: {clause}")


class NotDirectSum(PreconditionFailure):
    pass


class ClosednessFailed(PreconditionFailure):
    def __init__(self, form_id: str):
        self.form_id = form_id
        super().__init__(f"associated 2-form {form_id} is not closed")
