"""
Exceptions raised by foldcc.

Validation problems are reported with plain ``ValueError`` (pydantic's
``ValidationError`` included). The classes here mark conditions that the
mathematics rules out, so seeing one means a bug or a broken precondition.
"""


class InvariantViolation(RuntimeError):
    """An internal invariant of the decoding pipeline did not hold."""


class SideInformationMismatch(InvariantViolation):
    """Error-free side information contradicts the candidate subspace.

    Under the decoding radius the true polynomial lies in the subspace, so the
    side-information system is always consistent. Callers that may operate
    beyond the radius catch this and report a detected failure instead.
    """
