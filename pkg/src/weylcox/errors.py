"""Error taxonomy shared by all modules.

DomainError marks bad input (inadmissible type, non-root vector, bad
transversal); StructuralError marks an internal inconsistency that should
never occur on valid data (corrupted matrix, failed cross-check) and must
abort the computation rather than degrade into a warning.
"""


class DomainError(ValueError):
    """Invalid argument for an operation."""


class StructuralError(RuntimeError):
    """Internal invariant violated; results would be meaningless."""
